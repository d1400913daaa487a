// The motivating counterexample: over Q(sqrt 2) with P = T^2 + (1+sqrt2)T +
// sqrt2, the pair (P + Ps, P*Ps) is not coprime, and the derived sequence
// fails strong divisibility at (m, n) = (2, 3).

#include <iostream>

#include "zsig/verify.hpp"

int main() {
    using namespace zsig;
    auto ext = std::get<RatQuadExt>(make_field("q-sqrt:2"));
    LucasSequence<Rationals> seq(parse_poly("T^2+(1+1*w)*T+(0+1*w)", ext));

    std::cout << "P      = " << print_poly(seq.P()) << "\n";
    std::cout << "P_s    = " << print_poly(seq.P_sigma()) << "\n";
    std::cout << "P+P_s  = " << print_poly(seq.sum_base()) << "\n";
    std::cout << "P*P_s  = " << print_poly(seq.prod_base()) << "\n";
    const auto& adm = seq.check_admissible();
    std::cout << "admissible: " << (adm.ok ? "yes" : "no")
              << "  witness gcd: " << print_poly(adm.witness_gcd) << "\n\n";

    for (uint32_t n = 1; n <= 6; ++n)
        std::cout << "L_" << n << " = " << print_poly(seq.term(n)) << "\n";
    std::cout << "\ngcd(L_2, L_3) = " << print_poly(gcd_monic(seq.term(2), seq.term(3)))
              << "  (L_1 = " << print_poly(seq.term(1)) << ")\n\n";

    auto report = verify_strong_divisibility(seq, 6);
    std::cout << report.to_text();
    return report.verdict == "counterexample" ? 0 : 1;
}

// Primitive-part table for f = T^2, g = T + 1 over F_3: indices divisible by
// the characteristic collapse to p-th powers and contribute nothing new,
// every other index's new part is exactly the cyclotomic value.

#include <iostream>

#include "zsig/primitive.hpp"

int main() {
    using namespace zsig;
    Fp k(3);
    ZsigSequence<Fp> seq(parse_poly("T^2", k), parse_poly("T+1", k));
    RngState rng(1);

    std::cout << seq.describe() << "\n";
    std::cout << record_tsv_header() << "\tnew_part\n";
    for (uint32_t n = 1; n <= 16; ++n) {
        auto rec = make_primitive_record(seq, n, StripMode::all_earlier, &rng);
        std::cout << record_tsv(rec) << "\t" << print_poly(rec.primitive_part) << "\n";
    }
    return 0;
}

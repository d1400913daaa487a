#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "zsig/factor.hpp"
#include "zsig/sequences.hpp"

// Primitive-part extraction and primitive-prime-divisor detection. A prime
// divisor of term(n) is primitive when it divides no earlier term; the
// primitive part is the product of all primitive prime divisors to their
// multiplicities, extracted here by gcd-stripping so that characteristic 0
// is fully supported without factoring.

namespace zsig {

using ojson = nlohmann::ordered_json;

enum class StripMode { all_earlier, divisors_only };

inline const char* strip_mode_name(StripMode m) {
    return m == StripMode::all_earlier ? "all-earlier" : "divisors-only";
}

/// term(n) with every irreducible factor shared with an earlier term removed
/// to full multiplicity. `all_earlier` strips against every m < n (the
/// definition); `divisors_only` against proper divisors of n, valid whenever
/// strong divisibility holds. Result is monic.
template <class S>
Poly<typename S::Field> stripped_new_part(const S& seq, uint32_t n,
                                          StripMode mode = StripMode::all_earlier) {
    require(n >= 1, "stripped_new_part: index must be positive");
    Poly<typename S::Field> cur = seq.term(n);
    require(!cur.is_zero(), "stripped_new_part: zero term");
    cur = monic(cur);
    std::vector<uint32_t> earlier;
    if (mode == StripMode::all_earlier) {
        for (uint32_t m = 1; m < n; ++m) earlier.push_back(m);
    } else {
        for (uint64_t d : divisors(n))
            if (d < n) earlier.push_back(static_cast<uint32_t>(d));
    }
    for (uint32_t m : earlier) {
        if (cur.degree() == 0) break;
        Poly<typename S::Field> e = seq.term(m);
        if (e.is_zero()) continue;
        auto g = gcd_monic(cur, e);
        while (g.degree() > 0) {
            cur = exact_div(cur, g);
            if (cur.degree() == 0) break;
            g = gcd_monic(cur, e);
        }
    }
    return cur;
}

template <class S>
bool has_primitive_prime_divisor(const S& seq, uint32_t n) {
    return stripped_new_part(seq, n, StripMode::all_earlier).degree() > 0;
}

template <class K>
struct PhiComparison {
    Poly<K> phi_monic;
    bool matches;  // monic Phi_n == stripped_new_part(all_earlier)
};

/// The cyclotomic route to the primitive part. Requires p not dividing n in
/// characteristic p; for lucas sequences n >= 2.
template <class S>
PhiComparison<typename S::Field> primitive_part_via_phi(const S& seq, uint32_t n) {
    Poly<typename S::Field> phi = monic(seq.phi_term(n));
    bool match = phi == stripped_new_part(seq, n, StripMode::all_earlier);
    return {std::move(phi), match};
}

/// Factor the primitive part over a finite field and re-validate each listed
/// irreducible against the definition by trial division.
template <class S>
Factorization<typename S::Field> primitive_divisors(const S& seq, uint32_t n, RngState& rng) {
    using K = typename S::Field;
    if constexpr (!K::is_finite) {
        throw error("primitive_divisors: factor listing unsupported over characteristic 0");
    } else {
        Poly<K> part = stripped_new_part(seq, n, StripMode::all_earlier);
        Factorization<K> fz = factor(part, rng);
        for (const auto& [pi, mult] : fz.factors) {
            require(divides(pi, seq.term(n)), "primitive_divisors: listed factor fails to divide the term");
            for (uint32_t m = 1; m < n; ++m)
                require(!divides(pi, seq.term(m)),
                        "primitive_divisors: listed factor divides an earlier term");
        }
        return fz;
    }
}

template <class K>
struct PrimitiveRecord {
    uint32_t index = 0;
    bool skipped = false;  // characteristic p > 0 and p | n
    long term_degree = 0;
    Poly<K> primitive_part;
    bool has_primitive = false;
    std::optional<bool> matches_phi;
    std::optional<Factorization<K>> primitive_factors;
};

template <class S>
PrimitiveRecord<typename S::Field> make_primitive_record(const S& seq, uint32_t n,
                                                         StripMode mode, RngState* rng) {
    using K = typename S::Field;
    const auto p = seq.characteristic();
    PrimitiveRecord<K> rec{n, p > 0 && n % p == 0, seq.term(n).degree(),
                           stripped_new_part(seq, n, mode), false, std::nullopt, std::nullopt};
    rec.has_primitive = rec.primitive_part.degree() > 0;
    if (!rec.skipped && (S::kind != SeqKind::lucas || n >= 2))
        rec.matches_phi = primitive_part_via_phi(seq, n).matches;
    if constexpr (K::is_finite) {
        if (rng != nullptr) rec.primitive_factors = primitive_divisors(seq, n, *rng);
    }
    return rec;
}

struct DegreeReport {
    long primitive_degree = 0;
    long phi_expected = 0;  // phi(n) * max input degree
    bool preconditions_met = false;
};

/// Observation-level degree count: deg of the primitive part against
/// phi(n) * max degree. Precondition violations (equal input degrees, index
/// divisible by the characteristic, lucas kind) are flagged, not fatal.
template <class S>
DegreeReport primitive_degree_report(const S& seq, uint32_t n) {
    const auto p = seq.characteristic();
    DegreeReport r;
    r.primitive_degree = stripped_new_part(seq, n, StripMode::all_earlier).degree();
    r.phi_expected = static_cast<long>(euler_phi(n)) * seq.input_degree_bound();
    r.preconditions_met =
        S::kind != SeqKind::lucas && seq.degrees_differ() && (p == 0 || n % p != 0);
    return r;
}

// --- serialization ----------------------------------------------------------

template <class K>
ojson factorization_json(const Factorization<K>& f, const K& k) {
    ojson arr = ojson::array();
    for (const auto& [poly, mult] : f.factors)
        arr.push_back(ojson{{"factor", print_poly(poly)}, {"multiplicity", mult}});
    return ojson{{"unit", textio::coeff_io<K>::str(k, f.unit)}, {"factors", arr}};
}

template <class K>
ojson record_json(const PrimitiveRecord<K>& rec, const K& k) {
    ojson j{{"n", rec.index},
            {"skipped", rec.skipped},
            {"deg_term", rec.term_degree},
            {"deg_primitive_part", rec.primitive_part.degree()},
            {"primitive_part", print_poly(rec.primitive_part)},
            {"has_primitive", rec.has_primitive}};
    j["matches_phi"] = rec.matches_phi ? ojson(*rec.matches_phi) : ojson(nullptr);
    j["primitive_factors"] =
        rec.primitive_factors ? factorization_json(*rec.primitive_factors, k) : ojson(nullptr);
    return j;
}

/// Columns: n, skipped, deg_term, deg_primitive_part, has_primitive,
/// matches_phi ('-' when not defined).
template <class K>
std::string record_tsv(const PrimitiveRecord<K>& rec) {
    std::string row = std::to_string(rec.index);
    row += "\t" + std::string(rec.skipped ? "1" : "0");
    row += "\t" + std::to_string(rec.term_degree);
    row += "\t" + std::to_string(rec.primitive_part.degree());
    row += "\t" + std::string(rec.has_primitive ? "1" : "0");
    row += "\t" + std::string(!rec.matches_phi ? "-" : (*rec.matches_phi ? "1" : "0"));
    return row;
}

inline const char* record_tsv_header() {
    return "n\tskipped\tdeg_term\tdeg_primitive_part\thas_primitive\tmatches_phi";
}

}  // namespace zsig

#pragma once

#include <vector>

#include "zsig/factor.hpp"
#include "zsig/poly.hpp"

// Brute-force factorization oracle for small finite fields, independent of
// the production factorizer: monic irreducibles are enumerated by exhaustive
// trial division, and inputs are factored by trial-dividing against that
// table. Complete for inputs of degree <= 2*max_deg + 1.

namespace zsig::testsupport {

template <class K>
std::vector<typename K::Elem> all_elements(const K& k) {
    if constexpr (std::is_same_v<K, Fp>) {
        std::vector<typename K::Elem> v;
        for (uint64_t x = 0; x < k.p; ++x) v.push_back(x);
        return v;
    } else {
        std::vector<typename K::Elem> v;
        for (uint64_t a = 0; a < k.base.p; ++a)
            for (uint64_t b = 0; b < k.base.p; ++b) v.push_back(k.make(a, b));
        return v;
    }
}

template <class K>
std::vector<Poly<K>> all_monic_of_degree(const K& k, long d) {
    const auto elems = all_elements(k);
    std::vector<Poly<K>> out;
    std::vector<std::size_t> odo(d, 0);
    while (true) {
        std::vector<typename K::Elem> c(d + 1, k.one());
        for (long i = 0; i < d; ++i) c[i] = elems[odo[i]];
        out.emplace_back(k, std::move(c));
        long pos = 0;
        while (pos < d && ++odo[pos] == elems.size()) odo[pos++] = 0;
        if (pos == d) break;
    }
    return out;
}

template <class K>
class FactorOracle {
  public:
    FactorOracle(K field, long max_deg) : k_(std::move(field)), max_deg_(max_deg) {
        for (long d = 1; d <= max_deg_; ++d) {
            for (auto& cand : all_monic_of_degree(k_, d)) {
                bool irreducible = true;
                for (const auto& irr : irreducibles_) {
                    if (2 * irr.degree() > d) break;
                    if (divides(irr, cand)) {
                        irreducible = false;
                        break;
                    }
                }
                if (irreducible) irreducibles_.push_back(std::move(cand));
            }
        }
    }

    const std::vector<Poly<K>>& irreducibles() const { return irreducibles_; }

    Factorization<K> factor(const Poly<K>& f) const {
        require(!f.is_zero(), "oracle: zero polynomial");
        Factorization<K> out{f.lc(), {}};
        Poly<K> rest = monic(f);
        for (const auto& irr : irreducibles_) {
            if (irr.degree() > rest.degree()) break;
            unsigned mult = 0;
            while (true) {
                auto qr = divrem(rest, irr);
                if (!qr.remainder.is_zero()) break;
                rest = qr.quotient;
                ++mult;
            }
            if (mult > 0) out.factors.emplace_back(irr, mult);
        }
        if (rest.degree() > 0) {
            // no factor of degree <= max_deg_ remains; irreducible as long as
            // the oracle's completeness bound holds
            require(rest.degree() <= 2 * max_deg_ + 1, "oracle: input exceeds completeness bound");
            out.factors.emplace_back(rest, 1);
        }
        std::sort(out.factors.begin(), out.factors.end(),
                  [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
        return out;
    }

  private:
    K k_;
    long max_deg_;
    std::vector<Poly<K>> irreducibles_;  // ascending (degree, coefficients)
};

template <class K>
bool factorizations_equal(const Factorization<K>& a, const Factorization<K>& b, const K& k) {
    if (!k.eq(a.unit, b.unit) || a.factors.size() != b.factors.size()) return false;
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        if (a.factors[i].second != b.factors[i].second) return false;
        if (!(a.factors[i].first == b.factors[i].first)) return false;
    }
    return true;
}

}  // namespace zsig::testsupport

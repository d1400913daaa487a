#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "zsig/poly.hpp"
#include "zsig/poly_text.hpp"
#include "zsig/rng.hpp"

// Complete factorization into monic irreducibles over finite coefficient
// fields (F_p and quadratic extensions of F_p): squarefree decomposition,
// distinct-degree splitting, and randomized equal-degree splitting with a
// deterministic generator. Characteristic 0 is rejected at runtime; the
// callers that need primitive parts there use gcd-stripping instead.

namespace zsig {

/// unit * prod factors[i].first ^ factors[i].second, factors monic
/// irreducible and pairwise distinct, sorted by (degree, coefficients).
template <class K>
struct Factorization {
    typename K::Elem unit;
    std::vector<std::pair<Poly<K>, unsigned>> factors;
};

template <class K>
std::string to_string(const Factorization<K>& f, const K& k) {
    std::string out = textio::coeff_io<K>::str(k, f.unit);
    for (const auto& [poly, mult] : f.factors) {
        out += " * (" + print_poly(poly) + ")";
        if (mult != 1) out += "^" + std::to_string(mult);
    }
    return out;
}

namespace detail {

template <class K>
typename K::Elem elem_pow(const K& k, typename K::Elem a, uint64_t e) {
    auto r = k.one();
    while (e) {
        if (e & 1) r = k.mul(r, a);
        a = k.mul(a, a);
        e >>= 1;
    }
    return r;
}

template <class K>
Poly<K> mod_reduce(const Poly<K>& a, const Poly<K>& m) {
    return divrem(a, m).remainder;
}

/// a^e mod m, e an arbitrary-precision exponent.
template <class K>
Poly<K> powmod_poly(Poly<K> a, const mpz_class& e, const Poly<K>& m) {
    Poly<K> r = Poly<K>::one(a.field());
    a = mod_reduce(a, m);
    if (sgn(e) == 0) return r;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mod_reduce(r * a, m);
        if (i + 1 < bits) a = mod_reduce(a * a, m);
    }
    return r;
}

/// Inverse Frobenius on coefficients: in F_{p^e}, c -> c^(p^(e-1)).
template <class K>
typename K::Elem pth_root_coeff(const K& k, const typename K::Elem& c) {
    if constexpr (std::is_same_v<K, Fp>) {
        return c;
    } else {
        return elem_pow(k, c, static_cast<uint64_t>(k.base.p));
    }
}

/// For f = u(T^p), the unique monic u-hat with (u-hat)^p = f.
template <class K>
Poly<K> pth_root_poly(const Poly<K>& f) {
    const K& k = f.field();
    const auto p = k.characteristic();
    require(f.degree() % static_cast<long>(p) == 0, "squarefree: malformed p-th power");
    std::vector<typename K::Elem> c(f.degree() / p + 1, k.zero());
    for (long i = 0; i <= f.degree(); ++i) {
        if (i % static_cast<long>(p) == 0) {
            c[i / p] = pth_root_coeff(k, f.coeff(i));
        } else {
            require(k.is_zero(f.coeff(i)), "squarefree: malformed p-th power");
        }
    }
    return Poly<K>(k, std::move(c));
}

}  // namespace detail

/// Squarefree decomposition of a nonzero non-constant polynomial over a
/// finite field (monic output parts). Multiplicity classes whose exponent is
/// divisible by p are handled by taking the p-th root and recursing.
template <class K>
std::vector<std::pair<Poly<K>, unsigned>> squarefree_decompose(const Poly<K>& input) {
    if constexpr (!K::is_finite) {
        throw error("squarefree: unsupported over characteristic 0");
    } else {
        const K& k = input.field();
        require(input.degree() >= 1, "squarefree: input must be non-constant");
        const auto p = static_cast<unsigned>(k.characteristic());
        Poly<K> f = monic(input);
        std::vector<std::pair<Poly<K>, unsigned>> out;

        Poly<K> c = gcd_monic(f, derivative(f));
        Poly<K> w = exact_div(f, c);
        unsigned i = 1;
        while (!w.is_one()) {
            Poly<K> y = gcd_monic(w, c);
            Poly<K> z = exact_div(w, y);
            if (!z.is_one()) out.emplace_back(std::move(z), i);
            w = std::move(y);
            c = exact_div(c, w);
            ++i;
        }
        if (!c.is_one()) {
            for (auto& [h, m] : squarefree_decompose(detail::pth_root_poly(c)))
                out.emplace_back(std::move(h), m * p);
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
        return out;
    }
}

/// Distinct-degree splitting of a monic squarefree polynomial: returns
/// (product of all irreducible factors of degree d, d), d ascending.
template <class K>
std::vector<std::pair<Poly<K>, long>> distinct_degree(const Poly<K>& input) {
    if constexpr (!K::is_finite) {
        throw error("distinct_degree: unsupported over characteristic 0");
    } else {
        const K& k = input.field();
        require(input.degree() >= 1 && input.is_monic(), "distinct_degree: input must be monic non-constant");
        require(gcd_monic(input, derivative(input)).is_one(), "distinct_degree: input must be squarefree");
        const mpz_class q = k.size();
        std::vector<std::pair<Poly<K>, long>> out;
        Poly<K> f = input;
        Poly<K> x = Poly<K>::variable(k);
        Poly<K> h = detail::mod_reduce(x, f);
        long d = 0;
        while (f.degree() > 0 && 2 * (d + 1) <= f.degree()) {
            ++d;
            h = detail::powmod_poly(h, q, f);
            Poly<K> g = gcd_monic(f, h - x);
            if (g.degree() > 0) {
                out.emplace_back(g, d);
                f = exact_div(f, g);
                h = detail::mod_reduce(h, f);
            }
        }
        if (f.degree() > 0) out.emplace_back(f, f.degree());
        return out;
    }
}

namespace detail {

template <class K>
void edf_recurse(const Poly<K>& f, long d, RngState& rng, std::vector<Poly<K>>& out) {
    const K& k = f.field();
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const mpz_class q = k.size();
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Poly<K> a = random_poly(k, rng, 1 + static_cast<long>(rng.below(f.degree() - 1)));
        Poly<K> g = gcd_monic(f, a);
        if (g.degree() == 0) {
            if (k.characteristic() == 2) {
                // trace map over F_2: a + a^2 + a^4 + ... splits the product
                const unsigned long reps =
                    K::extension_degree * static_cast<unsigned long>(d);
                Poly<K> acc = mod_reduce(a, f);
                Poly<K> sq = acc;
                for (unsigned long i = 1; i < reps; ++i) {
                    sq = mod_reduce(sq * sq, f);
                    acc = acc + sq;
                }
                g = gcd_monic(f, acc);
            } else {
                mpz_class e;
                mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
                e = (e - 1) / 2;
                Poly<K> b = powmod_poly(a, e, f);
                g = gcd_monic(f, b - Poly<K>::one(k));
            }
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf_recurse(g, d, rng, out);
            edf_recurse(exact_div(f, g), d, rng, out);
            return;
        }
    }
    throw error("equal_degree_split: no splitter found");
}

}  // namespace detail

/// Split a monic product of distinct irreducibles, all of degree d, into the
/// full factor list. Deterministic for a fixed RngState.
template <class K>
std::vector<Poly<K>> equal_degree_split(const Poly<K>& f, long d, RngState& rng) {
    if constexpr (!K::is_finite) {
        throw error("equal_degree_split: unsupported over characteristic 0");
    } else {
        require(f.degree() >= 1 && f.is_monic(), "equal_degree_split: input must be monic non-constant");
        require(d >= 1 && f.degree() % d == 0, "equal_degree_split: degree is not a multiple of d");
        std::vector<Poly<K>> out;
        detail::edf_recurse(f, d, rng, out);
        for (const auto& g : out)
            require(g.degree() == d,
                    "equal_degree_split: split produced a factor of unexpected degree");
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a, b); });
        return out;
    }
}

/// Complete factorization over a finite field. The re-multiplication
/// identity is re-checked on every call.
template <class K>
Factorization<K> factor(const Poly<K>& f, RngState& rng) {
    if constexpr (!K::is_finite) {
        throw error("factor: unsupported over characteristic 0");
    } else {
        const K& k = f.field();
        require(!f.is_zero(), "factor: zero polynomial");
        Factorization<K> result{f.lc(), {}};
        if (f.degree() == 0) return result;
        for (auto& [part, mult] : squarefree_decompose(f)) {
            for (auto& [prod, d] : distinct_degree(part)) {
                for (auto& irr : equal_degree_split(prod, d, rng))
                    result.factors.emplace_back(std::move(irr), mult);
            }
        }
        std::sort(result.factors.begin(), result.factors.end(),
                  [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
        Poly<K> check = Poly<K>::constant(k, result.unit);
        for (const auto& [poly, mult] : result.factors) check = check * poly.pow(mult);
        require(check == f, "factor: re-multiplication self-check failed");
        return result;
    }
}

}  // namespace zsig

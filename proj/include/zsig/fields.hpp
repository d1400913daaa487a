#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "zsig/common.hpp"
#include "zsig/rng.hpp"

// Exact arithmetic in the coefficient fields: prime fields F_p, the
// rationals, and quadratic extensions k(w) with w^2 = s*w + t and their
// conjugation sigma. Fields are small value types passed alongside their
// elements; all operations are pure.

namespace zsig {

namespace detail {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

inline uint64_t inv_mod_u64(uint64_t a, uint64_t p) {
    // extended Euclid on signed 128-bit intermediates
    __int128 t = 0, new_t = 1;
    __int128 r = p, new_r = a % p;
    while (new_r != 0) {
        __int128 q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw error("inverse does not exist");
    if (t < 0) t += p;
    return static_cast<uint64_t>(t);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// F_p
// ---------------------------------------------------------------------------

/// Prime field of a given characteristic p. Elements are residues in [0, p).
struct Fp {
    using Elem = uint64_t;
    static constexpr bool is_finite = true;
    static constexpr unsigned extension_degree = 1;  // over the prime field

    uint64_t p = 2;

    Fp() = default;
    explicit Fp(uint64_t prime) : p(prime) {
        require(prime >= 2 && prime < (uint64_t(1) << 62), "fp: modulus out of range");
        require(detail::is_prime_u64(prime), "fp: modulus " + std::to_string(prime) + " is not prime");
    }

    bool same(const Fp& o) const { return p == o.p; }
    unsigned long long characteristic() const { return p; }
    mpz_class size() const { return mpz_class(static_cast<unsigned long>(p)); }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem add(Elem a, Elem b) const {
        uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem mul(Elem a, Elem b) const { return detail::mulmod_u64(a, b, p); }
    Elem inv(Elem a) const {
        require(a != 0, "fp: inverse of zero");
        return detail::inv_mod_u64(a, p);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, uint64_t e) const { return detail::powmod_u64(a, e, p); }

    Elem from_long(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return static_cast<uint64_t>(r);
    }
    Elem from_mpz(const mpz_class& v) const {
        mpz_class r = v % mpz_class(static_cast<unsigned long>(p));
        if (r < 0) r += static_cast<unsigned long>(p);
        return r.get_ui();
    }

    Elem random_elem(RngState& rng) const { return rng.below(p); }
    bool elem_less(Elem a, Elem b) const { return a < b; }
    std::string describe() const { return "fp:" + std::to_string(p); }
};

// ---------------------------------------------------------------------------
// Q
// ---------------------------------------------------------------------------

/// The rational numbers. Elements are canonical mpq fractions (lowest terms,
/// positive denominator).
struct Rationals {
    using Elem = mpq_class;
    static constexpr bool is_finite = false;
    static constexpr unsigned extension_degree = 1;

    bool same(const Rationals&) const { return true; }
    unsigned long long characteristic() const { return 0; }

    Elem zero() const { return mpq_class(0); }
    Elem one() const { return mpq_class(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        require(sgn(a) != 0, "q: inverse of zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const {
        require(sgn(b) != 0, "q: division by zero");
        return a / b;
    }

    Elem from_long(long long v) const { return mpq_class(static_cast<long>(v)); }
    Elem from_fraction(const mpz_class& num, const mpz_class& den) const {
        require(sgn(den) != 0, "q: zero denominator");
        mpq_class r(num, den);
        r.canonicalize();
        return r;
    }

    /// Small random fraction; used by property tests and campaigns.
    Elem random_elem(RngState& rng) const {
        long num = static_cast<long>(rng.below(41)) - 20;
        long den = static_cast<long>(rng.below(6)) + 1;
        mpq_class r(num, den);
        r.canonicalize();
        return r;
    }
    bool elem_less(const Elem& a, const Elem& b) const { return cmp(a, b) < 0; }
    std::string describe() const { return "q"; }
};

// ---------------------------------------------------------------------------
// Quadratic extension k(w), w^2 = s*w + t
// ---------------------------------------------------------------------------

/// Degree-2 extension over a base field B (F_p or Q). Elements are pairs
/// (a, b) read as a + b*w. The generator satisfies w^2 = s*w + t, and the
/// non-identity automorphism is sigma(w) = s - w.
template <class B>
struct QuadExt {
    using Base = B;
    using BaseElem = typename B::Elem;
    using Elem = std::pair<BaseElem, BaseElem>;
    static constexpr bool is_finite = B::is_finite;
    static constexpr unsigned extension_degree = 2 * B::extension_degree;

    B base;
    BaseElem s, t;

    QuadExt() : base(), s(base.zero()), t(base.zero()) {}
    QuadExt(B base_field, BaseElem s_coef, BaseElem t_coef)
        : base(base_field), s(std::move(s_coef)), t(std::move(t_coef)) {
        require(irreducible_over_base(base, s, t),
                "quad_ext: x^2 - s*x - t is reducible over the base field");
    }

    /// True iff x^2 - s*x - t has no base-field root.
    static bool irreducible_over_base(const B& k, const BaseElem& s, const BaseElem& t) {
        if constexpr (std::is_same_v<B, Fp>) {
            for (uint64_t x = 0; x < k.p; ++x) {
                // x^2 == s*x + t ?
                if (k.eq(k.mul(x, x), k.add(k.mul(s, x), t))) return false;
            }
            return true;
        } else {
            // rational base: reducible iff the discriminant s^2 + 4t is a
            // square in Q, i.e. numerator and denominator of the canonical
            // form are both perfect integer squares
            mpq_class disc = s * s + 4 * t;
            if (sgn(disc) < 0) return true;
            if (sgn(disc) == 0) return false;
            return !(mpz_perfect_square_p(disc.get_num().get_mpz_t()) &&
                     mpz_perfect_square_p(disc.get_den().get_mpz_t()));
        }
    }

    bool same(const QuadExt& o) const {
        return base.same(o.base) && base.eq(s, o.s) && base.eq(t, o.t);
    }
    unsigned long long characteristic() const { return base.characteristic(); }
    mpz_class size() const { return base.size() * base.size(); }

    Elem zero() const { return {base.zero(), base.zero()}; }
    Elem one() const { return {base.one(), base.zero()}; }
    Elem gen() const { return {base.zero(), base.one()}; }
    Elem embed(const BaseElem& a) const { return {a, base.zero()}; }
    Elem make(const BaseElem& a, const BaseElem& b) const { return {a, b}; }

    bool is_zero(const Elem& x) const { return base.is_zero(x.first) && base.is_zero(x.second); }
    bool eq(const Elem& x, const Elem& y) const {
        return base.eq(x.first, y.first) && base.eq(x.second, y.second);
    }
    bool in_base(const Elem& x) const { return base.is_zero(x.second); }
    const BaseElem& base_part(const Elem& x) const {
        require(in_base(x), "quad_ext: element is not sigma-fixed");
        return x.first;
    }

    Elem add(const Elem& x, const Elem& y) const {
        return {base.add(x.first, y.first), base.add(x.second, y.second)};
    }
    Elem sub(const Elem& x, const Elem& y) const {
        return {base.sub(x.first, y.first), base.sub(x.second, y.second)};
    }
    Elem neg(const Elem& x) const { return {base.neg(x.first), base.neg(x.second)}; }
    Elem mul(const Elem& x, const Elem& y) const {
        // (a1 + b1 w)(a2 + b2 w), w^2 = s w + t
        const BaseElem bb = base.mul(x.second, y.second);
        BaseElem a = base.add(base.mul(x.first, y.first), base.mul(bb, t));
        BaseElem b = base.add(base.add(base.mul(x.first, y.second), base.mul(x.second, y.first)),
                              base.mul(bb, s));
        return {std::move(a), std::move(b)};
    }

    /// The non-identity automorphism: a + b*w  ->  (a + b*s) - b*w.
    Elem sigma(const Elem& x) const {
        return {base.add(x.first, base.mul(x.second, s)), base.neg(x.second)};
    }

    /// Norm x * sigma(x), always in the base field.
    BaseElem norm(const Elem& x) const {
        // a^2 + a b s - b^2 t
        return base.sub(base.add(base.mul(x.first, x.first),
                                 base.mul(base.mul(x.first, x.second), s)),
                        base.mul(base.mul(x.second, x.second), t));
    }

    Elem inv(const Elem& x) const {
        require(!is_zero(x), "quad_ext: inverse of zero");
        const BaseElem n_inv = base.inv(norm(x));
        Elem c = sigma(x);
        return {base.mul(c.first, n_inv), base.mul(c.second, n_inv)};
    }
    Elem div(const Elem& x, const Elem& y) const { return mul(x, inv(y)); }

    Elem from_long(long long v) const { return embed(base.from_long(v)); }

    Elem random_elem(RngState& rng) const {
        return {base.random_elem(rng), base.random_elem(rng)};
    }
    bool elem_less(const Elem& x, const Elem& y) const {
        if (!base.eq(x.first, y.first)) return base.elem_less(x.first, y.first);
        return base.elem_less(x.second, y.second);
    }

    std::string describe() const {
        if constexpr (std::is_same_v<B, Fp>) {
            return "fp2:" + std::to_string(base.p) + ":" + std::to_string(s) + ":" + std::to_string(t);
        } else {
            if (sgn(s) == 0 && t.get_den() == 1) return "q-sqrt:" + t.get_num().get_str();
            return "q-ext:" + s.get_num().get_str() + "/" + s.get_den().get_str() + ":" +
                   t.get_num().get_str() + "/" + t.get_den().get_str();
        }
    }
};

using FpQuadExt = QuadExt<Fp>;
using RatQuadExt = QuadExt<Rationals>;

// ---------------------------------------------------------------------------
// Field specification strings
// ---------------------------------------------------------------------------

/// Any coefficient field the library supports. Nesting of extensions is
/// rejected by construction: a QuadExt base is always Fp or Rationals.
using AnyField = std::variant<Fp, Rationals, FpQuadExt, RatQuadExt>;

namespace detail {

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

inline mpz_class parse_mpz(const std::string& text) {
    require(!text.empty(), "field spec: empty integer");
    std::size_t i = text[0] == '-' || text[0] == '+' ? 1 : 0;
    require(i < text.size(), "field spec: bad integer '" + text + "'");
    for (; i < text.size(); ++i)
        require(text[i] >= '0' && text[i] <= '9', "field spec: bad integer '" + text + "'");
    return mpz_class(text);
}

inline uint64_t parse_u64(const std::string& text) {
    mpz_class v = parse_mpz(text);
    require(sgn(v) >= 0 && v.fits_ulong_p(), "field spec: integer out of range '" + text + "'");
    return v.get_ui();
}

inline mpq_class parse_mpq(const std::string& text) {
    auto parts = split(text, '/');
    require(parts.size() <= 2, "field spec: bad fraction '" + text + "'");
    mpz_class num = parse_mpz(parts[0]);
    mpz_class den = parts.size() == 2 ? parse_mpz(parts[1]) : mpz_class(1);
    require(sgn(den) != 0, "field spec: zero denominator in '" + text + "'");
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace detail

/// Parse a field specification:
///   fp:<p> | q | q-sqrt:<d> | fp2:<p>:<s>:<t> | q-ext:<s_num>/<s_den>:<t_num>/<t_den>
inline AnyField make_field(const std::string& spec) {
    auto parts = detail::split(spec, ':');
    const std::string& kind = parts[0];
    if (kind == "fp") {
        require(parts.size() == 2, "field spec: expected fp:<p>");
        return Fp(detail::parse_u64(parts[1]));
    }
    if (kind == "q") {
        require(parts.size() == 1, "field spec: expected plain q");
        return Rationals{};
    }
    if (kind == "q-sqrt") {
        require(parts.size() == 2, "field spec: expected q-sqrt:<d>");
        Rationals q;
        mpq_class d(detail::parse_mpz(parts[1]));
        return RatQuadExt(q, q.zero(), d);
    }
    if (kind == "fp2") {
        require(parts.size() == 4, "field spec: expected fp2:<p>:<s>:<t>");
        Fp base(detail::parse_u64(parts[1]));
        return FpQuadExt(base, base.from_mpz(detail::parse_mpz(parts[2])),
                         base.from_mpz(detail::parse_mpz(parts[3])));
    }
    if (kind == "q-ext") {
        require(parts.size() == 3, "field spec: expected q-ext:<s>:<t>");
        Rationals q;
        return RatQuadExt(q, detail::parse_mpq(parts[1]), detail::parse_mpq(parts[2]));
    }
    throw error("field spec: unknown field kind '" + kind + "'");
}

inline std::string describe(const AnyField& f) {
    return std::visit([](const auto& k) { return k.describe(); }, f);
}

inline unsigned long long characteristic(const AnyField& f) {
    return std::visit([](const auto& k) { return k.characteristic(); }, f);
}

}  // namespace zsig

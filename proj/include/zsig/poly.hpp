#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zsig/fields.hpp"
#include "zsig/rng.hpp"

// Dense univariate polynomials in T over one coefficient field, with exact
// ring operations, division, gcd, valuations and the coefficientwise sigma
// map of quadratic extensions.

namespace zsig {

/// Degree of the zero polynomial (stands in for -infinity; every comparison
/// that matters is `deg < 0`).
inline constexpr long kZeroDegree = -1;

template <class K>
class Poly {
  public:
    using Field = K;
    using Elem = typename K::Elem;

    explicit Poly(K field) : k_(std::move(field)) {}
    Poly(K field, std::vector<Elem> coeffs) : k_(std::move(field)), c_(std::move(coeffs)) { trim(); }

    static Poly zero(const K& k) { return Poly(k); }
    static Poly constant(const K& k, Elem value) { return Poly(k, {std::move(value)}); }
    static Poly one(const K& k) { return constant(k, k.one()); }
    /// c * T^e
    static Poly term(const K& k, Elem c, std::size_t e) {
        std::vector<Elem> v(e + 1, k.zero());
        v[e] = std::move(c);
        return Poly(k, std::move(v));
    }
    static Poly variable(const K& k) { return term(k, k.one(), 1); }

    const K& field() const { return k_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && k_.eq(c_[0], k_.one()); }
    bool is_monic() const { return !c_.empty() && k_.eq(c_.back(), k_.one()); }

    const Elem& lc() const {
        require(!c_.empty(), "poly: leading coefficient of zero");
        return c_.back();
    }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : k_.zero(); }

    friend bool operator==(const Poly& a, const Poly& b) {
        require(a.k_.same(b.k_), "poly: descriptor mismatch in comparison");
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!a.k_.eq(a.c_[i], b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        const K& k = same_field(a, b);
        std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), k.zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = k.add(a.coeff(i), b.coeff(i));
        return Poly(k, std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        const K& k = same_field(a, b);
        std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), k.zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = k.sub(a.coeff(i), b.coeff(i));
        return Poly(k, std::move(r));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<Elem> r(a.c_);
        for (auto& x : r) x = a.k_.neg(x);
        return Poly(a.k_, std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        const K& k = same_field(a, b);
        if (a.is_zero() || b.is_zero()) return Poly(k);
        return Poly(k, mul_vec(k, a.c_, b.c_));
    }

    Poly mul_scalar(const Elem& s) const {
        if (k_.is_zero(s)) return Poly(k_);
        std::vector<Elem> r(c_);
        for (auto& x : r) x = k_.mul(x, s);
        return Poly(k_, std::move(r));
    }

    /// a^e by repeated squaring; a^0 = 1.
    Poly pow(uint64_t e) const {
        Poly result = one(k_);
        Poly base = *this;
        while (e) {
            if (e & 1) result = result * base;
            if (e >>= 1) base = base * base;
        }
        return result;
    }

    static const K& same_field(const Poly& a, const Poly& b) {
        require(a.k_.same(b.k_), "poly: descriptor mismatch");
        return a.k_;
    }

  private:
    K k_;
    std::vector<Elem> c_;

    void trim() {
        while (!c_.empty() && k_.is_zero(c_.back())) c_.pop_back();
    }

    // Schoolbook below the threshold, Karatsuba above it. The switch point is
    // a tunable constant; correctness does not depend on it.
    static constexpr std::size_t kKaratsubaThreshold = 64;

    static std::vector<Elem> mul_vec(const K& k, const std::vector<Elem>& a,
                                     const std::vector<Elem>& b) {
        if (std::min(a.size(), b.size()) <= kKaratsubaThreshold) return mul_school(k, a, b);
        return mul_karatsuba(k, a, b);
    }

    static std::vector<Elem> mul_school(const K& k, const std::vector<Elem>& a,
                                        const std::vector<Elem>& b) {
        std::vector<Elem> r(a.size() + b.size() - 1, k.zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (k.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
        }
        return r;
    }

    static std::vector<Elem> mul_karatsuba(const K& k, const std::vector<Elem>& a,
                                           const std::vector<Elem>& b) {
        const std::size_t h = (std::max(a.size(), b.size()) + 1) / 2;
        auto low = [&](const std::vector<Elem>& v) {
            return std::vector<Elem>(v.begin(), v.begin() + std::min(h, v.size()));
        };
        auto high = [&](const std::vector<Elem>& v) {
            return v.size() > h ? std::vector<Elem>(v.begin() + h, v.end()) : std::vector<Elem>{};
        };
        auto add_vec = [&](std::vector<Elem> x, const std::vector<Elem>& y) {
            if (x.size() < y.size()) x.resize(y.size(), k.zero());
            for (std::size_t i = 0; i < y.size(); ++i) x[i] = k.add(x[i], y[i]);
            return x;
        };
        std::vector<Elem> a0 = low(a), a1 = high(a), b0 = low(b), b1 = high(b);
        std::vector<Elem> z0 = a0.empty() || b0.empty() ? std::vector<Elem>{} : mul_vec(k, a0, b0);
        std::vector<Elem> z2 = a1.empty() || b1.empty() ? std::vector<Elem>{} : mul_vec(k, a1, b1);
        std::vector<Elem> sa = add_vec(a0, a1), sb = add_vec(b0, b1);
        std::vector<Elem> z1 = sa.empty() || sb.empty() ? std::vector<Elem>{} : mul_vec(k, sa, sb);
        // z1 -= z0 + z2
        for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = k.sub(z1[i], z0[i]);
        for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = k.sub(z1[i], z2[i]);
        std::vector<Elem> r(a.size() + b.size() - 1, k.zero());
        for (std::size_t i = 0; i < z0.size(); ++i) r[i] = k.add(r[i], z0[i]);
        for (std::size_t i = 0; i < z1.size(); ++i)
            if (i + h < r.size()) r[i + h] = k.add(r[i + h], z1[i]);
        for (std::size_t i = 0; i < z2.size(); ++i)
            if (i + 2 * h < r.size()) r[i + 2 * h] = k.add(r[i + 2 * h], z2[i]);
        return r;
    }
};

template <class K>
Poly<K> monic(const Poly<K>& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return a.mul_scalar(a.field().inv(a.lc()));
}

template <class K>
struct DivRem {
    Poly<K> quotient;
    Poly<K> remainder;
};

template <class K>
DivRem<K> divrem(const Poly<K>& a, const Poly<K>& b) {
    const K& k = Poly<K>::same_field(a, b);
    require(!b.is_zero(), "poly: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly<K>::zero(k), a};
    const auto lb_inv = k.inv(b.lc());
    std::vector<typename K::Elem> rem(a.coeffs());
    std::vector<typename K::Elem> quot(a.degree() - b.degree() + 1, k.zero());
    const long db = b.degree();
    for (long i = a.degree(); i >= db; --i) {
        if (k.is_zero(rem[i])) continue;
        auto q = k.mul(rem[i], lb_inv);
        for (long j = 0; j <= db; ++j)
            rem[i - db + j] = k.sub(rem[i - db + j], k.mul(q, b.coeff(j)));
        quot[i - db] = std::move(q);
    }
    return {Poly<K>(k, std::move(quot)), Poly<K>(k, std::move(rem))};
}

template <class K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) {
    auto qr = divrem(a, b);
    require(qr.remainder.is_zero(), "poly: division is not exact");
    return qr.quotient;
}

template <class K>
bool divides(const Poly<K>& d, const Poly<K>& a) {
    if (d.is_zero()) return a.is_zero();
    return divrem(a, d).remainder.is_zero();
}

namespace detail {

/// Plain monic Euclid; works over every coefficient field and is the
/// reference route the modular rational gcd is checked against.
template <class K>
Poly<K> gcd_euclid(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = divrem(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

// --- modular gcd over Q -----------------------------------------------------
//
// gcd in Q[T] through primitive integer polynomials: reduce both operands
// modulo word-size primes, gcd over F_p, CRT-combine, verify by exact
// division. A degree-0 modular image proves coprimality on its own (the
// rational gcd divides every modular gcd for primes not dividing both
// leading coefficients), which makes the coprime case — the bulk of every
// sweep — essentially free.

using ZVec = std::vector<mpz_class>;  // dense integer poly, no trailing zeros

inline void ztrim(ZVec& v) {
    while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

inline mpz_class zcontent(const ZVec& v) {
    mpz_class g = 0;
    for (const auto& c : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

/// Rational poly -> primitive integer poly with positive leading coefficient.
inline ZVec to_primitive_z(const Poly<Rationals>& a) {
    mpz_class den_lcm = 1;
    for (const auto& c : a.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    ZVec v;
    v.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) v.push_back(c.get_num() * (den_lcm / c.get_den()));
    mpz_class cont = zcontent(v);
    if (sgn(v.back()) < 0) cont = -cont;
    for (auto& c : v) c /= cont;
    return v;
}

inline Poly<Rationals> from_z(const ZVec& v) {
    std::vector<mpq_class> c;
    c.reserve(v.size());
    for (const auto& x : v) c.emplace_back(x);
    return Poly<Rationals>(Rationals{}, std::move(c));
}

/// 62-bit primes used by the CRT ladder, generated once.
inline const std::vector<uint64_t>& crt_primes() {
    static const std::vector<uint64_t> primes = [] {
        std::vector<uint64_t> v;
        uint64_t p = (uint64_t(1) << 62) - 1;
        while (v.size() < 64) {
            if (is_prime_u64(p)) v.push_back(p);
            --p;
        }
        return v;
    }();
    return primes;
}

inline Poly<Fp> z_mod_p(const ZVec& v, const Fp& k) {
    std::vector<uint64_t> c;
    c.reserve(v.size());
    for (const auto& x : v) c.push_back(k.from_mpz(x));
    return Poly<Fp>(k, std::move(c));
}

inline Poly<Rationals> gcd_rational(const Poly<Rationals>& a, const Poly<Rationals>& b) {
    ZVec az = to_primitive_z(a), bz = to_primitive_z(b);
    mpz_class lead_gcd;
    mpz_gcd(lead_gcd.get_mpz_t(), az.back().get_mpz_t(), bz.back().get_mpz_t());

    long best_deg = -2;      // -2: no image yet
    ZVec acc;                // CRT accumulator, symmetric representatives
    mpz_class modulus = 1;
    bool stable = false;

    for (uint64_t pword : crt_primes()) {
        Fp k(pword);
        if (k.from_mpz(az.back()) == 0 || k.from_mpz(bz.back()) == 0) continue;  // bad prime
        Poly<Fp> gp = gcd_euclid(z_mod_p(az, k), z_mod_p(bz, k));
        if (gp.degree() == 0) return Poly<Rationals>::one(Rationals{});
        if (best_deg >= 0 && gp.degree() > best_deg) continue;  // unlucky prime
        Poly<Fp> image = gp.mul_scalar(k.from_mpz(lead_gcd));
        if (best_deg < 0 || gp.degree() < best_deg) {
            best_deg = gp.degree();
            acc.assign(best_deg + 1, 0);
            modulus = 1;
            for (long i = 0; i <= best_deg; ++i) acc[i] = image.coeff(i);
            // symmetric range for single prime
            for (auto& c : acc)
                if (c * 2 > static_cast<long>(pword)) c -= static_cast<long>(pword);
            modulus = static_cast<unsigned long>(pword);
            stable = false;
        } else {
            // CRT-combine into acc modulo (modulus * pword)
            const mpz_class p_mpz(static_cast<unsigned long>(pword));
            mpz_class m_inv;
            mpz_invert(m_inv.get_mpz_t(), modulus.get_mpz_t(), p_mpz.get_mpz_t());
            const mpz_class new_mod = modulus * p_mpz;
            bool changed = false;
            for (long i = 0; i <= best_deg; ++i) {
                mpz_class target(static_cast<unsigned long>(image.coeff(i)));
                mpz_class delta = ((target - acc[i]) * m_inv) % p_mpz;
                if (sgn(delta) < 0) delta += p_mpz;
                mpz_class lifted = acc[i] + delta * modulus;
                if (lifted * 2 > new_mod) lifted -= new_mod;
                if (lifted != acc[i]) changed = true;
                acc[i] = std::move(lifted);
            }
            modulus = new_mod;
            stable = !changed;
        }
        if (stable || best_deg == 0) {
            ZVec cand = acc;
            ztrim(cand);
            if (static_cast<long>(cand.size()) - 1 != best_deg) continue;
            mpz_class cont = zcontent(cand);
            if (sgn(cand.back()) < 0) cont = -cont;
            for (auto& c : cand) c /= cont;
            Poly<Rationals> g = from_z(cand);
            if (divides(g, from_z(az)) && divides(g, from_z(bz))) return monic(g);
        }
    }
    // fallback: exhausted the prime ladder (pathological sizes) — take the
    // slow exact route
    return gcd_euclid(a, b);
}

}  // namespace detail

/// Monic greatest common divisor. gcd(a, 0) = monic(a); gcd(0, 0) errors.
template <class K>
Poly<K> gcd_monic(const Poly<K>& a, const Poly<K>& b) {
    Poly<K>::same_field(a, b);
    require(!(a.is_zero() && b.is_zero()), "poly: gcd of two zero polynomials");
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if constexpr (std::is_same_v<K, Rationals>) {
        return detail::gcd_rational(a, b);
    } else {
        return detail::gcd_euclid(a, b);
    }
}

/// Largest e with pi^e | f (pi any non-constant divisor candidate).
template <class K>
long ord_at(const Poly<K>& f, const Poly<K>& pi) {
    Poly<K>::same_field(f, pi);
    require(!f.is_zero(), "ord_at: zero polynomial has no finite valuation");
    require(pi.degree() >= 1, "ord_at: divisor must be non-constant");
    long e = 0;
    Poly<K> cur = f;
    while (cur.degree() >= pi.degree()) {
        auto qr = divrem(cur, pi);
        if (!qr.remainder.is_zero()) break;
        cur = std::move(qr.quotient);
        ++e;
    }
    return e;
}

template <class K>
Poly<K> derivative(const Poly<K>& a) {
    const K& k = a.field();
    if (a.degree() < 1) return Poly<K>::zero(k);
    std::vector<typename K::Elem> r(a.degree(), k.zero());
    for (long i = 1; i <= a.degree(); ++i) {
        auto m = k.from_long(i);
        r[i - 1] = k.mul(a.coeff(i), m);
    }
    return Poly<K>(k, std::move(r));
}

template <class K>
typename K::Elem eval(const Poly<K>& a, const typename K::Elem& x) {
    const K& k = a.field();
    auto acc = k.zero();
    for (long i = a.degree(); i >= 0; --i) acc = k.add(k.mul(acc, x), a.coeff(i));
    return acc;
}

/// Canonical ordering used for factor lists: by degree, then coefficients
/// compared from the top down.
template <class K>
bool poly_less(const Poly<K>& a, const Poly<K>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const K& k = a.field();
    for (long i = a.degree(); i >= 0; --i) {
        if (!k.eq(a.coeff(i), b.coeff(i))) return k.elem_less(a.coeff(i), b.coeff(i));
    }
    return false;
}

/// Uniform random polynomial of degree exactly `deg` (monic if requested).
template <class K>
Poly<K> random_poly(const K& k, RngState& rng, long deg, bool monic_out = false) {
    require(deg >= 0, "random_poly: negative degree");
    std::vector<typename K::Elem> c(deg + 1, k.zero());
    for (long i = 0; i < deg; ++i) c[i] = k.random_elem(rng);
    if (monic_out) {
        c[deg] = k.one();
    } else {
        do {
            c[deg] = k.random_elem(rng);
        } while (k.is_zero(c[deg]));
    }
    return Poly<K>(k, std::move(c));
}

// ---------------------------------------------------------------------------
// sigma on coefficients, base-field membership, projection
// ---------------------------------------------------------------------------

/// Coefficientwise sigma: P = sum a_i T^i  ->  sum sigma(a_i) T^i.
template <class B>
Poly<QuadExt<B>> coeff_map_sigma(const Poly<QuadExt<B>>& p) {
    const QuadExt<B>& e = p.field();
    std::vector<typename QuadExt<B>::Elem> c(p.coeffs());
    for (auto& x : c) x = e.sigma(x);
    return Poly<QuadExt<B>>(e, std::move(c));
}

/// True iff every coefficient is sigma-fixed (lies in the base field).
template <class B>
bool in_base_field(const Poly<QuadExt<B>>& p) {
    const QuadExt<B>& e = p.field();
    for (const auto& x : p.coeffs())
        if (!e.in_base(x)) return false;
    return true;
}

/// Re-type a sigma-fixed polynomial over the base field. Errors if any
/// coefficient has a nonzero generator component.
template <class B>
Poly<B> project_to_base(const Poly<QuadExt<B>>& p) {
    const QuadExt<B>& e = p.field();
    std::vector<typename B::Elem> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.push_back(e.base_part(x));
    return Poly<B>(e.base, std::move(c));
}

template <class B>
Poly<QuadExt<B>> embed_in_ext(const Poly<B>& p, const QuadExt<B>& e) {
    require(e.base.same(p.field()), "embed: base field mismatch");
    std::vector<typename QuadExt<B>::Elem> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.push_back(e.embed(x));
    return Poly<QuadExt<B>>(e, std::move(c));
}

}  // namespace zsig

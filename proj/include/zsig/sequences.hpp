#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "zsig/cyclotomic.hpp"
#include "zsig/poly.hpp"
#include "zsig/poly_text.hpp"

// The three polynomial power-difference families:
//   zsigmondy  f_n = f^n - g^n          (f, g nonzero coprime over k)
//   bang       h_n = f^n - 1            (f a nonzero non-unit over k)
//   lucas      L_n = (P^n - Ps^n)/(P - Ps) with Ps the coefficientwise
//              sigma-image of P over a quadratic extension; L_n lies in k[T].
// Terms are memoized per sequence; generators are immutable after
// construction and all term computation is pure.

namespace zsig {

enum class SeqKind { zsigmondy, bang, lucas };

inline const char* seq_kind_name(SeqKind k) {
    switch (k) {
        case SeqKind::zsigmondy: return "zsigmondy";
        case SeqKind::bang: return "bang";
        default: return "lucas";
    }
}

template <class K>
class ZsigSequence {
  public:
    using Field = K;
    static constexpr SeqKind kind = SeqKind::zsigmondy;

    ZsigSequence(Poly<K> f, Poly<K> g)
        : k_(Poly<K>::same_field(f, g)), f_(std::move(f)), g_(std::move(g)) {
        require(!f_.is_zero() && !g_.is_zero(), "zsigmondy: f and g must be nonzero");
        require(gcd_monic(f_, g_).is_one(), "zsigmondy: f and g must be coprime");
        f_pow_.push_back(Poly<K>::one(k_));
        g_pow_.push_back(Poly<K>::one(k_));
    }

    const K& field() const { return k_; }
    unsigned long long characteristic() const { return k_.characteristic(); }
    const Poly<K>& f() const { return f_; }
    const Poly<K>& g() const { return g_; }

    Poly<K> term(uint32_t n) const {
        require(n >= 1, "term index must be positive");
        ensure(n);
        return f_pow_[n] - g_pow_[n];
    }

    Poly<K> phi_term(uint64_t n) const { return phi_homog(n, f_, g_); }

    long input_degree_bound() const { return std::max(f_.degree(), g_.degree()); }
    bool degrees_differ() const { return f_.degree() != g_.degree(); }

    std::string describe() const {
        return "zsigmondy field=" + k_.describe() + " f=" + print_poly(f_) +
               " g=" + print_poly(g_);
    }

  private:
    void ensure(uint32_t n) const {
        while (f_pow_.size() <= n) {
            f_pow_.push_back(f_pow_.back() * f_);
            g_pow_.push_back(g_pow_.back() * g_);
        }
    }
    K k_;
    Poly<K> f_, g_;
    mutable std::vector<Poly<K>> f_pow_, g_pow_;
};

template <class K>
class BangSequence {
  public:
    using Field = K;
    static constexpr SeqKind kind = SeqKind::bang;

    explicit BangSequence(Poly<K> f) : k_(f.field()), f_(std::move(f)) {
        require(f_.degree() >= 1, "bang: f must be a nonzero non-unit");
        f_pow_.push_back(Poly<K>::one(k_));
    }

    const K& field() const { return k_; }
    unsigned long long characteristic() const { return k_.characteristic(); }
    const Poly<K>& f() const { return f_; }

    Poly<K> term(uint32_t n) const {
        require(n >= 1, "term index must be positive");
        ensure(n);
        return f_pow_[n] - Poly<K>::one(k_);
    }

    Poly<K> phi_term(uint64_t n) const { return phi_homog(n, f_, Poly<K>::one(k_)); }

    long input_degree_bound() const { return f_.degree(); }
    bool degrees_differ() const { return true; }  // deg f >= 1 > 0 = deg 1

    std::string describe() const {
        return "bang field=" + k_.describe() + " f=" + print_poly(f_);
    }

  private:
    void ensure(uint32_t n) const {
        while (f_pow_.size() <= n) f_pow_.push_back(f_pow_.back() * f_);
    }
    K k_;
    Poly<K> f_;
    mutable std::vector<Poly<K>> f_pow_;
};

template <class B>
struct Admissibility {
    bool ok;
    Poly<B> witness_gcd;  // gcd(P + Ps, P*Ps) projected to the base field
};

template <class B>
class LucasSequence {
  public:
    using Field = B;
    using Ext = QuadExt<B>;
    static constexpr SeqKind kind = SeqKind::lucas;

    explicit LucasSequence(Poly<Ext> p)
        : e_(p.field()), p_(std::move(p)), ps_(coeff_map_sigma(p_)) {
        require(p_ != ps_, "lucas: P must differ from its sigma-image");
        p_pow_.push_back(Poly<Ext>::one(e_));
        ps_pow_.push_back(Poly<Ext>::one(e_));
        sum_base_ = project_to_base(p_ + ps_);
        prod_base_ = project_to_base(p_ * ps_);
        Poly<B> g = gcd_monic(sum_base_, prod_base_);
        admissible_ = {g.degree() == 0, std::move(g)};
    }

    const B& field() const { return e_.base; }
    const Ext& ext_field() const { return e_; }
    unsigned long long characteristic() const { return e_.characteristic(); }
    const Poly<Ext>& P() const { return p_; }
    const Poly<Ext>& P_sigma() const { return ps_; }
    const Poly<B>& sum_base() const { return sum_base_; }    // P + Ps in k[T]
    const Poly<B>& prod_base() const { return prod_base_; }  // P*Ps in k[T]

    /// L_n in k[T]; L_1 = 1.
    Poly<B> term(uint32_t n) const {
        require(n >= 1, "term index must be positive");
        ensure(n);
        while (l_.size() <= n) l_.push_back(std::nullopt);
        if (!l_[n]) l_[n] = project_to_base(exact_div(lprime(n), lprime(1)));
        return *l_[n];
    }

    /// L'_n = P^n - Ps^n over the extension.
    Poly<Ext> lprime(uint32_t n) const {
        require(n >= 1, "term index must be positive");
        ensure(n);
        return p_pow_[n] - ps_pow_[n];
    }

    /// L-hat_n = P^n + Ps^n in k[T].
    Poly<B> lhat(uint32_t n) const {
        require(n >= 1, "term index must be positive");
        ensure(n);
        return project_to_base(p_pow_[n] + ps_pow_[n]);
    }

    Poly<B> phi_term(uint64_t n) const { return phi_lucas(n, p_, ps_); }

    /// Coprimality of P + Ps and P*Ps in k[T]; the gcd is the witness when
    /// it fails. Inadmissible P is constructible on purpose — the divisor
    /// structure of its sequence is itself of interest.
    const Admissibility<B>& check_admissible() const { return admissible_; }

    long input_degree_bound() const { return p_.degree(); }
    bool degrees_differ() const { return false; }  // deg P == deg Ps always

    std::string describe() const {
        return "lucas field=" + e_.describe() + " P=" + print_poly(p_);
    }

  private:
    void ensure(uint32_t n) const {
        while (p_pow_.size() <= n) {
            p_pow_.push_back(p_pow_.back() * p_);
            ps_pow_.push_back(ps_pow_.back() * ps_);
        }
    }
    Ext e_;
    Poly<Ext> p_, ps_;
    Poly<B> sum_base_{B{}};
    Poly<B> prod_base_{B{}};
    Admissibility<B> admissible_{false, Poly<B>(B{})};
    mutable std::vector<Poly<Ext>> p_pow_, ps_pow_;
    mutable std::vector<std::optional<Poly<B>>> l_;
};

/// Nonnegative (c, d) with c*n - d*m = gcd(m, n); exists for all m, n >= 1.
/// Used to exercise the gcd-identity checks, never by the generators.
inline std::pair<uint64_t, uint64_t> bezout_pair(uint64_t m, uint64_t n) {
    require(m >= 1 && n >= 1, "bezout_pair: indices must be positive");
    const uint64_t l = std::gcd(m, n);
    for (uint64_t c = 1;; ++c) {
        if ((c * n - l) % m == 0) return {c, (c * n - l) / m};
    }
}

}  // namespace zsig

#pragma once

#include <cstdint>
#include <vector>

#include "zsig/poly.hpp"

// Arithmetic functions and homogeneous cyclotomic polynomials. Phi_n(A, B)
// is the two-variable homogenization of the n-th cyclotomic polynomial; the
// product over divisors reconstructs A^n - B^n.

namespace zsig {

/// Moebius function, by trial-division factorization of n.
inline int mobius(uint64_t n) {
    require(n >= 1, "mobius: n must be positive");
    int factors = 0;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++factors;
        }
    }
    if (n > 1) ++factors;
    return factors % 2 == 0 ? 1 : -1;
}

/// Euler totient, by trial division.
inline uint64_t euler_phi(uint64_t n) {
    require(n >= 1, "euler_phi: n must be positive");
    uint64_t result = n;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline std::vector<uint64_t> divisors(uint64_t n) {
    require(n >= 1, "divisors: n must be positive");
    std::vector<uint64_t> small, large;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Sieve-backed tables of mu, phi and divisor lists up to n_max. Built once,
/// then read-only; sweeps use it instead of refactoring every index.
class ArithCache {
  public:
    explicit ArithCache(uint64_t n_max = 512) : n_max_(n_max), mu_(n_max + 1, 1), phi_(n_max + 1) {
        std::vector<uint64_t> smallest(n_max + 1, 0);
        for (uint64_t i = 0; i <= n_max; ++i) phi_[i] = i;
        for (uint64_t p = 2; p <= n_max; ++p) {
            if (smallest[p] != 0) continue;
            for (uint64_t m = p; m <= n_max; m += p) {
                if (smallest[m] == 0) smallest[m] = p;
                phi_[m] -= phi_[m] / p;
                mu_[m] = m / p % p == 0 ? 0 : -mu_[m];
            }
        }
        divisors_.resize(n_max + 1);
        for (uint64_t d = 1; d <= n_max; ++d)
            for (uint64_t m = d; m <= n_max; m += d) divisors_[m].push_back(d);
    }

    uint64_t n_max() const { return n_max_; }
    int mobius(uint64_t n) const {
        check(n);
        return mu_[n];
    }
    uint64_t euler_phi(uint64_t n) const {
        check(n);
        return phi_[n];
    }
    const std::vector<uint64_t>& divisors(uint64_t n) const {
        check(n);
        return divisors_[n];
    }

  private:
    void check(uint64_t n) const {
        require(n >= 1 && n <= n_max_, "ArithCache: index out of range");
    }
    uint64_t n_max_;
    std::vector<int> mu_;
    std::vector<uint64_t> phi_;
    std::vector<std::vector<uint64_t>> divisors_;
};

/// Homogeneous cyclotomic polynomial Phi_n(A, B), computed as the quotient
///   prod_{d|n, mu(n/d)=1} (A^d - B^d)  /  prod_{d|n, mu(n/d)=-1} (A^d - B^d).
/// The division is exact by construction and doubles as a self-check. In
/// characteristic p the index n must not be divisible by p: the quotient is
/// not a valid identity at such n, and downstream statements delete those
/// indices, so the call refuses loudly instead.
template <class K>
Poly<K> phi_homog(uint64_t n, const Poly<K>& a, const Poly<K>& b) {
    const K& k = Poly<K>::same_field(a, b);
    require(n >= 1, "phi_homog: n must be positive");
    require(!a.is_zero() && !b.is_zero(), "phi_homog: zero input");
    const auto p = k.characteristic();
    require(p == 0 || n % p != 0, "phi_homog: index divisible by the characteristic");
    Poly<K> num = Poly<K>::one(k);
    Poly<K> den = Poly<K>::one(k);
    Poly<K> a_pow = Poly<K>::one(k);
    Poly<K> b_pow = Poly<K>::one(k);
    uint64_t reached = 0;
    for (uint64_t d : divisors(n)) {
        int mu = mobius(n / d);
        if (mu == 0) continue;
        while (reached < d) {
            a_pow = a_pow * a;
            b_pow = b_pow * b;
            ++reached;
        }
        Poly<K> diff = a_pow - b_pow;
        require(!diff.is_zero(), "phi_homog: A^d equals B^d, quotient undefined");
        (mu == 1 ? num : den) = (mu == 1 ? num : den) * diff;
    }
    return exact_div(num, den);
}

/// Phi_n(P, P_sigma) as a base-field polynomial (n >= 2; the d = 1 factor
/// P - P_sigma is excluded from every statement about the derived sequence).
/// Projection failure signals an arithmetic bug, not bad input: the value is
/// sigma-symmetric mathematically.
template <class B>
Poly<B> phi_lucas(uint64_t n, const Poly<QuadExt<B>>& p, const Poly<QuadExt<B>>& p_sigma) {
    require(n >= 2, "phi_lucas: n must be at least 2");
    return project_to_base(phi_homog(n, p, p_sigma));
}

}  // namespace zsig

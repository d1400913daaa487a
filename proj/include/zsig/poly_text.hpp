#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "zsig/poly.hpp"

// Text form of polynomials, parse and print, round-trip stable:
//   terms `c`, `c*T^e`, `c*T`, `T^e`, `T`, joined by `+`/`-`; coefficients
//   are integers (prime fields), `num/den` (rationals) or `(a+b*w)`
//   (quadratic extensions, generator printed as `w`).

namespace zsig {

namespace textio {

template <class K>
struct coeff_io;

template <>
struct coeff_io<Fp> {
    static bool is_negative(const Fp&, const Fp::Elem&) { return false; }
    static Fp::Elem abs(const Fp&, const Fp::Elem& e) { return e; }
    static std::string str(const Fp&, const Fp::Elem& e) { return std::to_string(e); }
};

template <>
struct coeff_io<Rationals> {
    static bool is_negative(const Rationals&, const mpq_class& e) { return sgn(e) < 0; }
    static mpq_class abs(const Rationals&, const mpq_class& e) { return ::abs(e); }
    static std::string str(const Rationals&, const mpq_class& e) {
        std::string s = e.get_num().get_str();
        if (e.get_den() != 1) s += "/" + e.get_den().get_str();
        return s;
    }
};

template <class B>
struct coeff_io<QuadExt<B>> {
    using K = QuadExt<B>;
    using Elem = typename K::Elem;
    static bool is_negative(const K& k, const Elem& e) {
        return k.base.is_zero(e.second) && coeff_io<B>::is_negative(k.base, e.first);
    }
    static Elem abs(const K& k, const Elem& e) { return is_negative(k, e) ? k.neg(e) : e; }
    static std::string str(const K& k, const Elem& e) {
        const B& b = k.base;
        if (b.is_zero(e.second)) return coeff_io<B>::str(b, e.first);
        std::string a_part = coeff_io<B>::is_negative(b, e.first)
                                 ? "-" + coeff_io<B>::str(b, coeff_io<B>::abs(b, e.first))
                                 : coeff_io<B>::str(b, e.first);
        bool w_neg = coeff_io<B>::is_negative(b, e.second);
        std::string w_part = coeff_io<B>::str(b, coeff_io<B>::abs(b, e.second));
        return "(" + a_part + (w_neg ? "-" : "+") + w_part + "*w)";
    }
};

}  // namespace textio

template <class K>
std::string print_poly(const Poly<K>& p) {
    using io = textio::coeff_io<K>;
    const K& k = p.field();
    if (p.is_zero()) return "0";
    std::string out;
    for (long i = p.degree(); i >= 0; --i) {
        auto c = p.coeff(i);
        if (k.is_zero(c)) continue;
        const bool neg = io::is_negative(k, c);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        auto a = io::abs(k, c);
        if (i == 0) {
            out += io::str(k, a);
        } else {
            if (!k.eq(a, k.one())) out += io::str(k, a) + "*";
            out += i == 1 ? "T" : "T^" + std::to_string(i);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

namespace textio {

class Cursor {
  public:
    explicit Cursor(const std::string& text) : s_(text) {}

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw error("poly parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    mpz_class natural() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
        if (pos_ == start) fail("expected a number");
        return mpz_class(s_.substr(start, pos_ - start));
    }

    /// natural or natural/natural, with an already-consumed sign applied
    std::pair<mpz_class, mpz_class> fraction(bool negative) {
        mpz_class num = natural();
        mpz_class den = 1;
        if (accept('/')) {
            den = natural();
            if (sgn(den) == 0) fail("zero literal denominator");
        }
        if (negative) num = -num;
        return {num, den};
    }

    std::size_t position() const { return pos_; }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

/// Reduce num/den into the field; errors when the denominator vanishes
/// there (e.g. 1/2 in characteristic 2).
template <class K>
typename K::Elem elem_from_fraction(const K& k, const mpz_class& num, const mpz_class& den,
                                    Cursor& cur) {
    if constexpr (std::is_same_v<K, Fp>) {
        auto d = k.from_mpz(den);
        if (k.is_zero(d)) cur.fail("denominator vanishes in " + k.describe());
        return k.div(k.from_mpz(num), d);
    } else if constexpr (std::is_same_v<K, Rationals>) {
        return k.from_fraction(num, den);
    } else {
        return k.embed(elem_from_fraction(k.base, num, den, cur));
    }
}

template <class K>
bool try_parse_coeff(const K& k, Cursor& cur, typename K::Elem& out);

/// `(a+b*w)` and friendly variants `(a)`, `(b*w)`, `(a-b*w)`, `(w)`, with
/// fractions allowed for rational bases.
template <class B>
bool parse_ext_pair(const QuadExt<B>& k, Cursor& cur, typename QuadExt<B>::Elem& out) {
    if (!cur.accept('(')) return false;
    const B& base = k.base;
    auto a = base.zero();
    auto b = base.zero();
    bool saw_any = false;
    while (true) {
        bool neg = false;
        char c = cur.peek();
        if (c == '+' || c == '-') {
            cur.accept(c);
            neg = c == '-';
        } else if (saw_any) {
            break;
        }
        if (cur.peek() == 'w') {
            cur.expect('w');
            b = base.add(b, neg ? base.neg(base.one()) : base.one());
        } else {
            auto [num, den] = cur.fraction(neg);
            auto v = elem_from_fraction(base, num, den, cur);
            if (cur.accept('*')) {
                cur.expect('w');
                b = base.add(b, v);
            } else {
                a = base.add(a, v);
            }
        }
        saw_any = true;
    }
    cur.expect(')');
    if (!saw_any) cur.fail("empty coefficient");
    out = k.make(a, b);
    return true;
}

template <class K>
bool try_parse_coeff(const K& k, Cursor& cur, typename K::Elem& out) {
    char c = cur.peek();
    if constexpr (std::is_same_v<K, FpQuadExt> || std::is_same_v<K, RatQuadExt>) {
        if (c == '(') return parse_ext_pair(k, cur, out);
    }
    if (c < '0' || c > '9') return false;
    auto [num, den] = cur.fraction(false);
    out = elem_from_fraction(k, num, den, cur);
    return true;
}

}  // namespace textio

/// Parse the grammar above into a polynomial over `k`.
template <class K>
Poly<K> parse_poly(const std::string& text, const K& k) {
    textio::Cursor cur(text);
    std::map<std::size_t, typename K::Elem> acc;
    auto add_term = [&](std::size_t e, const typename K::Elem& c) {
        auto it = acc.find(e);
        if (it == acc.end())
            acc.emplace(e, c);
        else
            it->second = k.add(it->second, c);
    };
    bool first = true;
    while (true) {
        if (cur.done()) {
            if (first) cur.fail("empty polynomial");
            break;
        }
        bool neg = false;
        if (cur.accept('-'))
            neg = true;
        else if (cur.accept('+')) {
            if (first) cur.fail("unexpected '+'");
        } else if (!first) {
            cur.fail("expected '+' or '-'");
        }
        typename K::Elem coeff = k.one();
        bool have_coeff = textio::try_parse_coeff(k, cur, coeff);
        std::size_t expo = 0;
        if (have_coeff && cur.accept('*')) {
            if (cur.peek() != 'T') cur.fail("expected 'T' after '*'");
        }
        if (cur.peek() == 'T') {
            cur.expect('T');
            expo = 1;
            if (cur.accept('^')) {
                mpz_class e = cur.natural();
                if (e > 1000000) cur.fail("exponent too large");
                expo = e.get_ui();
            }
        } else if (!have_coeff) {
            cur.fail("expected a coefficient or 'T'");
        }
        add_term(expo, neg ? k.neg(coeff) : coeff);
        first = false;
    }
    std::size_t max_e = 0;
    for (const auto& [e, c] : acc) max_e = std::max(max_e, e);
    std::vector<typename K::Elem> coeffs(max_e + 1, k.zero());
    for (const auto& [e, c] : acc) coeffs[e] = c;
    return Poly<K>(k, std::move(coeffs));
}

}  // namespace zsig

#include <catch_amalgamated.hpp>

#include "zsig/poly.hpp"
#include "zsig/poly_text.hpp"

using namespace zsig;

namespace {

template <class K>
Poly<K> pp(const std::string& text, const K& k) {
    return parse_poly(text, k);
}

// test-side schoolbook product, the independent route the production
// multiplier (with its Karatsuba switch) is compared against
template <class K>
Poly<K> naive_mul(const Poly<K>& a, const Poly<K>& b) {
    const K& k = a.field();
    if (a.is_zero() || b.is_zero()) return Poly<K>::zero(k);
    std::vector<typename K::Elem> r(a.degree() + b.degree() + 1, k.zero());
    for (long i = 0; i <= a.degree(); ++i)
        for (long j = 0; j <= b.degree(); ++j)
            r[i + j] = k.add(r[i + j], k.mul(a.coeff(i), b.coeff(j)));
    return Poly<K>(k, std::move(r));
}

}  // namespace

TEST_CASE("polynomial ring operations") {
    Fp f3(3);
    auto t1 = pp("T+1", f3);
    CHECK(t1.pow(2) == pp("T^2+2*T+1", f3));
    CHECK(t1.pow(3) == pp("T^3+1", f3));  // Frobenius in char 3
    CHECK(t1.pow(0).is_one());
    CHECK(pp("T^2+2*T", f3).degree() == 2);
    CHECK((pp("T^2", f3) - pp("T^2", f3)).is_zero());
    CHECK((pp("T^2", f3) - pp("T^2", f3)).degree() == kZeroDegree);

    Rationals q;
    CHECK(pp("T+1", q) * pp("T-1", q) == pp("T^2-1", q));
    // degree of a product is the degree sum over a field
    CHECK((pp("2*T^3+1", q) * pp("1/2*T^2-T", q)).degree() == 5);
}

TEST_CASE("descriptor mismatch in ring ops") {
    Fp f3(3), f5(5);
    CHECK_THROWS_AS(pp("T", f3) + pp("T", f5), error);
    CHECK_THROWS_AS(pp("T", f3) == pp("T", f5), error);
}

TEST_CASE("division with remainder and exact division") {
    Rationals q;
    auto qr = divrem(pp("T^2-1", q), pp("T-1", q));
    CHECK(qr.quotient == pp("T+1", q));
    CHECK(qr.remainder.is_zero());
    CHECK(exact_div(pp("T^2-1", q), pp("T-1", q)) == pp("T+1", q));
    CHECK_THROWS_AS(exact_div(pp("T^2+1", q), pp("T+1", q)), error);  // remainder 2
    CHECK_THROWS_AS(divrem(pp("T", q), Poly<Rationals>::zero(q)), error);

    SECTION("difference of squares over a quadratic extension") {
        auto e = std::get<RatQuadExt>(make_field("q-sqrt:2"));
        auto p = pp("T^2+(1+1*w)*T+(0+1*w)", e);
        auto ps = coeff_map_sigma(p);
        CHECK(exact_div(p * p - ps * ps, p - ps) == p + ps);
    }
}

TEST_CASE("divrem identity on random inputs, all fields") {
    RngState rng(11);
    auto run = [&](const auto& k, int iterations) {
        for (int i = 0; i < iterations; ++i) {
            auto a = random_poly(k, rng, static_cast<long>(rng.below(9)));
            auto b = random_poly(k, rng, static_cast<long>(rng.below(8)));
            if (b.is_zero()) continue;
            auto qr = divrem(a, b);
            REQUIRE(qr.quotient * b + qr.remainder == a);
            REQUIRE(qr.remainder.degree() < b.degree());
        }
    };
    run(Fp(7), 10000);
    run(Fp(2), 10000);
    run(Rationals{}, 10000);
    run(std::get<FpQuadExt>(make_field("fp2:3:0:2")), 10000);
    run(std::get<RatQuadExt>(make_field("q-sqrt:2")), 2000);
}

TEST_CASE("monic gcd") {
    Rationals q;
    CHECK(gcd_monic(pp("T^2-1", q), pp("T^2-T", q)) == pp("T-1", q));
    CHECK(gcd_monic(pp("3*T^2-3", q), Poly<Rationals>::zero(q)) == pp("T^2-1", q));
    CHECK_THROWS_AS(gcd_monic(Poly<Rationals>::zero(q), Poly<Rationals>::zero(q)), error);
    CHECK(gcd_monic(pp("7", q), pp("T", q)).is_one());

    SECTION("gcd divides both and any common divisor divides the gcd") {
        RngState rng(5);
        auto run = [&](const auto& k, int iterations) {
            for (int i = 0; i < iterations; ++i) {
                auto d = random_poly(k, rng, 1 + static_cast<long>(rng.below(3)));
                auto u = random_poly(k, rng, static_cast<long>(rng.below(4)));
                auto v = random_poly(k, rng, static_cast<long>(rng.below(4)));
                if (u.is_zero() || v.is_zero()) continue;
                auto a = d * u;
                auto b = d * v;
                auto g = gcd_monic(a, b);
                REQUIRE(divides(g, a));
                REQUIRE(divides(g, b));
                REQUIRE(divides(d, g));  // common divisor divides the gcd
                REQUIRE(gcd_monic(g, monic(d)) == monic(d));
            }
        };
        run(Fp(5), 400);
        run(Rationals{}, 400);
        run(std::get<FpQuadExt>(make_field("fp2:3:0:2")), 200);
    }

    SECTION("modular rational gcd agrees with plain Euclid") {
        RngState rng(17);
        Rationals q2;
        for (int i = 0; i < 300; ++i) {
            auto a = random_poly(q2, rng, 1 + static_cast<long>(rng.below(7)));
            auto b = random_poly(q2, rng, 1 + static_cast<long>(rng.below(7)));
            if (rng.coin()) {
                auto d = random_poly(q2, rng, 1 + static_cast<long>(rng.below(3)));
                a = a * d;
                b = b * d;
            }
            REQUIRE(gcd_monic(a, b) == detail::gcd_euclid(a, b));
        }
    }
}

TEST_CASE("valuations") {
    Fp f5(5);
    auto f = pp("T+1", f5).pow(3) * pp("T+2", f5);
    CHECK(ord_at(f, pp("T+1", f5)) == 3);
    CHECK(ord_at(f, pp("T+2", f5)) == 1);
    Rationals q;
    CHECK(ord_at(pp("T^2+1", q), pp("T+1", q)) == 0);
    // T^p - 1 = (T-1)^p in char p
    CHECK(ord_at(pp("T^5-1", f5), pp("T+4", f5)) == 5);
    CHECK_THROWS_AS(ord_at(Poly<Rationals>::zero(q), pp("T", q)), error);
    CHECK_THROWS_AS(ord_at(pp("T", q), pp("2", q)), error);

    SECTION("additivity over products for irreducible divisors") {
        RngState rng(23);
        Fp k(7);
        auto rootless = [&k](const Poly<Fp>& p) {
            for (uint64_t x = 0; x < k.p; ++x)
                if (k.is_zero(eval(p, x))) return false;
            return true;
        };
        for (int i = 0; i < 300; ++i) {
            auto f1 = random_poly(k, rng, 1 + static_cast<long>(rng.below(5)));
            auto g1 = random_poly(k, rng, 1 + static_cast<long>(rng.below(5)));
            Poly<Fp> pi = Poly<Fp>::zero(k);
            do {
                pi = random_poly(k, rng, 1 + static_cast<long>(rng.below(2)), true);
            } while (pi.degree() == 2 && !rootless(pi));  // degree <= 2: irreducible iff rootless
            REQUIRE(ord_at(f1 * g1, pi) == ord_at(f1, pi) + ord_at(g1, pi));
        }
    }
}

TEST_CASE("coefficientwise sigma") {
    auto e = std::get<RatQuadExt>(make_field("q-sqrt:2"));
    auto p = pp("T^2+(1+1*w)*T+(0+1*w)", e);
    auto ps = coeff_map_sigma(p);
    CHECK(ps == pp("T^2+(1-1*w)*T+(0-1*w)", e));
    CHECK(coeff_map_sigma(ps) == p);  // involution
    auto base_poly = pp("T^3+2*T+1", e);
    CHECK(coeff_map_sigma(base_poly) == base_poly);

    SECTION("distributes over ring operations") {
        RngState rng(3);
        for (int i = 0; i < 200; ++i) {
            auto a = random_poly(e, rng, static_cast<long>(rng.below(5)));
            auto b = random_poly(e, rng, static_cast<long>(rng.below(5)));
            if (a.is_zero() || b.is_zero()) continue;
            REQUIRE(coeff_map_sigma(a * b) == coeff_map_sigma(a) * coeff_map_sigma(b));
            REQUIRE(coeff_map_sigma(a + b) == coeff_map_sigma(a) + coeff_map_sigma(b));
        }
    }
}

TEST_CASE("base-field membership and projection") {
    auto e = std::get<RatQuadExt>(make_field("q-sqrt:2"));
    auto p = pp("T^2+(1+1*w)*T+(0+1*w)", e);
    auto ps = coeff_map_sigma(p);
    CHECK(in_base_field(p + ps));
    CHECK(!in_base_field(p - ps));
    CHECK(!in_base_field(pp("(0+1*w)", e)));  // constant sqrt(2)
    Rationals q;
    CHECK(project_to_base(p + ps) == pp("2*T^2+2*T", q));
    CHECK_THROWS_AS(project_to_base(p), error);
    CHECK(embed_in_ext(project_to_base(p + ps), e) == p + ps);
}

TEST_CASE("multiplication matches the naive route across the Karatsuba switch") {
    RngState rng(31);
    Fp k(7);
    for (long deg : {10L, 63L, 64L, 65L, 200L}) {
        auto a = random_poly(k, rng, deg);
        auto b = random_poly(k, rng, deg - 3);
        REQUIRE(a * b == naive_mul(a, b));
    }
    Rationals q;
    auto a = random_poly(q, rng, 80);
    auto b = random_poly(q, rng, 75);
    REQUIRE(a * b == naive_mul(a, b));
}

TEST_CASE("pow agrees with iterated multiplication") {
    RngState rng(13);
    Fp k(5);
    auto f = random_poly(k, rng, 3);
    auto acc = Poly<Fp>::one(k);
    for (unsigned e = 0; e <= 12; ++e) {
        REQUIRE(f.pow(e) == acc);
        acc = acc * f;
    }
}

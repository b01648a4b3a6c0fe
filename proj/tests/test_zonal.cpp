#include <doctest.h>

#include "bwc/zonal.hpp"

using namespace bwc;

TEST_CASE("closed-form zonal kernels") {
    PolyUVT z0 = zonal_closed_form(0, 8);
    CHECK(z0.coeff(0, 0, 0) == Rational(1));
    CHECK(z0.terms().size() == 1);

    PolyUVT z1 = zonal_closed_form(1, 4);
    CHECK(z1.coeff(0, 0, 1) == Rational(-1));
    CHECK(z1.coeff(1, 0, 0) == Rational(1));
    CHECK(z1.coeff(0, 1, 0) == Rational(1));
    CHECK(z1.coeff(1, 1, 0) == Rational(-1, 2));
    CHECK(z1.symmetric_uv());

    PolyUVT z2 = zonal_closed_form(2, 6);
    CHECK(z2.coeff(0, 0, 2) == Rational(1));
    // t coefficient (2/(n-2)) (n - nu - nv + 2uv) at n=6
    CHECK(z2.coeff(0, 0, 1) == Rational(3));       // (2/4)*6
    CHECK(z2.coeff(1, 0, 1) == Rational(-3));
    CHECK(z2.coeff(1, 1, 1) == Rational(1));
    CHECK(z2.symmetric_uv());
}

TEST_CASE("z2 matches the substituted-variable expression") {
    // (T^2-n) - 2/(n-2) (UVT - U^2 - V^2 + n) + 1/((n-1)(n-2)) (U^2-n)(V^2-n)
    for (int n : {4, 5, 6, 9, 12}) {
        PolyUVT U = PolyUVT(Rational(n)) - PolyUVT::var_u() * Rational(2);
        PolyUVT V = PolyUVT(Rational(n)) - PolyUVT::var_v() * Rational(2);
        PolyUVT T = PolyUVT(Rational(n)) - PolyUVT::var_t() * Rational(2);
        PolyUVT nn{Rational(n)};
        PolyUVT expr = T * T - nn;
        expr -= (U * V * T - U * U - V * V + nn) * Rational(2, n - 2);
        expr += (U * U - nn) * (V * V - nn) * Rational(1, static_cast<long long>(n - 1) * (n - 2));
        Rational f;
        CHECK(expr.proportional_to(zonal_closed_form(2, n), &f));
        CHECK(f.sign() > 0);
    }
}

TEST_CASE("general zonal construction agrees with the closed forms") {
    CHECK(zonal_general(0, 7).coeff(0, 0, 0) == Rational(1));
    for (int n = 3; n <= 20; ++n) {
        Rational f;
        CHECK(zonal_general(1, n).proportional_to(zonal_closed_form(1, n), &f));
        CHECK(f.sign() > 0);
    }
    for (int n = 4; n <= 20; ++n) {
        Rational f;
        CHECK(zonal_general(2, n).proportional_to(zonal_closed_form(2, n), &f));
        CHECK(f.sign() > 0);
    }
}

TEST_CASE("general zonal construction reaches k=3..5") {
    for (int k : {3, 4, 5}) {
        PolyUVT z = zonal_general(k, 12);
        CHECK(!z.is_zero());
        CHECK(z.symmetric_uv());
        CHECK(z.coeff(0, 0, k).abs() == Rational(1));
        for (int u = 0; u <= 12; ++u) CHECK(z.eval(u, u, 0).sign() >= 0);
    }
    CHECK_THROWS(zonal_general(6, 20));        // above the default cap
    CHECK_THROWS(zonal_general(3, 4));         // k > n/2
    PolyUVT z6 = zonal_general(6, 16, 8);      // raised cap
    CHECK(z6.coeff(0, 0, 6).abs() == Rational(1));
}

TEST_CASE("degree-1 bound") {
    REQUIRE(elias_degree1(16, 8, 4).has_value());
    CHECK(*elias_degree1(16, 8, 4) == Rational(4));
    CHECK(*elias_degree1(10, 4, 1) == Rational(20, 11));
    CHECK((*elias_degree1(10, 4, 1)).floor() == BigInt(1));
    CHECK(!elias_degree1(12, 6, 6).has_value());   // boundary d = 2w(1-w/n)
    CHECK(!elias_degree1(10, 4, 6).has_value());   // w > n/2
}

TEST_CASE("lambda maximizer and the quadratic") {
    CHECK(lambda_opt(12, 6, 6) == Rational(1, 23));
    CHECK(lambda_opt(11, 5, 6) == Rational(0));   // w = (n+1)/2
    CHECK(lambda_opt(16, 8, 8) == Rational(1, 31));

    CHECK(f0_quadratic(12, 6, 6, Rational(1, 23)) == Rational(24, 253));
    // lambda = 0 leaves the constant term 2d(2d-(n-1))/(n(n-1))
    for (int n : {8, 11, 14})
        for (int d : {4, 6})
            for (int w : {2, 4})
                CHECK(f0_quadratic(n, d, w, Rational(0)) ==
                      Rational(2LL * d * (2 * d - (n - 1)), static_cast<long long>(n) * (n - 1)));
}

TEST_CASE("maximum of the quadratic equals the displayed closed form") {
    int count = 0;
    for (int n = 5; n <= 24; ++n)
        for (int d = 2; d <= n; d += 3)
            for (int w = 1; 2 * w <= n + 1; w += 2) {
                Rational peak = f0_quadratic(n, d, w, lambda_opt(n, d, w));
                long long s = n - w;
                Rational closed =
                    Rational(4LL * d) *
                    (Rational(static_cast<long long>(d) * d) +
                     Rational(2LL * s * (n + 1 - 2 * w) * d, n - 1) - Rational(s * s)) /
                    Rational(static_cast<long long>(n) *
                             (static_cast<long long>(n - 1) * d + 2 * s * s));
                CHECK(peak == closed);
                ++count;
            }
    CHECK(count >= 100);
}

TEST_CASE("degree-2 bound reproduces the sharp examples") {
    REQUIRE(degree2_bound(12, 6, 6).has_value());
    CHECK(*degree2_bound(12, 6, 6) == Rational(23));
    REQUIRE(degree2_bound(16, 8, 8).has_value());
    CHECK(*degree2_bound(16, 8, 8) == Rational(31));
    // L(n, n/2, n/2) <= 2n-1 for all even n where the preconditions hold
    for (int n = 4; n <= 64; n += 2) {
        auto b = degree2_bound(n, n / 2, n / 2);
        REQUIRE(b.has_value());
        CHECK(*b == Rational(2LL * n - 1));
    }
}

TEST_CASE("degree-2 bound at the degree-1 boundary") {
    // d = 2w(1-w/n) integral: bound exists iff w > n/2 - sqrt(n^2/(2(n+1))),
    // and then equals 2w(n^2-w) / (n^2/2 - (n+1)(w-n/2)^2).
    int applied = 0, skipped = 0;
    for (int n = 4; n <= 40; ++n)
        for (int w = 1; 2 * w <= n; ++w) {
            long long num = 2LL * w * (n - w);
            if (num % n != 0) continue;
            int d = static_cast<int>(num / n);
            if (d < 1) continue;
            CHECK(!elias_degree1(n, d, w).has_value());
            auto b = degree2_bound(n, d, w);
            // threshold test by exact squaring: w > n/2 - sqrt(n^2/(2(n+1)))
            Rational diff = Rational(n, 2) - Rational(w);
            bool applies = diff.sign() < 0 ||
                           diff * diff < Rational(static_cast<long long>(n) * n, 2LL * (n + 1));
            CHECK(b.has_value() == applies);
            if (applies) {
                Rational expect = Rational(2LL * w * (static_cast<long long>(n) * n - w)) /
                                  (Rational(static_cast<long long>(n) * n, 2) -
                                   Rational(n + 1) * (Rational(w) - Rational(n, 2)) * (Rational(w) - Rational(n, 2)));
                CHECK(*b == expect);
                ++applied;
            } else {
                ++skipped;
            }
        }
    CHECK(applied >= 10);
    CHECK(skipped >= 1);
}

#include <doctest.h>

#include "bwc/combinat.hpp"
#include "bwc/tables.hpp"

using namespace bwc;

static KnownTable& table() {
    static KnownTable t = KnownTable::load_default();
    return t;
}

TEST_CASE("load shipped knowns table") {
    KnownTable& t = table();
    CHECK(t.size() > 100);
    BoundInterval a104 = t.query_A(10, 4);
    CHECK(a104.lower == BigInt(40));
    CHECK(a104.upper == BigInt(40));
}

TEST_CASE("query_A spec cases") {
    KnownTable& t = table();
    CHECK(t.query_A(13, 6).lower == BigInt(32));
    CHECK(t.query_A(13, 6).upper == BigInt(32));
    CHECK(t.query_A(12, 1).lower == BigInt::pow2(12));
    CHECK(t.query_A(12, 1).upper == BigInt::pow2(12));
    CHECK(t.query_A(9, 9).upper == BigInt(2));

    // monotonicity completion between stored d values
    KnownTable small({
        {Quantity::A, 9, 6, -1, -1, BigInt(4), BigInt(4), "x"},
        {Quantity::A, 9, 4, -1, -1, BigInt(20), BigInt(20), "x"},
    });
    BoundInterval iv = small.query_A(9, 5);
    CHECK(iv.lower == BigInt(4));
    CHECK(iv.upper == BigInt(20));

    // unknown degrades to the trivial interval
    KnownTable empty(std::vector<KnownValueRecord>{});
    BoundInterval fb = empty.query_A(8, 3);
    CHECK(fb.lower == BigInt(2));   // two words at distance d always exist
    CHECK(fb.upper == BigInt::pow2(8));
}

TEST_CASE("query_A is non-increasing in d") {
    KnownTable& t = table();
    for (int n = 4; n <= 14; ++n) {
        BigInt prev_lo = BigInt::pow2(n), prev_hi = BigInt::pow2(n);
        for (int d = 1; d <= n; ++d) {
            BoundInterval iv = t.query_A(n, d);
            CHECK(iv.lower <= prev_lo);
            CHECK(iv.upper <= prev_hi);
            prev_lo = iv.lower;
            prev_hi = iv.upper;
        }
    }
}

TEST_CASE("query_Aw spec cases and symmetry") {
    KnownTable& t = table();
    BoundInterval iv = t.query_Aw(8, 4, 6);
    CHECK(iv.lower == BigInt(4));
    CHECK(iv.upper == BigInt(4));
    CHECK(t.query_Aw(9, 4, 0).exact());
    CHECK(t.query_Aw(9, 4, 0).lower == BigInt(1));
    CHECK(t.query_Aw(16, 6, 6).lower == BigInt(112));
    CHECK(t.query_Aw(16, 6, 6).upper == BigInt(112));
    // trivial: d > 2 min(w, n-w)
    CHECK(t.query_Aw(6, 4, 5).upper == BigInt(1));
    // d = 2 whole class
    CHECK(t.query_Aw(9, 2, 4).lower == binomial(9, 4));

    for (int n = 4; n <= 14; ++n)
        for (int d = 3; d <= n; ++d)
            for (int w = 0; w <= n; ++w) {
                BoundInterval a = t.query_Aw(n, d, w);
                BoundInterval b = t.query_Aw(n, d, n - w);
                CHECK(a.lower == b.lower);
                CHECK(a.upper == b.upper);
            }
}

TEST_CASE("rejects invalid records") {
    std::vector<KnownValueRecord> bad = {{Quantity::A, 9, 4, -1, -1, BigInt(30), BigInt(20), "bad"}};
    CHECK_THROWS_WITH_AS(KnownTable(std::move(bad)), doctest::Contains("(n=9,d=4)"), std::runtime_error);
    std::vector<KnownValueRecord> bad2 = {{Quantity::Aw, 9, 4, 12, -1, BigInt(1), BigInt(1), "bad w"}};
    CHECK_THROWS(KnownTable(std::move(bad2)));
    CHECK_NOTHROW(KnownTable(std::vector<KnownValueRecord>{}));
}

TEST_CASE("sphere-covering lower bound on the covering radius") {
    CHECK(covering_radius_sphere_lb(10, BigInt(40)) == 2);
    CHECK(covering_radius_sphere_lb(10, BigInt::pow2(10)) == 0);
    CHECK(covering_radius_sphere_lb(23, BigInt(2048)) == 4);
    KnownTable& t = table();
    CHECK(t.covering_radius_lower(7, 4) == BigInt(3));    // simplex record beats the sphere bound (2)
    CHECK(t.covering_radius_lower(10, 4) == BigInt(2));
}

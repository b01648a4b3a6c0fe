// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line with its runtime.

#include <doctest.h>

#include "bwc/asympt.hpp"
#include "bwc/assets.hpp"
#include "bwc/bounds.hpp"
#include "bwc/combinat.hpp"
#include "bwc/enumerator.hpp"
#include "bwc/exact.hpp"
#include "bwc/sdp_build.hpp"
#include "bwc/tablegen.hpp"
#include "bwc/terwilliger.hpp"
#include "bwc/zonal.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <optional>

using namespace bwc;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, const char* name, bool pass, double seconds) {
    std::printf("[acceptance] criterion %2d (%s): %s in %.2f s\n", criterion, name,
                pass ? "PASS" : "FAIL", seconds);
    std::fflush(stdout);
}

KnownTable& table() {
    static KnownTable t = KnownTable::load_default();
    return t;
}

}  // namespace

TEST_CASE("criterion 1: closed-form degree-2 values") {
    Timer timer;
    bool ok = true;
    auto expect = [&](int n, int d, int w, long long v) {
        auto b = degree2_bound(n, d, w);
        bool good = b.has_value() && *b == Rational(v);
        CHECK_MESSAGE(good, "degree2(", n, ",", d, ",", w, ")");
        ok = ok && good;
    };
    expect(12, 6, 6, 23);
    expect(16, 8, 8, 31);
    for (int n = 4; n <= 64; n += 2) {
        auto b = degree2_bound(n, n / 2, n / 2);
        bool good = b.has_value() && *b == Rational(2LL * n - 1);
        CHECK_MESSAGE(good, "degree2(", n, ",", n / 2, ",", n / 2, ") != 2n-1");
        ok = ok && good;
    }
    double dt = timer.seconds();
    CHECK(dt < 1.0);
    report(1, "degree-2 closed form", ok && dt < 1.0, dt);
}

TEST_CASE("criterion 2: MacWilliams reproduction") {
    Timer timer;
    std::vector<BigInt> rm(17, BigInt(0));
    rm[0] = 1; rm[8] = 30; rm[16] = 1;
    WeightEnumerator dual = macwilliams_transform(WeightEnumerator(16, rm), BigInt(32));
    bool ok = dual.coeffs[4] == BigInt(140) && dual.coeffs[12] == BigInt(140) &&
              dual.coeffs[6] == BigInt(448) && dual.coeffs[10] == BigInt(448) &&
              dual.coeffs[8] == BigInt(870);
    CHECK(ok);
    double dt = timer.seconds();
    CHECK(dt < 1.0);
    report(2, "MacWilliams transform", ok && dt < 1.0, dt);
}

TEST_CASE("criterion 3: expurgation exact values") {
    Timer timer;
    struct Case {
        const char* asset;
        int n, d, w;
        long long expect;
    };
    const Case cases[] = {
        {"rm-2-4", 16, 4, 4, 141},
        {"nordstrom-robinson-16", 16, 6, 6, 113},
        {"nordstrom-robinson-16", 16, 6, 10, 255},
        {"golay-dual-23-11", 23, 8, 8, 507},
        {"golay-dual-23-11", 23, 8, 16, 2048},
        {"ext-golay-24-12", 24, 8, 8, 760},
        {"ext-golay-24-12", 24, 8, 12, 3336},
        {"ext-golay-24-12", 24, 8, 16, 4095},
    };
    bool ok = true;
    for (const Case& c : cases) {
        Timer each;
        CodeAsset asset = find_code_asset(c.asset);
        AssetReport rep = verify_code_asset(asset);
        REQUIRE_MESSAGE(rep.ok, "asset ", c.asset, " failed verification");
        WeightEnumerator w = load_asset_enumerator(asset.claims.enumerator_file);
        REQUIRE(asset.claims.min_distance >= c.d);
        SdpBoundResult sdp = theta_prime_bound(c.n, c.d, c.w);
        std::optional<long long> exact = expurgation_exact(w, c.d, c.w, sdp.bound);
        bool good = exact.has_value() && *exact == c.expect;
        CHECK_MESSAGE(good, "L(", c.n, ",", c.d, ",", c.w, ") expected ", c.expect, ", sdp bound ",
                      sdp.bound);
        CHECK(each.seconds() < 600.0);
        ok = ok && good && each.seconds() < 600.0;
    }
    report(3, "expurgation exact values", ok, timer.seconds());
}

TEST_CASE("criterion 4: theta' spot checks against the published table") {
    Timer timer;
    bool ok = true;
    // known lower bounds: the best constant-weight class plus the zero word
    for (auto [w, paper] : std::vector<std::pair<int, long long>>{{4, 31}, {5, 37}}) {
        SearchSpec s = SearchSpec::quantity_Aw(10, 4, w, 30.0);
        s.initial_incumbent = table().query_Aw(10, 4, w).lower.to_int64();
        ExactResult cw = max_code(s);
        Code with_zero = cw.witness;
        std::vector<uint64_t> words = with_zero.words;
        words.push_back(0);
        Code lower_witness(10, words);
        REQUIRE(min_distance(lower_witness) >= 4);
        long long known_lower = static_cast<long long>(lower_witness.size());
        SdpBoundResult sdp = theta_prime_bound(10, 4, w);
        bool good = known_lower <= sdp.bound && sdp.bound <= paper;
        CHECK_MESSAGE(good, "L(10,4,", w, "): lower ", known_lower, " sdp ", sdp.bound, " paper ", paper);
        ok = ok && good;
        CHECK(timer.seconds() < 240.0);
    }
    report(4, "theta-prime spot checks", ok, timer.seconds());
}

TEST_CASE("criterion 5: block-diagonalization oracle") {
    Timer timer;
    bool ok = true;
    for (int n = 2; n <= 6; ++n) {
        BlockVerifyReport rep = verify_block_diagonalization(n, 200, 0xacce97 + n);
        INFO(rep.detail);
        CHECK(rep.disagreements == 0);
        ok = ok && rep.disagreements == 0;
    }
    double dt = timer.seconds();
    CHECK(dt < 120.0);
    report(5, "block diagonalization oracle", ok && dt < 120.0, dt);
}

TEST_CASE("criterion 6: exact search vs tables") {
    Timer timer;
    struct Case { int n, d, w; long long expect; };
    const Case cases[] = {{6, 4, 2, 4}, {7, 4, 2, 8}, {9, 6, 2, 4}, {10, 6, 2, 6}, {12, 8, 2, 4}};
    bool ok = true;
    for (const Case& c : cases) {
        Timer each;
        ExactResult r = max_code(SearchSpec::quantity_B(c.n, c.d, c.w, 60.0));
        bool good = r.proved_optimal && r.value == c.expect && each.seconds() <= 60.0;
        CHECK_MESSAGE(good, "B(", c.n, ",", c.d, ",", c.w, ") got ", r.value);
        CHECK(min_distance(r.witness) >= c.d);
        CHECK(min_weight(r.witness) >= c.w);
        ok = ok && good;
    }
    report(6, "exact search vs tables", ok, timer.seconds());
}

TEST_CASE("criterion 7: soundness sweep") {
    Timer timer;
    bool ok = true;
    long long checked = 0;
    for (int n = 2; n <= 9; ++n) {
        for (int d : {2, 4, 6}) {
            if (d > n) continue;
            for (int w = 0; w <= n; ++w) {
                // exact values (L by complement duality at the search level)
                ExactResult b = max_code(SearchSpec::quantity_B(n, d, w, 120.0));
                REQUIRE_MESSAGE(b.proved_optimal, "search budget exceeded at B(", n, ",", d, ",", w, ")");
                long long exact_l = max_code(SearchSpec::quantity_L(n, d, w, 120.0)).value;

                BoundInterval iv = best_bounds({BoundQuantity::B, n, d, w}, table()).interval;
                bool contains = iv.lower <= BigInt(b.value) && BigInt(b.value) <= iv.upper;
                CHECK_MESSAGE(contains, "B(", n, ",", d, ",", w, ")=", b.value, " outside [",
                              iv.lower.to_string(), ",", iv.upper.to_string(), "]");
                ok = ok && contains;

                // SDP and closed-form bounds on L
                SdpBoundResult theta = theta_prime_bound(n, d, w);
                bool theta_ok = theta.bound >= exact_l;
                CHECK_MESSAGE(theta_ok, "theta(", n, ",", d, ",", w, ")=", theta.bound, " < exact ", exact_l);
                ok = ok && theta_ok;
                if (n >= 3) {
                    SdpBoundResult poly = poly_bound(n, d, w, 2);
                    if (poly.exact_f0) {
                        Rational bound = Rational(1) / *poly.exact_f0;
                        bool poly_ok = bound >= Rational(exact_l);
                        CHECK_MESSAGE(poly_ok, "poly2(", n, ",", d, ",", w, ") < exact");
                        ok = ok && poly_ok;
                    }
                }
                if (auto e = elias_degree1(n, d, w)) {
                    bool el_ok = *e >= Rational(exact_l);
                    CHECK_MESSAGE(el_ok, "elias(", n, ",", d, ",", w, ") < exact");
                    ok = ok && el_ok;
                }
                if (auto d2 = degree2_bound(n, d, w)) {
                    bool d2_ok = *d2 >= Rational(exact_l);
                    CHECK_MESSAGE(d2_ok, "degree2(", n, ",", d, ",", w, ") < exact");
                    ok = ok && d2_ok;
                }
                ++checked;
            }
        }
    }
    CHECK(checked >= 120);
    double dt = timer.seconds();
    CHECK(dt < 1800.0);
    report(7, "soundness sweep", ok && dt < 1800.0, dt);
}

TEST_CASE("criterion 8: degree dominance") {
    Timer timer;
    bool ok = true;
    const Rational slack(1, 1000000);
    int applied = 0;
    for (int n = 4; n <= 16; ++n)
        for (int d = 1; d <= n; ++d)
            for (int w = 0; 2 * w <= n + 1; ++w) {
                auto elias = elias_degree1(n, d, w);
                if (!elias) continue;
                SdpBoundResult poly = poly_bound(n, d, w, 2);
                REQUIRE_MESSAGE(poly.exact_f0.has_value(), "poly2 uncertified at (", n, ",", d, ",", w, ")");
                Rational sdp_value = Rational(1) / *poly.exact_f0;
                bool le_elias = sdp_value <= *elias + slack;
                CHECK_MESSAGE(le_elias, "poly2(", n, ",", d, ",", w, ") exceeds the degree-1 value");
                ok = ok && le_elias;
                if (auto d2 = degree2_bound(n, d, w)) {
                    bool le_d2 = sdp_value <= *d2 + slack;
                    CHECK_MESSAGE(le_d2, "poly2(", n, ",", d, ",", w, ") exceeds the degree-2 value");
                    ok = ok && le_d2;
                }
                ++applied;
            }
    CHECK(applied > 200);
    report(8, "degree dominance", ok, timer.seconds());
}

TEST_CASE("criterion 9: translation construction") {
    Timer timer;
    bool ok = true;

    TranslationShape s = translation_probability(8, 2, 4);
    bool p_ok = s.p == Rational(4, 7);
    CHECK(p_ok);
    ok = ok && p_ok;

    Code c1(8, {0b00000011, 0b00001100, 0b00110000, 0b11000000});
    TranslateResult tr = heavy_translate(c1, 4, TranslateMode::Exhaustive);
    bool yield_ok = static_cast<long long>(tr.code.size()) >= 3;
    CHECK(yield_ok);
    bool weights_ok = min_weight(tr.code) == 4 && max_weight(tr.code) == 4;
    CHECK(weights_ok);
    // distances preserved against the matched subcode of c1
    bool dist_ok = true;
    for (size_t i = 0; i < tr.code.words.size(); ++i)
        for (size_t j = i + 1; j < tr.code.words.size(); ++j) {
            uint64_t a = tr.code.words[i] ^ tr.translate.bits;
            uint64_t b = tr.code.words[j] ^ tr.translate.bits;
            dist_ok = dist_ok && c1.contains(a) && c1.contains(b);
        }
    CHECK(dist_ok);
    ok = ok && yield_ok && weights_ok && dist_ok;

    // p >= 1/(n+1)^2 across the full integral grid
    bool floor_ok = true;
    for (int n = 2; n <= 40; ++n) {
        Rational fl(1, static_cast<long long>(n + 1) * (n + 1));
        for (int w1 = 0; 2 * w1 < n; ++w1)
            for (int w2 = w1 + 1; 2 * w2 <= n; ++w2) {
                long long num = static_cast<long long>(n) * (w2 - w1);
                long long den = n - 2LL * w1;
                if (num % den != 0 || (w1 * (num / den)) % n != 0) continue;
                floor_ok = floor_ok && translation_probability(n, w1, w2).p >= fl;
            }
    }
    CHECK(floor_ok);
    ok = ok && floor_ok;
    report(9, "translation construction", ok, timer.seconds());
}

TEST_CASE("criterion 10: table regeneration") {
    Timer timer;
    // published cells, transcribed row by row; 0-0 marks a blank
    struct PaperRow {
        int n;
        std::vector<std::pair<long long, long long>> cells;   // w = 2..9
    };
    const std::map<PaperTable, std::vector<PaperRow>> paper = {
        {PaperTable::I,
         {{6, {{4, 4}, {3, 4}, {3, 4}, {1, 1}, {1, 1}, {0, 0}, {0, 0}, {0, 0}}},
          {7, {{8, 8}, {7, 8}, {7, 8}, {3, 5}, {1, 1}, {1, 1}, {0, 0}, {0, 0}}},
          {8, {{16, 16}, {15, 16}, {15, 16}, {8, 10}, {4, 6}, {1, 1}, {1, 1}, {0, 0}}},
          {9, {{20, 20}, {19, 20}, {19, 20}, {18, 20}, {12, 18}, {4, 6}, {1, 1}, {0, 0}}},
          {10, {{40, 40}, {39, 40}, {39, 40}, {36, 40}, {30, 40}, {13, 20}, {5, 7}, {1, 1}}}}},
        {PaperTable::II,
         {{9, {{4, 4}, {4, 4}, {3, 4}, {3, 4}, {3, 4}, {1, 1}, {1, 1}, {1, 1}}},
          {10, {{6, 6}, {6, 6}, {6, 6}, {6, 6}, {5, 6}, {3, 6}, {1, 1}, {1, 1}}},
          {11, {{12, 12}, {12, 12}, {11, 12}, {11, 12}, {11, 12}, {6, 9}, {3, 6}, {1, 1}}},
          {12, {{24, 24}, {24, 24}, {23, 24}, {23, 24}, {23, 24}, {12, 24}, {9, 16}, {4, 7}}},
          {13, {{32, 32}, {32, 32}, {31, 32}, {31, 32}, {31, 32}, {26, 32}, {18, 32}, {13, 20}}}}},
        {PaperTable::III,
         {{12, {{4, 4}, {4, 4}, {4, 4}, {4, 4}, {4, 4}, {3, 4}, {3, 4}, {1, 1}}},
          {13, {{4, 4}, {4, 4}, {4, 4}, {4, 4}, {4, 4}, {4, 4}, {3, 4}, {3, 4}}},
          {14, {{8, 8}, {8, 8}, {8, 8}, {8, 8}, {8, 8}, {8, 8}, {7, 8}, {4, 8}}},
          {15, {{16, 16}, {16, 16}, {16, 16}, {15, 16}, {15, 16}, {15, 16}, {15, 16}, {10, 16}}}}},
    };

    bool ok = true;
    int flagged = 0;
    for (const auto& [which, rows] : paper) {
        TableResult ours = run_table(which, table());
        std::map<std::pair<int, int>, const TableCell*> by_pos;
        for (const TableCell& c : ours.cells) by_pos[{c.n, c.w}] = &c;
        for (const PaperRow& row : rows) {
            for (int w = 2; w <= 9; ++w) {
                auto [plo, phi] = row.cells[w - 2];
                if (plo == 0) continue;   // blank in the published table
                auto it = by_pos.find({row.n, w});
                REQUIRE(it != by_pos.end());
                const TableCell& c = *it->second;
                bool intersects = !(c.upper < BigInt(plo) || BigInt(phi) < c.lower);
                CHECK_MESSAGE(intersects, "table cell (", row.n, ",", w, ") [", c.lower.to_string(), ",",
                              c.upper.to_string(), "] misses the published [", plo, ",", phi, "]");
                ok = ok && intersects;
                if (!(c.lower == BigInt(plo) && c.upper == BigInt(phi))) ++flagged;
            }
        }
    }
    // pinned derivable cells
    auto pin = [&](PaperTable which, int n, int w, long long lo, long long hi) {
        TableResult r = run_table(which, table());
        for (const TableCell& c : r.cells)
            if (c.n == n && c.w == w) {
                bool good = c.lower >= BigInt(lo) && c.upper <= BigInt(hi);
                CHECK_MESSAGE(good, "pinned cell (", n, ",", w, ")");
                return good;
            }
        return false;
    };
    ok = ok && pin(PaperTable::I, 6, 2, 4, 4);
    ok = ok && pin(PaperTable::I, 7, 2, 8, 8);
    ok = ok && pin(PaperTable::II, 9, 2, 4, 4);
    ok = ok && pin(PaperTable::II, 10, 2, 6, 6);
    ok = ok && pin(PaperTable::III, 12, 2, 4, 4);
    {
        TableResult r = run_table(PaperTable::I, table());
        for (const TableCell& c : r.cells) {
            if (c.n == 8 && c.w == 5) { bool g = c.lower == BigInt(8); CHECK(g); ok = ok && g; }
            if (c.n == 8 && c.w == 6) {
                bool g = c.lower >= BigInt(4) && c.upper <= BigInt(6);
                CHECK(g);
                ok = ok && g;
            }
            if (c.n == 10 && c.w == 8) { bool g = c.upper == BigInt(7); CHECK(g); ok = ok && g; }
        }
    }
    std::printf("[acceptance]   criterion 10 note: %d cell(s) differ from the published entries "
                "(unstated methods); reported, not forced\n", flagged);
    report(10, "table regeneration", ok, timer.seconds());
}

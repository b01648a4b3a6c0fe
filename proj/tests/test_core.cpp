#include <doctest.h>

#include "bwc/bigint.hpp"
#include "bwc/combinat.hpp"
#include "bwc/enumerator.hpp"
#include "bwc/rational.hpp"
#include "bwc/word.hpp"

#include <bit>
#include <algorithm>
#include <random>

using namespace bwc;

TEST_CASE("bigint basic arithmetic and strings") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-12345).to_string() == "-12345");
    CHECK((BigInt("123456789012345678901234567890") * BigInt(1000)).to_string() ==
          "123456789012345678901234567890000");
    CHECK(BigInt::pow2(64).to_string() == "18446744073709551616");
    CHECK((BigInt::pow2(100) - BigInt(1)) % BigInt(3) == BigInt(0));

    std::mt19937_64 rng(12345);
    for (int i = 0; i < 500; ++i) {
        long long a = static_cast<long long>(rng()) >> (rng() % 32);
        long long b = static_cast<long long>(rng()) >> (rng() % 40);
        if (b == 0) b = 7;
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        __int128 prod = static_cast<__int128>(a) * b;
        std::string expect;
        {
            bool neg = prod < 0;
            unsigned __int128 p = neg ? -static_cast<unsigned __int128>(prod) : static_cast<unsigned __int128>(prod);
            if (p == 0) expect = "0";
            while (p) { expect.push_back(static_cast<char>('0' + static_cast<int>(p % 10))); p /= 10; }
            if (neg) expect.push_back('-');
            std::reverse(expect.begin(), expect.end());
        }
        CHECK((BigInt(a) * BigInt(b)).to_string() == expect);
        BigInt q, r;
        BigInt::divmod(BigInt(a), BigInt(b), q, r);
        CHECK(q == BigInt(a / b));
        CHECK(r == BigInt(a % b));
    }
}

TEST_CASE("bigint divmod identity on large operands") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        BigInt a = BigInt(static_cast<long long>(rng())) * BigInt(static_cast<long long>(rng())) + BigInt(static_cast<long long>(rng() % 1000));
        BigInt b = BigInt(static_cast<long long>(rng() % 1000000 + 1));
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
    }
}

TEST_CASE("binomial satisfies Pascal recurrence up to n=64") {
    for (int n = 1; n <= 64; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    CHECK(binomial(10, 5) == BigInt(252));
    CHECK(binomial(64, 32).to_string() == "1832624140942590534");
    // row sums are powers of two
    BigInt s(0);
    for (int k = 0; k <= 64; ++k) s += binomial(64, k);
    CHECK(s == BigInt::pow2(64));
}

TEST_CASE("entropy and its inverse") {
    CHECK(entropy(0.5) == doctest::Approx(1.0));
    CHECK(entropy(0.0) == 0.0);
    CHECK(entropy_inv(0.5) == doctest::Approx(0.1100).epsilon(1e-3));
    for (double y : {0.1, 0.3, 0.7, 0.9, 1.0})
        CHECK(entropy(entropy_inv(y)) == doctest::Approx(y).epsilon(1e-9));
}

TEST_CASE("rational arithmetic") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(7, 2).floor() == BigInt(3));
    CHECK(Rational(7, 2).ceil() == BigInt(4));
    CHECK(Rational(-7, 2).floor() == BigInt(-4));
    CHECK(Rational::from_double(0.25) == Rational(1, 4));
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("hamming distance and weight") {
    CHECK(hamming_distance(BinaryWord::from_string("0000"), BinaryWord::from_string("0000")) == 0);
    CHECK(hamming_distance(BinaryWord::from_string("1100"), BinaryWord::from_string("0110")) == 2);
    CHECK(hamming_distance(BinaryWord::from_string("1111111"), BinaryWord::from_string("0000000")) == 7);
    CHECK(weight(BinaryWord::from_string("0000")) == 0);
    CHECK(weight(BinaryWord::from_string("1011")) == 3);
    CHECK(weight(BinaryWord(16, 0xffff)) == 16);
    CHECK_THROWS(hamming_distance(BinaryWord(4, 1), BinaryWord(5, 1)));

    // metric properties on random triples + weight = distance to zero
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        int n = 1 + static_cast<int>(rng() % 32);
        uint64_t mask = n == 64 ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
        BinaryWord x(n, rng() & mask), y(n, rng() & mask), z(n, rng() & mask);
        int dxy = hamming_distance(x, y);
        CHECK(dxy >= 0);
        CHECK(dxy == hamming_distance(y, x));
        CHECK(dxy <= hamming_distance(x, z) + hamming_distance(z, y));
        CHECK(weight(x) == hamming_distance(x, BinaryWord(n, 0)));
    }
}

TEST_CASE("min distance and weight of small codes") {
    Code c1(3, {0b000, 0b111});
    CHECK(min_distance(c1) == 3);
    CHECK(min_weight(c1) == 0);

    Code c2(4, {0b1100, 0b0011, 0b1010});
    CHECK(min_distance(c2) == 2);
    CHECK(min_weight(c2) == 2);

    Code c3(8, {0b11000000});
    CHECK(min_distance(c3) == 9);   // sentinel
    CHECK(min_weight(c3) == 2);
}

TEST_CASE("word string round trip and code files") {
    BinaryWord w = BinaryWord::from_string("10110");
    CHECK(w.n == 5);
    CHECK(w.bits == 0b10110);
    CHECK(w.to_string() == "10110");

    Code c(5, {0b10110, 0b00001});
    std::string path = "test_code_roundtrip.txt";
    save_code(c, path);
    Code c2 = load_code(path);
    CHECK(c2.n == 5);
    CHECK(c2.words == c.words);
    std::remove(path.c_str());
}

TEST_CASE("enumerator partial sums") {
    // extended Golay distribution
    std::vector<BigInt> g(25, BigInt(0));
    g[0] = 1; g[8] = 759; g[12] = 2576; g[16] = 759; g[24] = 1;
    WeightEnumerator golay(24, g);
    CHECK(enumerator_partial_sum(golay, 8, SumDirection::AtMost) == BigInt(760));
    CHECK(enumerator_partial_sum(golay, 12, SumDirection::AtMost) == BigInt(3336));
    CHECK(enumerator_partial_sum(golay, 24, SumDirection::AtMost) == golay.code_size());
    CHECK(enumerator_partial_sum(golay, 16, SumDirection::AtLeast) == BigInt(760));

    std::vector<BigInt> nr(17, BigInt(0));
    nr[0] = 1; nr[6] = 112; nr[8] = 30; nr[10] = 112; nr[16] = 1;
    WeightEnumerator nord(16, nr);
    CHECK(enumerator_partial_sum(nord, 10, SumDirection::AtMost) == BigInt(255));
}

TEST_CASE("macwilliams transform reproduces first-order Reed-Muller dual") {
    std::vector<BigInt> rm(17, BigInt(0));
    rm[0] = 1; rm[8] = 30; rm[16] = 1;
    WeightEnumerator w(16, rm);
    WeightEnumerator dual = macwilliams_transform(w, BigInt(32));
    CHECK(dual.coeffs[0] == BigInt(1));
    CHECK(dual.coeffs[4] == BigInt(140));
    CHECK(dual.coeffs[6] == BigInt(448));
    CHECK(dual.coeffs[8] == BigInt(870));
    CHECK(dual.coeffs[10] == BigInt(448));
    CHECK(dual.coeffs[12] == BigInt(140));
    CHECK(dual.coeffs[16] == BigInt(1));
    CHECK(dual.code_size() == BigInt(2048));

    // involution: transforming back recovers the original
    WeightEnumerator back = macwilliams_transform(dual, BigInt(2048));
    CHECK(back.coeffs == w.coeffs);
    // total of the dual = 2^n / |C|
    CHECK(dual.code_size() * BigInt(32) == BigInt::pow2(16));
}

TEST_CASE("macwilliams transform of self-dual repetition code") {
    std::vector<BigInt> cs = {BigInt(1), BigInt(0), BigInt(1)};
    WeightEnumerator w(2, cs);
    WeightEnumerator dual = macwilliams_transform(w, BigInt(2));
    CHECK(dual.coeffs == w.coeffs);
}

TEST_CASE("macwilliams matches brute-force dual of a [4,2] code") {
    // C = {0000, 1100, 0011, 1111}
    Code c(4, {0b0000, 0b1100, 0b0011, 0b1111});
    WeightEnumerator w = WeightEnumerator::of_code(c);
    CHECK(w.coeffs[0] == BigInt(1));
    CHECK(w.coeffs[2] == BigInt(2));
    CHECK(w.coeffs[4] == BigInt(1));

    // brute-force dual code
    std::vector<uint64_t> dual_words;
    for (uint64_t x = 0; x < 16; ++x) {
        bool ok = true;
        for (uint64_t cw : c.words)
            if (std::popcount(x & cw) % 2 != 0) { ok = false; break; }
        if (ok) dual_words.push_back(x);
    }
    WeightEnumerator dual_brute = WeightEnumerator::of_code(Code(4, dual_words));
    WeightEnumerator dual = macwilliams_transform(w, BigInt(4));
    CHECK(dual.coeffs == dual_brute.coeffs);
}

TEST_CASE("macwilliams rejects invalid input") {
    std::vector<BigInt> cs = {BigInt(1), BigInt(1), BigInt(1)};   // not a linear code distribution for size 2
    WeightEnumerator w(2, cs);
    CHECK_THROWS(macwilliams_transform(w, BigInt(2)));
}

#pragma once

#include "bwc/rational.hpp"
#include "bwc/tables.hpp"
#include "bwc/word.hpp"

#include <cstdint>
#include <functional>
#include <utility>

namespace bwc {

// Pluggable exponent functions for the rate reduction. All functions map
// into [0,1]; the defaults are the Gilbert-Varshamov lower bound and trivial
// uppers.
struct ExponentQuery {
    double delta = 0.0;
    double omega = 0.0;
    std::function<double(double)> a_lower;             // exponent of A(n, delta n)
    std::function<double(double)> a_upper;
    std::function<double(double, double)> aw_lower;    // exponent of A(n, delta n, omega n)
    std::function<double(double, double)> aw_upper;

    static ExponentQuery gv_trivial(double delta, double omega);
};

// The minimum-weight-constrained exponent reduces to a(delta) below half
// weight and to a(delta, omega) above it.
std::pair<double, double> b_exponent(const ExponentQuery& q);

// Finite-length sanity check of the averaging inequality
// A(n,d)/2^n <= A(n,d,w)/C(n,w) on exactly known table values; true when the
// inequality holds, nullopt-like false only when data is missing.
enum class EbCheck { Holds, Fails, Unknown };
EbCheck elias_bassalygo_check(int n, int d, int w, const KnownTable& t);

enum class RoundingMode { Exact, Floor };

struct TranslationShape {
    int translate_weight = 0;   // weight of the translating word
    int inside = 0;             // ones placed inside the codeword support
    int outside = 0;            // ones placed outside
    Rational p;                 // success probability for a uniform translate
};

// Probability that a uniform random weight-w' word translates a fixed
// weight-w1 codeword to weight w2. Exact mode requires the split counts to
// be integers; floor mode rounds the inside count down and recomputes the
// outside count so the target weight is hit exactly.
TranslationShape translation_probability(int n, int w1, int w2, RoundingMode mode = RoundingMode::Exact);

enum class TranslateMode { Exhaustive, Random };

struct TranslateResult {
    Code code;                  // the translated subcode, constant weight w2
    BinaryWord translate;
    long long tried = 0;
};

// Translate a constant-weight-w1 code to constant weight w2 by the best
// translate found; exhaustive mode guarantees at least ceil(p |C1|) words.
TranslateResult heavy_translate(const Code& c1, int w2, TranslateMode mode, long long trials = 1000,
                                uint64_t seed = 1, RoundingMode rounding = RoundingMode::Exact);

}  // namespace bwc

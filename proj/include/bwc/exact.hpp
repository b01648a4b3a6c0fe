#pragma once

#include "bwc/assets.hpp"
#include "bwc/bigint.hpp"
#include "bwc/enumerator.hpp"
#include "bwc/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bwc {

// Exhaustive / branch-and-bound search for the largest code of length n,
// minimum distance >= d, all codeword weights within [min_w, max_w].
struct SearchSpec {
    int n = 0;
    int d = 1;
    int min_w = 0;
    int max_w = 64;
    double budget_seconds = 60.0;
    long long initial_incumbent = 0;

    static SearchSpec quantity_B(int n, int d, int w, double budget = 60.0);
    static SearchSpec quantity_L(int n, int d, int w, double budget = 60.0);
    static SearchSpec quantity_A(int n, int d, double budget = 60.0);
    static SearchSpec quantity_Aw(int n, int d, int w, double budget = 60.0);
};

struct ExactResult {
    long long value = 0;
    Code witness;
    bool proved_optimal = false;
};

ExactResult max_code(const SearchSpec& spec);

// Covering radius: max over all words of the distance to the nearest codeword.
// BFS over the n-cube; n <= 20.
int covering_radius(const Code& c);

// Expurgation: if the at-most-w partial sum of a distance->=d code's weight
// distribution meets the SDP upper bound, the value of L(n,d,w) is exact.
// Throws if the lower bound exceeds the upper bound (bad asset or bad solve).
std::optional<long long> expurgation_exact(const WeightEnumerator& w, int d, int wt, long long sdp_upper);

struct AssetReport {
    std::string name;
    bool ok = true;
    std::vector<std::string> failures;
    int computed_d = 0;
    long long computed_size = 0;
};

// Recompute size, minimum distance, and weight distribution from scratch and
// compare with the manifest claims. Any mismatch is reported.
AssetReport verify_code_asset(const CodeAsset& asset);

}  // namespace bwc

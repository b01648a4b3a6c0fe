#pragma once

#include "bwc/bigint.hpp"
#include "bwc/tables.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bwc {

enum class Side { Lower, Upper };

// B(n,d,w): min-weight-constrained; L(n,d,w): max-weight-constrained.
enum class BoundQuantity { B, L };

struct ProblemSpec {
    BoundQuantity quantity = BoundQuantity::B;
    int n = 0, d = 0, w = 0;

    bool valid() const { return 1 <= d && d <= n && 0 <= w && w <= n; }
};

// L(n,d,w) = B(n,d,n-w); B specs pass through unchanged.
ProblemSpec to_B(const ProblemSpec& spec);

struct RuleResult {
    Side side = Side::Lower;
    BigInt value;
    std::string rule;
    std::vector<std::string> dependencies;
};

struct BoundOptions {
    bool asymptotic_rules = false;   // enables the self-dual rule
    int selfdual_threshold = 30;     // smallest n the self-dual rule applies to
};

// External bounds (SDP, exact search) merged at the queried instance.
struct ExtraBound {
    std::string name;
    Side side = Side::Upper;
    std::function<std::optional<BigInt>(int n, int d, int w)> eval;   // B-normalized parameters
};

// ---- individual rules (B-normalized parameters) ----

// B(n,d,w) = 1 when d > min(2w, 2(n-w)).
std::optional<BigInt> trivial_one(int n, int d, int w);
// max_{j >= w} A(n,d,j) lower.
BigInt lower_single_class(int n, int d, int w, const KnownTable& t);
// sum of A(n,d,w+h*d) lowers over non-overlapping weight classes.
BigInt lower_stacked(int n, int d, int w, const KnownTable& t);
// sum_{j >= w} A(n,d,j) upper.
BigInt upper_class_sum(int n, int d, int w, const KnownTable& t);
// A(n,d) upper.
BigInt upper_A(int n, int d, const KnownTable& t);
// One Johnson column-argument step: floor(n * sub_upper / w), where
// sub_upper bounds B(n-1,d,w-1).
BigInt johnson_upper_step(int n, int w, const BigInt& sub_upper);
// The same fed by the combiner's best upper bound for the sub-instance.
BigInt johnson_upper(int n, int d, int w, const KnownTable& t);
// Gilbert-type lower bound, exact integer arithmetic.
BigInt gilbert_lower(int n, int d, int w);
// A(n,d) - 1 by removing the zero word, for 1 <= w <= d.
std::optional<BigInt> expurgation_lower(int n, int d, int w, const KnownTable& t);
// 2^((n-2)/2), the self-dual construction value.
BigInt selfdual_formula(int n);
std::optional<BigInt> selfdual_lower(int n, int d, int w, const BoundOptions& opts);
// exact value A(n,d) when w is at most the covering radius of an optimal code.
std::optional<BigInt> translation_equal(int n, int d, int w, const KnownTable& t);
// concatenation: inner heavy-weight (n,d,w) code of size >= q with an outer
// (N,D) code over GF(q) gives B(N n, d D, w N) >= Aq_lower.
RuleResult concatenation_lower(int N, int D, int q, int inner_n, int inner_d, int inner_w,
                               const BigInt& aq_lower, const KnownTable& t);

// ---- combiner ----

struct BoundTraceEntry {
    Side side;
    std::string rule;
    BigInt value;
};

struct BestBoundsResult {
    BoundInterval interval;
    std::vector<BoundTraceEntry> trace;   // rule values at the queried instance
};

// Fixpoint of all rules over the sub-instance lattice; throws on
// inconsistency (a lower above an upper), reporting both provenances.
BestBoundsResult best_bounds(const ProblemSpec& spec, const KnownTable& t,
                             const BoundOptions& opts = {},
                             const std::vector<ExtraBound>& extras = {});

}  // namespace bwc

#include "bwc/bounds.hpp"

#include "bwc/combinat.hpp"

#include <map>
#include <stdexcept>

namespace bwc {

ProblemSpec to_B(const ProblemSpec& spec) {
    if (!spec.valid()) throw std::invalid_argument("to_B: invalid problem spec");
    if (spec.quantity == BoundQuantity::B) return spec;
    return ProblemSpec{BoundQuantity::B, spec.n, spec.d, spec.n - spec.w};
}

std::optional<BigInt> trivial_one(int n, int d, int w) {
    // Two words of weight >= w can be at distance n when w <= n/2 (take a
    // weight-w word and the complement of another), so the rule only applies
    // above half weight, where the distance is capped by 2(n-w).
    if (2 * w > n && d > 2 * (n - w)) return BigInt(1);
    return std::nullopt;
}

BigInt lower_single_class(int n, int d, int w, const KnownTable& t) {
    BigInt best(1);
    for (int j = w; j <= n; ++j) best = std::max(best, t.query_Aw(n, d, j).lower);
    return best;
}

BigInt lower_stacked(int n, int d, int w, const KnownTable& t) {
    BigInt s(0);
    for (int h = 0; w + h * d <= n; ++h) s += t.query_Aw(n, d, w + h * d).lower;
    return s;
}

BigInt upper_class_sum(int n, int d, int w, const KnownTable& t) {
    BigInt s(0);
    for (int j = w; j <= n; ++j) s += t.query_Aw(n, d, j).upper;
    return s;
}

BigInt upper_A(int n, int d, const KnownTable& t) { return t.query_A(n, d).upper; }

BigInt johnson_upper_step(int n, int w, const BigInt& sub_upper) {
    if (w < 1) throw std::invalid_argument("johnson_upper_step: w >= 1 required");
    return BigInt::div_floor(BigInt(n) * sub_upper, BigInt(w));
}

BigInt johnson_upper(int n, int d, int w, const KnownTable& t) {
    if (w < 1 || d > n - 1) throw std::invalid_argument("johnson_upper: needs w >= 1 and d <= n-1");
    BoundInterval sub = best_bounds({BoundQuantity::B, n - 1, d, w - 1}, t).interval;
    return johnson_upper_step(n, w, sub.upper);
}

BigInt gilbert_lower(int n, int d, int w) {
    BigInt num(0), den(0);
    for (int i = w; i <= n; ++i) num += binomial(n, i);
    for (int i = 0; i <= d - 1; ++i) den += binomial(n, i);
    return BigInt::div_ceil(num, den);
}

std::optional<BigInt> expurgation_lower(int n, int d, int w, const KnownTable& t) {
    if (w < 1 || w > d) return std::nullopt;
    BigInt v = t.query_A(n, d).lower - BigInt(1);
    if (v < BigInt(1)) return std::nullopt;
    return v;
}

BigInt selfdual_formula(int n) { return BigInt::pow2(static_cast<unsigned>((n - 2) / 2)); }

std::optional<BigInt> selfdual_lower(int n, int d, int w, const BoundOptions& opts) {
    if (!opts.asymptotic_rules) return std::nullopt;
    if (n % 2 != 0 || n < opts.selfdual_threshold) return std::nullopt;
    if (w > n / 2) return std::nullopt;
    if (static_cast<double>(d) > n * entropy_inv(0.5)) return std::nullopt;
    return selfdual_formula(n);
}

std::optional<BigInt> translation_equal(int n, int d, int w, const KnownTable& t) {
    BoundInterval a = t.query_A(n, d);
    if (!a.exact()) return std::nullopt;
    if (BigInt(w) > t.covering_radius_lower(n, d)) return std::nullopt;
    return a.lower;
}

RuleResult concatenation_lower(int N, int D, int q, int inner_n, int inner_d, int inner_w,
                               const BigInt& aq_lower, const KnownTable& t) {
    ProblemSpec inner{BoundQuantity::B, inner_n, inner_d, inner_w};
    BestBoundsResult inner_bounds = best_bounds(inner, t);
    if (inner_bounds.interval.lower < BigInt(q))
        throw std::invalid_argument("concatenation_lower: inner code size q is not certified (best lower " +
                                    inner_bounds.interval.lower.to_string() + ")");
    RuleResult r;
    r.side = Side::Lower;
    r.value = aq_lower;
    r.rule = "concatenation";
    r.dependencies = {"B(" + std::to_string(inner_n) + "," + std::to_string(inner_d) + "," +
                          std::to_string(inner_w) + ")>=" + std::to_string(q),
                      "Aq(" + std::to_string(N) + "," + std::to_string(D) + ";" + std::to_string(q) + ")"};
    (void)inner_bounds;
    return r;
}

namespace {

struct Combiner {
    const KnownTable& t;
    const BoundOptions& opts;
    std::map<std::tuple<int, int, int>, std::pair<BigInt, std::string>> lower_memo, upper_memo;

    std::pair<BigInt, std::string> lower(int n, int d, int w) {
        auto key = std::make_tuple(n, d, w);
        if (auto it = lower_memo.find(key); it != lower_memo.end()) return it->second;
        lower_memo[key] = {BigInt(1), "trivial-single"};   // cycle guard; lattice is acyclic

        BigInt best(1);
        std::string rule = "trivial-single";
        auto consider = [&](const BigInt& v, const std::string& r) {
            if (v > best) { best = v; rule = r; }
        };
        consider(lower_single_class(n, d, w, t), "single-class");
        consider(lower_stacked(n, d, w, t), "stacked-classes");
        consider(gilbert_lower(n, d, w), "gilbert");
        if (auto v = expurgation_lower(n, d, w, t)) consider(*v, "expurgation");
        if (auto v = translation_equal(n, d, w, t)) consider(*v, "translation");
        if (auto v = selfdual_lower(n, d, w, opts)) consider(*v, "selfdual");
        // monotone completion: B is non-increasing in d and w, non-decreasing in n
        if (d + 1 <= n) {
            auto [v, r] = lower(n, d + 1, w);
            consider(v, "monotone-d(" + r + ")");
        }
        if (w + 1 <= n) {
            auto [v, r] = lower(n, d, w + 1);
            consider(v, "monotone-w(" + r + ")");
        }
        if (n - 1 >= 1 && d <= n - 1 && w <= n - 1) {
            auto [v, r] = lower(n - 1, d, w);
            consider(v, "monotone-n(" + r + ")");
        }
        lower_memo[key] = {best, rule};
        return {best, rule};
    }

    std::pair<BigInt, std::string> upper(int n, int d, int w) {
        auto key = std::make_tuple(n, d, w);
        if (auto it = upper_memo.find(key); it != upper_memo.end()) return it->second;
        upper_memo[key] = {BigInt::pow2(n), "whole-space"};   // cycle guard

        BigInt best = BigInt::pow2(n);
        std::string rule = "whole-space";
        auto consider = [&](const BigInt& v, const std::string& r) {
            if (v < best) { best = v; rule = r; }
        };
        if (auto v = trivial_one(n, d, w)) consider(*v, "trivial-one");
        consider(upper_class_sum(n, d, w, t), "class-sum");
        consider(upper_A(n, d, t), "A(n,d)");
        if (w >= 1 && d <= n - 1) {
            auto [u, r] = upper(n - 1, d, w - 1);
            consider(BigInt::div_floor(BigInt(n) * u, BigInt(w)), "johnson(" + r + ")");
        }
        if (d - 1 >= 1) {
            auto [v, r] = upper(n, d - 1, w);
            consider(v, "monotone-d(" + r + ")");
        }
        if (w - 1 >= 0) {
            auto [v, r] = upper(n, d, w - 1);
            consider(v, "monotone-w(" + r + ")");
        }
        upper_memo[key] = {best, rule};
        return {best, rule};
    }
};

}  // namespace

BestBoundsResult best_bounds(const ProblemSpec& spec_in, const KnownTable& t, const BoundOptions& opts,
                             const std::vector<ExtraBound>& extras) {
    ProblemSpec spec = to_B(spec_in);
    const int n = spec.n, d = spec.d, w = spec.w;

    Combiner c{t, opts, {}, {}};
    auto [lo, lo_rule] = c.lower(n, d, w);
    auto [hi, hi_rule] = c.upper(n, d, w);

    BestBoundsResult res;
    res.trace.push_back({Side::Lower, "single-class", lower_single_class(n, d, w, t)});
    res.trace.push_back({Side::Lower, "stacked-classes", lower_stacked(n, d, w, t)});
    res.trace.push_back({Side::Lower, "gilbert", gilbert_lower(n, d, w)});
    if (auto v = expurgation_lower(n, d, w, t)) res.trace.push_back({Side::Lower, "expurgation", *v});
    if (auto v = translation_equal(n, d, w, t)) res.trace.push_back({Side::Lower, "translation", *v});
    if (auto v = selfdual_lower(n, d, w, opts)) res.trace.push_back({Side::Lower, "selfdual", *v});
    if (auto v = trivial_one(n, d, w)) res.trace.push_back({Side::Upper, "trivial-one", *v});
    res.trace.push_back({Side::Upper, "class-sum", upper_class_sum(n, d, w, t)});
    res.trace.push_back({Side::Upper, "A(n,d)", upper_A(n, d, t)});

    for (const ExtraBound& e : extras) {
        if (auto v = e.eval(n, d, w)) {
            res.trace.push_back({e.side, e.name, *v});
            if (e.side == Side::Lower && *v > lo) { lo = *v; lo_rule = e.name; }
            if (e.side == Side::Upper && *v < hi) { hi = *v; hi_rule = e.name; }
        }
    }

    if (lo > hi)
        throw std::runtime_error("best_bounds: inconsistent bounds at (" + std::to_string(n) + "," +
                                 std::to_string(d) + "," + std::to_string(w) + "): lower " + lo.to_string() +
                                 " [" + lo_rule + "] exceeds upper " + hi.to_string() + " [" + hi_rule + "]");
    res.interval = BoundInterval{lo, hi, lo_rule, hi_rule};
    return res;
}

}  // namespace bwc

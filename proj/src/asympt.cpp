#include "bwc/asympt.hpp"

#include "bwc/combinat.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace bwc {

ExponentQuery ExponentQuery::gv_trivial(double delta, double omega) {
    ExponentQuery q;
    q.delta = delta;
    q.omega = omega;
    q.a_lower = [](double d) { return d < 0.5 ? 1.0 - entropy(d) : 0.0; };
    q.a_upper = [](double) { return 1.0; };
    q.aw_lower = [](double, double) { return 0.0; };
    q.aw_upper = [](double, double om) { return entropy(om); };
    return q;
}

std::pair<double, double> b_exponent(const ExponentQuery& q) {
    if (q.delta < 0 || q.delta > 1 || q.omega < 0 || q.omega > 1)
        throw std::invalid_argument("b_exponent: delta and omega must lie in [0,1]");
    if (!q.a_lower || !q.a_upper || !q.aw_lower || !q.aw_upper)
        throw std::invalid_argument("b_exponent: all four exponent plugs are required");
    if (q.omega <= 0.5) return {q.a_lower(q.delta), q.a_upper(q.delta)};
    return {q.aw_lower(q.delta, q.omega), q.aw_upper(q.delta, q.omega)};
}

EbCheck elias_bassalygo_check(int n, int d, int w, const KnownTable& t) {
    BoundInterval a = t.query_A(n, d);
    BoundInterval aw = t.query_Aw(n, d, w);
    if (!a.exact() || !aw.exact()) return EbCheck::Unknown;
    // A(n,d) C(n,w) <= A(n,d,w) 2^n
    return a.lower * binomial(n, w) <= aw.lower * BigInt::pow2(n) ? EbCheck::Holds : EbCheck::Fails;
}

TranslationShape translation_probability(int n, int w1, int w2, RoundingMode mode) {
    if (!(0 <= w1 && w1 < w2 && 2 * w2 <= n))
        throw std::invalid_argument("translation_probability: need 0 <= w1 < w2 <= n/2");
    TranslationShape s;
    // translate weight w = n (w2-w1) / (n-2w1), split proportionally to the
    // codeword support
    long long num = static_cast<long long>(n) * (w2 - w1);
    long long den = n - 2LL * w1;
    if (mode == RoundingMode::Exact) {
        if (num % den != 0)
            throw std::invalid_argument("translation_probability: translate weight is not integral");
        long long wt = num / den;
        if ((w1 * wt) % n != 0 || ((n - w1) * wt) % n != 0)
            throw std::invalid_argument("translation_probability: split counts are not integral");
        s.translate_weight = static_cast<int>(wt);
        s.inside = static_cast<int>(w1 * wt / n);
        s.outside = static_cast<int>((n - w1) * wt / n);
    } else {
        Rational wt(num, den);
        Rational frac = Rational(w1) * wt / Rational(n);
        s.inside = static_cast<int>(frac.floor().to_int64());
        // recompute the outside count so the translated weight lands on w2
        s.outside = w2 - w1 + s.inside;
        s.translate_weight = s.inside + s.outside;
    }
    if (s.inside < 0 || s.inside > w1 || s.outside < 0 || s.outside > n - w1)
        throw std::invalid_argument("translation_probability: infeasible split");
    s.p = Rational(binomial(w1, s.inside) * binomial(n - w1, s.outside), binomial(n, s.translate_weight));
    return s;
}

namespace {

template <typename F>
void for_each_weight_w(int n, int w, F&& f) {
    if (w == 0) { f(uint64_t(0)); return; }
    uint64_t v = (uint64_t(1) << w) - 1;
    uint64_t last = v << (n - w);
    while (true) {
        f(v);
        if (v == last) break;
        uint64_t c = v & (~v + 1);
        uint64_t r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
}

}  // namespace

TranslateResult heavy_translate(const Code& c1, int w2, TranslateMode mode, long long trials, uint64_t seed,
                                RoundingMode rounding) {
    if (c1.words.empty()) throw std::invalid_argument("heavy_translate: empty code");
    int w1 = min_weight(c1);
    if (max_weight(c1) != w1) throw std::invalid_argument("heavy_translate: input is not constant weight");
    TranslationShape shape = translation_probability(c1.n, w1, w2, rounding);
    const int n = c1.n;
    const int wt = shape.translate_weight;

    auto count_hits = [&](uint64_t t) {
        long long hits = 0;
        for (uint64_t c : c1.words)
            if (std::popcount(c ^ t) == w2) ++hits;
        return hits;
    };

    uint64_t best_t = 0;
    long long best_hits = -1;
    long long tried = 0;
    if (mode == TranslateMode::Exhaustive) {
        for_each_weight_w(n, wt, [&](uint64_t t) {
            ++tried;
            long long h = count_hits(t);
            if (h > best_hits) { best_hits = h; best_t = t; }
        });
        // averaging over all translates of this shape guarantees the yield
        BigInt guaranteed = BigInt::div_ceil(shape.p.num() * BigInt(static_cast<long long>(c1.size())),
                                             shape.p.den());
        if (BigInt(best_hits) < guaranteed)
            throw std::logic_error("heavy_translate: exhaustive yield below the averaging guarantee");
    } else {
        std::mt19937_64 rng(seed);
        std::vector<int> positions(n);
        for (int i = 0; i < n; ++i) positions[i] = i;
        for (long long it = 0; it < trials; ++it) {
            std::shuffle(positions.begin(), positions.end(), rng);
            uint64_t t = 0;
            for (int i = 0; i < wt; ++i) t |= uint64_t(1) << positions[i];
            ++tried;
            long long h = count_hits(t);
            if (h > best_hits) { best_hits = h; best_t = t; }
        }
    }

    std::vector<uint64_t> words;
    for (uint64_t c : c1.words)
        if (std::popcount(c ^ best_t) == w2) words.push_back(c ^ best_t);
    TranslateResult res;
    res.code = Code(n, std::move(words));
    res.translate = BinaryWord(n, best_t);
    res.tried = tried;
    return res;
}

}  // namespace bwc

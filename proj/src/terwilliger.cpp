#include "bwc/terwilliger.hpp"

#include "bwc/combinat.hpp"
#include "bwc/linalg.hpp"

#include <bit>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>

namespace bwc {

bool triple_valid(int n, int u, int v, int t) {
    if (u < 0 || v < 0 || t < 0 || u > n || v > n) return false;
    if (t < std::abs(u - v) || t > std::min(u + v, 2 * n - u - v)) return false;
    return (u + v - t) % 2 == 0;
}

BigInt orbit_size(int n, int u, int v, int t) {
    if (!triple_valid(n, u, v, t)) throw std::invalid_argument("orbit_size: invalid triple");
    int a = (u + v - t) / 2;          // common support
    int b = (t + v - u) / 2;          // support of y outside x
    return binomial(n, u) * binomial(u, a) * binomial(n - u, b);
}

std::vector<std::array<int, 3>> all_triples(int n) {
    std::vector<std::array<int, 3>> out;
    for (int u = 0; u <= n; ++u)
        for (int v = 0; v <= n; ++v)
            for (int t = std::abs(u - v); t <= std::min(u + v, 2 * n - u - v); t += 2)
                out.push_back({u, v, t});
    return out;
}

int ZonalKernelTable::index(int u, int v, int t) const {
    return offset_[u * (n_ + 1) + v] + (t - std::abs(u - v)) / 2;
}

const Rational& ZonalKernelTable::value(int k, int u, int v, int t) const {
    static const Rational zero;
    if (u < k || v < k || u > n_ - k || v > n_ - k) return zero;
    if (!triple_valid(n_, u, v, t)) throw std::invalid_argument("ZonalKernelTable: invalid triple");
    return tables_[k][index(u, v, t)];
}

namespace {

struct TableOps {
    int n;
    std::vector<int> offset;
    int total = 0;

    explicit TableOps(int n_) : n(n_) {
        offset.assign((n + 1) * (n + 1), -1);
        for (int u = 0; u <= n; ++u)
            for (int v = 0; v <= n; ++v) {
                offset[u * (n + 1) + v] = total;
                int tmin = std::abs(u - v), tmax = std::min(u + v, 2 * n - u - v);
                total += (tmax - tmin) / 2 + 1;
            }
    }

    int index(int u, int v, int t) const { return offset[u * (n + 1) + v] + (t - std::abs(u - v)) / 2; }

    template <typename F>
    void for_each(F&& f) const {
        for (int u = 0; u <= n; ++u)
            for (int v = 0; v <= n; ++v)
                for (int t = std::abs(u - v); t <= std::min(u + v, 2 * n - u - v); t += 2)
                    f(u, v, t, index(u, v, t));
    }

    // neighbor sum over the first argument
    std::vector<Rational> apply_Kx(const std::vector<Rational>& f) const {
        std::vector<Rational> out(total);
        for_each([&](int u, int v, int t, int idx) {
            int a = (u + v - t) / 2;
            Rational s;
            if (a > 0) s += Rational(a) * f[index(u - 1, v, t + 1)];
            if (u - a > 0) s += Rational(u - a) * f[index(u - 1, v, t - 1)];
            if (v - a > 0) s += Rational(v - a) * f[index(u + 1, v, t - 1)];
            if (n - u - v + a > 0) s += Rational(n - u - v + a) * f[index(u + 1, v, t + 1)];
            out[idx] = std::move(s);
        });
        return out;
    }

    std::vector<Rational> apply_Ky(const std::vector<Rational>& f) const {
        std::vector<Rational> out(total);
        for_each([&](int u, int v, int t, int idx) {
            int a = (u + v - t) / 2;
            Rational s;
            if (a > 0) s += Rational(a) * f[index(u, v - 1, t + 1)];
            if (v - a > 0) s += Rational(v - a) * f[index(u, v - 1, t - 1)];
            if (u - a > 0) s += Rational(u - a) * f[index(u, v + 1, t - 1)];
            if (n - u - v + a > 0) s += Rational(n - u - v + a) * f[index(u, v + 1, t + 1)];
            out[idx] = std::move(s);
        });
        return out;
    }

    // raising operator in x on a kernel pure of degree m in x: take the
    // degree-(m+1) part of multiplication by U = n - 2u
    std::vector<Rational> raise_x(const std::vector<Rational>& f, int m) const {
        std::vector<Rational> uf(total);
        for_each([&](int u, int, int, int idx) { uf[idx] = Rational(n - 2 * u) * f[idx]; });
        std::vector<Rational> k = apply_Kx(uf);
        Rational lower_eig(n - 2 * (m - 1));
        for (int i = 0; i < total; ++i) k[i] = (k[i] - lower_eig * uf[i]) * Rational(-1, 4);
        return k;
    }

    std::vector<Rational> raise_y(const std::vector<Rational>& f, int m) const {
        std::vector<Rational> vf(total);
        for_each([&](int, int v, int, int idx) { vf[idx] = Rational(n - 2 * v) * f[idx]; });
        std::vector<Rational> k = apply_Ky(vf);
        Rational lower_eig(n - 2 * (m - 1));
        for (int i = 0; i < total; ++i) k[i] = (k[i] - lower_eig * vf[i]) * Rational(-1, 4);
        return k;
    }
};

}  // namespace

ZonalKernelTable::ZonalKernelTable(int n) : n_(n) {
    TableOps ops(n);
    offset_ = ops.offset;
    int kmax = n / 2;
    tables_.resize(kmax + 1);

    // raised[l] carries (raise_x raise_y)^(level-l) of kernel l
    std::vector<std::vector<Rational>> raised(kmax + 1);
    std::vector<Rational> gamma(kmax + 1, Rational(1));   // gamma(l, level-l)

    for (int k = 0; k <= kmax; ++k) {
        // lift every lower kernel one level
        for (int l = 0; l < k; ++l) {
            raised[l] = ops.raise_x(raised[l], k - 1);
            raised[l] = ops.raise_y(raised[l], k - 1);
            int a = k - l;
            gamma[l] *= Rational(static_cast<long long>(a) * (n - 2 * l - a + 1));
        }
        // projector of the degree-k component of the distance kernel
        std::vector<Rational> zk(ops.total);
        ops.for_each([&](int, int, int t, int idx) { zk[idx] = Rational(krawtchouk(n, k, t)); });
        for (int l = 0; l < k; ++l) {
            Rational inv = Rational(1) / gamma[l];
            for (int i = 0; i < ops.total; ++i) zk[i] -= inv * raised[l][i];
        }
        raised[k] = zk;
        tables_[k] = std::move(zk);
    }

    // structural checks: vanishing outside the weight band, symmetry, and a
    // strictly positive diagonal inside the band
    for (int k = 0; k <= kmax; ++k) {
        ops.for_each([&](int u, int v, int t, int idx) {
            const Rational& val = tables_[k][idx];
            bool outside = u < k || v < k || u > n - k || v > n - k;
            if (outside && !val.is_zero())
                throw std::runtime_error("ZonalKernelTable: kernel fails to vanish outside its band");
            if (!(val == tables_[k][ops.index(v, u, t)]))
                throw std::runtime_error("ZonalKernelTable: kernel not symmetric");
            (void)t;
        });
        for (int u = k; u <= n - k; ++u)
            if (tables_[k][ops.index(u, u, 0)].sign() <= 0)
                throw std::runtime_error("ZonalKernelTable: non-positive diagonal inside the band");
    }
}

const ZonalKernelTable& ZonalKernelTable::for_length(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<ZonalKernelTable>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::unique_ptr<ZonalKernelTable>(new ZonalKernelTable(n))).first;
    return *it->second;
}

std::vector<BlockExpr> block_diagonalize(int n) {
    const ZonalKernelTable& zt = ZonalKernelTable::for_length(n);
    std::vector<BlockExpr> blocks;
    for (int k = 0; k <= n / 2; ++k) {
        BlockExpr b;
        b.k = k;
        b.first_weight = k;
        b.dim = n - 2 * k + 1;
        for (int u = k; u <= n - k; ++u)
            for (int v = k; v <= n - k; ++v)
                for (int t = std::abs(u - v); t <= std::min(u + v, 2 * n - u - v); t += 2) {
                    const Rational& z = zt.value(k, u, v, t);
                    if (z.is_zero()) continue;
                    BlockCoefficient c;
                    c.row = u - k;
                    c.col = v - k;
                    c.u = u; c.v = v; c.t = t;
                    c.coefficient = Rational(orbit_size(n, u, v, t)) * z;
                    b.coefficients.push_back(std::move(c));
                }
        blocks.push_back(std::move(b));
    }
    return blocks;
}

BlockVerifyReport verify_block_diagonalization(int n, int trials, uint64_t seed) {
    if (n < 1 || n > 6) throw std::invalid_argument("verify_block_diagonalization: n must be <= 6");
    BlockVerifyReport rep;
    rep.n = n;
    rep.trials = trials;
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * n));

    std::vector<std::array<int, 3>> triples = all_triples(n);
    std::map<std::array<int, 3>, int> tindex;
    for (size_t i = 0; i < triples.size(); ++i) tindex[triples[i]] = static_cast<int>(i);
    std::vector<BlockExpr> blocks = block_diagonalize(n);
    const size_t space = size_t(1) << n;

    for (int trial = 0; trial < trials; ++trial) {
        std::vector<double> x(triples.size(), 0.0);
        if (trial % 2 == 0) {
            // sign-indefinite invariant matrix with symmetric entries
            std::uniform_int_distribution<int> di(-4, 4);
            for (size_t i = 0; i < triples.size(); ++i) {
                auto [u, v, t] = triples[i];
                if (u > v) continue;
                double val = di(rng);
                x[i] = val;
                x[tindex[{v, u, t}]] = val;
            }
        } else {
            // orbit average of a random low-rank positive semidefinite matrix
            std::uniform_real_distribution<double> dr(-1.0, 1.0);
            std::vector<double> g(space), h(space);
            for (auto& gi : g) gi = dr(rng);
            for (auto& hi : h) hi = dr(rng);
            std::vector<double> sums(triples.size(), 0.0);
            std::vector<double> counts(triples.size(), 0.0);
            for (size_t a = 0; a < space; ++a)
                for (size_t b = 0; b < space; ++b) {
                    int u = std::popcount(a), v = std::popcount(b);
                    int t = std::popcount(a ^ b);
                    int idx = tindex[{u, v, t}];
                    sums[idx] += g[a] * g[b] + h[a] * h[b];
                    counts[idx] += 1.0;
                }
            for (size_t i = 0; i < triples.size(); ++i) x[i] = sums[i] / counts[i];
        }

        // explicit matrix verdict
        Mat m(space, space);
        for (size_t a = 0; a < space; ++a)
            for (size_t b = 0; b < space; ++b) {
                int u = std::popcount(a), v = std::popcount(b);
                m(a, b) = x[tindex[{u, v, static_cast<int>(std::popcount(a ^ b))}]];
            }
        std::vector<double> ev = sym_eigenvalues(m);
        double scale_full = std::max(1.0, std::max(std::abs(ev.front()), std::abs(ev.back())));
        double full_min = ev.front() / scale_full;

        // block verdict
        double block_min = 0.0;
        for (const BlockExpr& b : blocks) {
            Mat bm(b.dim, b.dim);
            for (const BlockCoefficient& c : b.coefficients)
                bm(c.row, c.col) += c.coefficient.to_double() * x[tindex[{c.u, c.v, c.t}]];
            std::vector<double> bev = sym_eigenvalues(bm);
            if (bev.empty()) continue;
            double scale = std::max(1.0, std::max(std::abs(bev.front()), std::abs(bev.back())));
            block_min = std::min(block_min, bev.front() / scale);
        }

        const double tol = 1e-8;
        bool full_psd = full_min >= -tol;
        bool blocks_psd = block_min >= -tol;
        if (full_psd != blocks_psd) {
            ++rep.disagreements;
            rep.detail += "trial " + std::to_string(trial) + ": full " + std::to_string(full_min) +
                          " vs blocks " + std::to_string(block_min) + "\n";
        } else if (!full_psd) {
            // verdicts agree; track how decisively for the report
            rep.max_scaled_gap = std::max(rep.max_scaled_gap, -std::max(full_min, block_min));
        }
    }
    return rep;
}

}  // namespace bwc

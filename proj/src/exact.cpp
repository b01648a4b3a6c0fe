#include "bwc/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <deque>
#include <map>
#include <functional>
#include <queue>
#include <stdexcept>

namespace bwc {

SearchSpec SearchSpec::quantity_B(int n, int d, int w, double budget) {
    return SearchSpec{n, d, w, n, budget, 0};
}
SearchSpec SearchSpec::quantity_L(int n, int d, int w, double budget) {
    return SearchSpec{n, d, 0, w, budget, 0};
}
SearchSpec SearchSpec::quantity_A(int n, int d, double budget) {
    return SearchSpec{n, d, 0, n, budget, 0};
}
SearchSpec SearchSpec::quantity_Aw(int n, int d, int w, double budget) {
    return SearchSpec{n, d, w, w, budget, 0};
}

namespace {

std::vector<uint64_t> filtered_words(int n, int min_w, int max_w) {
    std::vector<uint64_t> out;
    if (min_w == max_w) {
        // enumerate one weight class directly
        int w = min_w;
        if (w < 0 || w > n) return out;
        if (w == 0) { out.push_back(0); return out; }
        uint64_t v = (uint64_t(1) << w) - 1;
        uint64_t last = ((uint64_t(1) << w) - 1) << (n - w);
        while (true) {
            out.push_back(v);
            if (v == last) break;
            uint64_t c = v & (~v + 1);
            uint64_t r = v + c;
            v = (((r ^ v) >> 2) / c) | r;
        }
        return out;
    }
    for (uint64_t v = 0; v < (uint64_t(1) << n); ++v) {
        int w = std::popcount(v);
        if (w >= min_w && w <= max_w) out.push_back(v);
    }
    return out;
}

class Bitset {
  public:
    explicit Bitset(size_t n = 0) : n_(n), w_((n + 63) / 64, 0) {}
    void set(size_t i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(size_t i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }
    bool empty() const {
        for (uint64_t w : w_) if (w) return false;
        return true;
    }
    int first() const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return static_cast<int>(k * 64 + std::countr_zero(w_[k]));
        return -1;
    }
    size_t count() const {
        size_t c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    void and_with(const Bitset& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    }
    void and_not(const Bitset& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    }
    void assign_and(const Bitset& a, const Bitset& b) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] = a.w_[k] & b.w_[k];
    }
    // if |*this & o| == 1, return that element, else -1
    int intersect_single(const Bitset& o) const {
        int found = -1;
        for (size_t k = 0; k < w_.size(); ++k) {
            uint64_t x = w_[k] & o.w_[k];
            if (!x) continue;
            if (found >= 0 || (x & (x - 1))) return -1;
            found = static_cast<int>(k * 64 + std::countr_zero(x));
        }
        return found;
    }
    bool intersects(const Bitset& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }
    size_t size() const { return n_; }

  private:
    size_t n_;
    std::vector<uint64_t> w_;
};

struct CliqueSolver {
    size_t nv;
    std::vector<Bitset> adj;
    std::vector<int> best_clique;
    size_t best_size = 0;           // may exceed |best_clique| when seeded
    long long node_count = 0;
    std::chrono::steady_clock::time_point deadline;
    bool out_of_budget = false;

    // per-depth workspace, so the hot path never allocates
    struct Level {
        Bitset p, next, left;
        std::vector<Bitset> cls;
        std::vector<int> order, bound;
    };
    std::deque<Level> levels;

    Level& level(size_t depth) {
        while (levels.size() <= depth) {
            Level l;
            l.p = Bitset(nv);
            l.next = Bitset(nv);
            l.left = Bitset(nv);
            l.order.reserve(nv);
            l.bound.reserve(nv);
            levels.push_back(std::move(l));
        }
        return levels[depth];
    }

    bool time_up() {
        if ((node_count & 1023) == 0 &&
            std::chrono::steady_clock::now() > deadline)
            out_of_budget = true;
        return out_of_budget;
    }

    // Greedy coloring with the re-number repair step: vertices that would get
    // a color at or above the pruning threshold are swapped into lower color
    // classes when a single-conflict exchange exists. Emits vertices ordered
    // by ascending color bound.
    void color_sort(Level& lv, int threshold) {
        lv.order.clear();
        lv.bound.clear();
        lv.left = lv.p;
        size_t k = 0;
        while (!lv.left.empty()) {
            if (lv.cls.size() <= k) lv.cls.emplace_back(nv);
            Bitset& cl = lv.cls[k];
            cl.clear();
            lv.next.assign_and(lv.left, lv.left);   // candidates for this class
            while (!lv.next.empty()) {
                int v = lv.next.first();
                lv.next.reset(v);
                bool placed = false;
                if (threshold > 1 && static_cast<int>(k) + 1 >= threshold) {
                    // swap v below the pruning threshold when a single-conflict
                    // exchange exists
                    for (size_t k1 = 0; static_cast<int>(k1) + 1 < threshold && k1 < k && !placed; ++k1) {
                        int w = lv.cls[k1].intersect_single(adj[v]);
                        if (w < 0) continue;
                        for (size_t k2 = k1 + 1; static_cast<int>(k2) + 1 < threshold && k2 < k; ++k2) {
                            if (!lv.cls[k2].intersects(adj[w])) {
                                lv.cls[k1].reset(w);
                                lv.cls[k2].set(w);
                                lv.cls[k1].set(v);
                                placed = true;
                                break;
                            }
                        }
                    }
                }
                if (!placed) {
                    cl.set(v);
                    lv.next.and_not(adj[v]);
                }
                lv.left.reset(v);
            }
            ++k;
        }
        for (size_t c = 0; c < k; ++c) {
            for (int v = lv.cls[c].first(); v >= 0; v = lv.cls[c].first()) {
                lv.cls[c].reset(v);
                lv.order.push_back(v);
                lv.bound.push_back(static_cast<int>(c) + 1);
            }
        }
    }

    void expand(std::vector<int>& r, size_t depth) {
        ++node_count;
        if (time_up()) return;
        Level& lv = level(depth);
        int threshold = static_cast<int>(best_size) - static_cast<int>(r.size()) + 1;
        color_sort(lv, threshold);
        for (size_t i = lv.order.size(); i-- > 0;) {
            if (r.size() + lv.bound[i] <= best_size) return;
            int v = lv.order[i];
            r.push_back(v);
            Level& nx = level(depth + 1);
            nx.p.assign_and(lv.p, adj[v]);
            if (nx.p.empty()) {
                if (r.size() > best_clique.size()) {
                    best_clique = r;
                    best_size = std::max(best_size, r.size());
                }
            } else {
                expand(r, depth + 1);
            }
            r.pop_back();
            lv.p.reset(v);
            if (out_of_budget) return;
        }
    }

    std::vector<int> greedy_seed() {
        std::vector<int> r;
        Bitset p(nv);
        for (size_t i = 0; i < nv; ++i) p.set(i);
        while (!p.empty()) {
            int v = p.first();
            r.push_back(v);
            p.and_with(adj[v]);
        }
        return r;
    }
};

// d = 2: the incompatibility graph (pairs at distance exactly 1) is bipartite
// by weight parity, so the maximum independent set comes from Koenig's theorem.
ExactResult independent_set_bipartite(int n, const std::vector<uint64_t>& verts) {
    std::vector<int> left, right;   // indices into verts, split by parity
    std::vector<int> side_index(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) {
        if (std::popcount(verts[i]) % 2 == 0) { side_index[i] = static_cast<int>(left.size()); left.push_back(static_cast<int>(i)); }
        else                                  { side_index[i] = static_cast<int>(right.size()); right.push_back(static_cast<int>(i)); }
    }
    // adjacency: flip one bit
    auto locate = [&](uint64_t w) -> int {
        auto it = std::lower_bound(verts.begin(), verts.end(), w);
        if (it != verts.end() && *it == w) return static_cast<int>(it - verts.begin());
        return -1;
    };
    std::vector<std::vector<int>> adj(left.size());   // left-side adjacency to right indices
    for (size_t li = 0; li < left.size(); ++li) {
        uint64_t w = verts[left[li]];
        for (int b = 0; b < n; ++b) {
            int j = locate(w ^ (uint64_t(1) << b));
            if (j >= 0) adj[li].push_back(side_index[j]);
        }
    }
    // Hopcroft-Karp
    const int INF = 1 << 30;
    std::vector<int> match_l(left.size(), -1), match_r(right.size(), -1), dist(left.size());
    auto bfs = [&]() {
        std::queue<int> q;
        bool found = false;
        for (size_t i = 0; i < left.size(); ++i) {
            if (match_l[i] < 0) { dist[i] = 0; q.push(static_cast<int>(i)); }
            else dist[i] = INF;
        }
        while (!q.empty()) {
            int u = q.front(); q.pop();
            for (int v : adj[u]) {
                int w = match_r[v];
                if (w < 0) found = true;
                else if (dist[w] == INF) { dist[w] = dist[u] + 1; q.push(w); }
            }
        }
        return found;
    };
    std::function<bool(int)> dfs = [&](int u) {
        for (int v : adj[u]) {
            int w = match_r[v];
            if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
                match_l[u] = v;
                match_r[v] = u;
                return true;
            }
        }
        dist[u] = INF;
        return false;
    };
    while (bfs())
        for (size_t i = 0; i < left.size(); ++i)
            if (match_l[i] < 0) dfs(static_cast<int>(i));

    // Koenig: minimum vertex cover = (L \ Z) union (R intersect Z), Z = alternating-reachable
    std::vector<bool> vis_l(left.size(), false), vis_r(right.size(), false);
    std::queue<int> q;
    for (size_t i = 0; i < left.size(); ++i)
        if (match_l[i] < 0) { vis_l[i] = true; q.push(static_cast<int>(i)); }
    while (!q.empty()) {
        int u = q.front(); q.pop();
        for (int v : adj[u]) {
            if (vis_r[v]) continue;
            vis_r[v] = true;
            if (match_r[v] >= 0 && !vis_l[match_r[v]]) { vis_l[match_r[v]] = true; q.push(match_r[v]); }
        }
    }
    std::vector<uint64_t> chosen;
    for (size_t i = 0; i < left.size(); ++i)
        if (vis_l[i]) chosen.push_back(verts[left[i]]);                 // L intersect Z
    for (size_t j = 0; j < right.size(); ++j)
        if (!vis_r[j]) chosen.push_back(verts[right[j]]);               // R \ Z
    ExactResult res;
    res.value = static_cast<long long>(chosen.size());
    res.witness = Code(n, std::move(chosen));
    res.proved_optimal = true;
    return res;
}

}  // namespace

namespace {

// Shallow levels branch on orbit representatives of the candidate words under
// the stabilizer of the words fixed so far. The stabilizer is tracked as a
// coordinate partition (product of symmetric groups on the cells); words with
// equal per-cell popcounts are in one orbit, and after a representative is
// explored its whole orbit can be discarded. Once the search is deeper than
// orbit_depth the remaining subproblem goes to the bitset clique solver.
struct OrbitSearch {
    int n, d;
    size_t orbit_depth = 3;
    size_t best_size = 0;
    std::vector<uint64_t> best_words;
    std::vector<uint64_t> prefix;
    std::chrono::steady_clock::time_point deadline;
    bool out_of_budget = false;
    long long leaf_count = 0;

    bool time_up() {
        if (std::chrono::steady_clock::now() > deadline) out_of_budget = true;
        return out_of_budget;
    }

    static std::vector<uint64_t> refine(const std::vector<uint64_t>& cells, uint64_t support) {
        std::vector<uint64_t> out;
        for (uint64_t cell : cells) {
            uint64_t in = cell & support, rest = cell & ~support;
            if (in) out.push_back(in);
            if (rest) out.push_back(rest);
        }
        return out;
    }

    std::vector<int> type_of(uint64_t v, const std::vector<uint64_t>& cells) const {
        std::vector<int> t;
        t.reserve(cells.size());
        for (uint64_t cell : cells) t.push_back(std::popcount(v & cell));
        return t;
    }

    void leaf_solve(const std::vector<uint64_t>& cand_in) {
        ++leaf_count;
        size_t nv = cand_in.size();
        // descending compatibility degree, lexicographic tie-break
        std::vector<int> deg(nv, 0);
        for (size_t i = 0; i < nv; ++i)
            for (size_t j = i + 1; j < nv; ++j)
                if (std::popcount(cand_in[i] ^ cand_in[j]) >= d) { ++deg[i]; ++deg[j]; }
        std::vector<size_t> perm(nv);
        for (size_t i = 0; i < nv; ++i) perm[i] = i;
        std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
            if (deg[a] != deg[b]) return deg[a] > deg[b];
            return cand_in[a] < cand_in[b];
        });
        std::vector<uint64_t> cand(nv);
        for (size_t i = 0; i < nv; ++i) cand[i] = cand_in[perm[i]];
        CliqueSolver solver;
        solver.nv = nv;
        solver.adj.assign(nv, Bitset(nv));
        for (size_t i = 0; i < nv; ++i)
            for (size_t j = i + 1; j < nv; ++j)
                if (std::popcount(cand[i] ^ cand[j]) >= d) {
                    solver.adj[i].set(j);
                    solver.adj[j].set(i);
                }
        solver.deadline = deadline;
        if (best_size > prefix.size()) solver.best_size = best_size - prefix.size();
        std::vector<int> r;
        CliqueSolver::Level& root_level = solver.level(0);
        for (size_t i = 0; i < nv; ++i) root_level.p.set(i);
        solver.expand(r, 0);
        if (solver.out_of_budget) out_of_budget = true;
        if (prefix.size() + solver.best_clique.size() > best_words.size()) {
            best_words = prefix;
            for (int v : solver.best_clique) best_words.push_back(cand[v]);
            best_size = std::max(best_size, best_words.size());
        }
    }

    void record_prefix() {
        if (prefix.size() > best_words.size()) {
            best_words = prefix;
            best_size = std::max(best_size, best_words.size());
        }
    }

    void expand(std::vector<uint64_t> cand, std::vector<uint64_t> cells) {
        if (time_up()) return;
        record_prefix();
        if (cand.empty()) return;
        if (prefix.size() + cand.size() <= best_size) return;
        if (prefix.size() >= orbit_depth || cells.size() >= static_cast<size_t>(n)) {
            leaf_solve(cand);
            return;
        }
        // group candidates into stabilizer orbits
        std::map<std::vector<int>, std::vector<uint64_t>> groups;
        for (uint64_t v : cand) groups[type_of(v, cells)].push_back(v);
        // deterministic exploration order: larger orbits first, then key
        std::vector<const std::pair<const std::vector<int>, std::vector<uint64_t>>*> order;
        for (const auto& g : groups) order.push_back(&g);
        std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
            if (a->second.size() != b->second.size()) return a->second.size() > b->second.size();
            return a->first < b->first;
        });
        std::vector<uint64_t> remaining = cand;
        for (auto* g : order) {
            if (time_up()) return;
            if (prefix.size() + remaining.size() <= best_size) return;
            uint64_t rep = g->second.front();
            // candidates compatible with rep
            std::vector<uint64_t> next;
            for (uint64_t v : remaining)
                if (v != rep && std::popcount(v ^ rep) >= d) next.push_back(v);
            prefix.push_back(rep);
            expand(std::move(next), refine(cells, rep));
            prefix.pop_back();
            // discard the whole orbit of rep
            std::vector<uint64_t> rest;
            rest.reserve(remaining.size());
            const std::vector<int>& key = g->first;
            for (uint64_t v : remaining)
                if (type_of(v, cells) != key) rest.push_back(v);
            remaining = std::move(rest);
        }
    }
};

}  // namespace

ExactResult max_code(const SearchSpec& spec) {
    if (spec.n < 1 || spec.n > 22) throw std::invalid_argument("max_code: n must be in [1,22]");
    if (spec.d < 1 || spec.budget_seconds <= 0) throw std::invalid_argument("max_code: bad spec");
    int min_w = std::max(0, spec.min_w), max_w = std::min(spec.n, spec.max_w);
    std::vector<uint64_t> verts = filtered_words(spec.n, min_w, max_w);
    if (verts.empty()) return ExactResult{0, Code(spec.n, {}), true};
    if (verts.size() > (size_t(1) << 20)) throw std::invalid_argument("max_code: vertex set too large");

    if (spec.d == 1) {
        ExactResult r;
        r.value = static_cast<long long>(verts.size());
        r.witness = Code(spec.n, verts);
        r.proved_optimal = true;
        return r;
    }
    if (spec.d == 2) return independent_set_bipartite(spec.n, verts);

    // Unfiltered instances are vertex-transitive under translation: fix the
    // zero word and search its compatibility neighborhood. Coordinate
    // symmetry is handled orbit-wise inside the search.
    bool rooted = false;
    uint64_t root = 0;
    if (verts.size() > 1 && min_w == 0 && max_w >= spec.n) {
        rooted = true;
        root = 0;
        std::vector<uint64_t> nbrs;
        for (uint64_t v : verts)
            if (v != root && std::popcount(v) >= spec.d) nbrs.push_back(v);
        verts = std::move(nbrs);
        if (verts.empty()) {
            ExactResult r;
            r.value = 1;
            r.witness = Code(spec.n, {root});
            r.proved_optimal = true;
            return r;
        }
    }

    if (verts.size() > 20000) throw std::invalid_argument("max_code: graph too large for clique search");

    OrbitSearch search;
    search.n = spec.n;
    search.d = spec.d;
    search.deadline = std::chrono::steady_clock::now() +
                      std::chrono::milliseconds(static_cast<long long>(spec.budget_seconds * 1000));
    long long base = rooted ? 1 : 0;
    if (spec.initial_incumbent > base)
        search.best_size = static_cast<size_t>(spec.initial_incumbent - base) - 1;
    uint64_t full = spec.n == 64 ? ~uint64_t(0) : ((uint64_t(1) << spec.n) - 1);
    search.expand(verts, {full});

    bool proved = !search.out_of_budget;
    if (static_cast<long long>(search.best_words.size()) + base < spec.initial_incumbent && proved)
        throw std::runtime_error("max_code: completed search contradicts the caller's lower bound");

    std::vector<uint64_t> words;
    if (rooted) words.push_back(root);
    for (uint64_t v : search.best_words) words.push_back(v);
    if (words.empty()) words.push_back(verts.front());
    ExactResult res;
    res.value = static_cast<long long>(words.size());
    res.witness = Code(spec.n, std::move(words));
    res.proved_optimal = proved;
    return res;
}

int covering_radius(const Code& c) {
    if (c.n > 20) throw std::invalid_argument("covering_radius: n must be <= 20");
    if (c.words.empty()) throw std::invalid_argument("covering_radius: empty code");
    size_t space = size_t(1) << c.n;
    std::vector<uint8_t> dist(space, 0xff);
    std::queue<uint32_t> q;
    for (uint64_t w : c.words) {
        dist[w] = 0;
        q.push(static_cast<uint32_t>(w));
    }
    int radius = 0;
    while (!q.empty()) {
        uint32_t x = q.front(); q.pop();
        for (int b = 0; b < c.n; ++b) {
            uint32_t y = x ^ (uint32_t(1) << b);
            if (dist[y] == 0xff) {
                dist[y] = static_cast<uint8_t>(dist[x] + 1);
                radius = std::max(radius, static_cast<int>(dist[y]));
                q.push(y);
            }
        }
    }
    return radius;
}

std::optional<long long> expurgation_exact(const WeightEnumerator& w, int d, int wt, long long sdp_upper) {
    (void)d;
    BigInt lower = enumerator_partial_sum(w, wt, SumDirection::AtMost);
    if (!lower.fits_int64())
        throw std::runtime_error("expurgation_exact: partial sum out of range");
    long long lo = lower.to_int64();
    if (lo > sdp_upper)
        throw std::runtime_error("expurgation_exact: enumerator lower bound " + std::to_string(lo) +
                                 " exceeds SDP upper bound " + std::to_string(sdp_upper) +
                                 " (bad asset or bad solver)");
    if (lo == sdp_upper) return lo;
    return std::nullopt;
}

AssetReport verify_code_asset(const CodeAsset& asset) {
    AssetReport rep;
    rep.name = asset.name;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
    };
    Code code;
    try {
        code = asset.load();
    } catch (const std::exception& e) {
        fail(std::string("load failed: ") + e.what());
        return rep;
    }
    rep.computed_size = static_cast<long long>(code.size());
    rep.computed_d = min_distance(code);
    if (code.n != asset.claims.n)
        fail("length mismatch: computed " + std::to_string(code.n));
    if (rep.computed_size != asset.claims.size)
        fail("size mismatch: computed " + std::to_string(rep.computed_size));
    if (rep.computed_d != asset.claims.min_distance)
        fail("min distance mismatch: computed " + std::to_string(rep.computed_d));
    if (asset.claims.min_weight >= 0 && min_weight(code) != asset.claims.min_weight)
        fail("min weight mismatch: computed " + std::to_string(min_weight(code)));
    if (!asset.claims.enumerator_file.empty()) {
        WeightEnumerator claimed = load_asset_enumerator(asset.claims.enumerator_file);
        WeightEnumerator computed = WeightEnumerator::of_code(code);
        if (claimed.n != computed.n || claimed.coeffs != computed.coeffs)
            fail("weight distribution mismatch");
    }
    return rep;
}

}  // namespace bwc

#include "bwc/tablegen.hpp"

#include "bwc/assets.hpp"
#include "bwc/bounds.hpp"
#include "bwc/exact.hpp"
#include "bwc/sdp_build.hpp"

#include <cstdio>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace bwc {

namespace {

struct TableShape {
    int d;
    int n_lo, n_hi;
    int w_lo, w_hi;
    bool sdp;                       // IV-VI: bounds on the max-weight side
};

TableShape shape_of(PaperTable which) {
    switch (which) {
        case PaperTable::I: return {4, 6, 10, 2, 9, false};
        case PaperTable::II: return {6, 9, 13, 2, 9, false};
        case PaperTable::III: return {8, 12, 15, 2, 9, false};
        case PaperTable::IV: return {4, 10, 20, 4, 13, true};
        case PaperTable::V: return {6, 14, 20, 6, 11, true};
        case PaperTable::VI: return {8, 18, 24, 8, 16, true};
    }
    throw std::logic_error("shape_of: bad table");
}

// enumerator assets backing the expurgation-exact cells
struct ExpurgationSource {
    int n, d;
    const char* code_asset;
};
const ExpurgationSource kExpurgationSources[] = {
    {16, 4, "rm-2-4"},
    {16, 6, "nordstrom-robinson-16"},
    {23, 8, "golay-dual-23-11"},
    {24, 8, "ext-golay-24-12"},
};

std::string interval_text(const BigInt& lo, const BigInt& hi) {
    if (lo == hi) return lo.to_string();
    return lo.to_string() + "-" + hi.to_string();
}

}  // namespace

PaperTable parse_table_name(const std::string& s) {
    if (s == "I" || s == "1") return PaperTable::I;
    if (s == "II" || s == "2") return PaperTable::II;
    if (s == "III" || s == "3") return PaperTable::III;
    if (s == "IV" || s == "4") return PaperTable::IV;
    if (s == "V" || s == "5") return PaperTable::V;
    if (s == "VI" || s == "6") return PaperTable::VI;
    throw std::invalid_argument("unknown table name '" + s + "' (expected I..VI)");
}

TableResult run_table(PaperTable which, const KnownTable& t, const TableOptions& opts) {
    TableShape sh = shape_of(which);
    TableResult res;
    res.which = which;
    res.d = sh.d;

    // verified enumerators for the exact-value pipeline
    std::map<int, WeightEnumerator> expurgation;   // keyed by n, for this d
    if (sh.sdp) {
        for (const auto& src : kExpurgationSources) {
            if (src.d != sh.d) continue;
            CodeAsset asset = find_code_asset(src.code_asset);
            AssetReport rep = verify_code_asset(asset);
            if (!rep.ok)
                throw std::runtime_error("run_table: asset " + asset.name + " failed verification");
            expurgation.emplace(src.n, load_asset_enumerator(asset.claims.enumerator_file));
        }
    }

    // the SDP cells are independent; solve them in a small worker pool and
    // assemble in deterministic order afterwards
    std::map<std::pair<int, int>, long long> sdp_values;
    if (sh.sdp) {
        std::vector<std::pair<int, int>> cells;
        for (int n = sh.n_lo; n <= sh.n_hi; ++n)
            for (int w = sh.w_lo; w <= std::min(sh.w_hi, n); ++w) cells.push_back({n, w});
        unsigned workers = std::max(1u, std::thread::hardware_concurrency());
        std::atomic<size_t> next{0};
        std::mutex mu;
        std::vector<std::future<void>> pool;
        for (unsigned rank = 0; rank < workers; ++rank)
            pool.push_back(std::async(std::launch::async, [&]() {
                for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
                    auto [n, w] = cells[i];
                    if (opts.progress) std::fprintf(stderr, "table cell L(%d,%d,%d)...\n", n, sh.d, w);
                    long long v = -1;
                    try {
                        SolveOptions sopts;
                        sopts.tol = opts.sdp_tol;
                        v = theta_prime_bound(n, sh.d, w, sopts).bound;
                    } catch (const std::exception&) {
                        v = -1;
                    }
                    std::lock_guard<std::mutex> lock(mu);
                    sdp_values[{n, w}] = v;
                }
            }));
        for (auto& f : pool) f.get();
    }

    for (int n = sh.n_lo; n <= sh.n_hi; ++n) {
        res.a_column.push_back({n, t.query_A(n, sh.d).upper});
        for (int w = sh.w_lo; w <= std::min(sh.w_hi, n); ++w) {
            TableCell cell;
            cell.n = n;
            cell.w = w;
            if (!sh.sdp) {
                BestBoundsResult bb = best_bounds({BoundQuantity::B, n, sh.d, w}, t);
                cell.lower = bb.interval.lower;
                cell.upper = bb.interval.upper;
                cell.lower_rule = bb.interval.lower_provenance;
                cell.upper_rule = bb.interval.upper_provenance;
                cell.text = interval_text(cell.lower, cell.upper);
            } else {
                long long sdp_value = sdp_values.at({n, w});
                if (sdp_value < 0) {
                    // report the failure in the cell rather than dropping it
                    cell.text = "ERR";
                    cell.upper_rule = "solver failure";
                    res.cells.push_back(std::move(cell));
                    continue;
                }
                cell.upper = BigInt(sdp_value);
                cell.upper_rule = "theta-prime";
                cell.lower = BigInt(1);
                cell.lower_rule = "trivial";
                auto it = expurgation.find(n);
                if (it != expurgation.end()) {
                    auto exact = expurgation_exact(it->second, sh.d, w, sdp_value);
                    if (exact) {
                        cell.exact_by_expurgation = true;
                        cell.lower = BigInt(*exact);
                        cell.lower_rule = "expurgation";
                    }
                }
                // star when the value beats the class-sum bound where that
                // bound itself beats A(n,d)
                BigInt class_sum(0);
                for (int j = 0; j <= w; ++j) class_sum += t.query_Aw(n, sh.d, j).upper;
                BigInt a_upper = t.query_A(n, sh.d).upper;
                cell.starred = class_sum < a_upper && cell.upper < class_sum;
                cell.text = cell.upper.to_string();
                if (cell.exact_by_expurgation) cell.text = "**" + cell.text + "**";
                if (cell.starred) cell.text += "*";
            }
            res.cells.push_back(std::move(cell));
        }
    }

    // render
    std::ostringstream os;
    std::map<std::pair<int, int>, const TableCell*> by_pos;
    for (const TableCell& c : res.cells) by_pos[{c.n, c.w}] = &c;
    const char* title = sh.sdp ? "upper bounds on L(n,d,w)" : "bounds on B(n,d,w)";
    if (opts.format == TableFormat::Markdown) {
        os << "## d = " << sh.d << " (" << title << ")\n\n";
        os << "| n | A(n," << sh.d << ") |";
        for (int w = sh.w_lo; w <= sh.w_hi; ++w) os << " w=" << w << " |";
        os << "\n|---|---|";
        for (int w = sh.w_lo; w <= sh.w_hi; ++w) os << "---|";
        os << "\n";
        for (const auto& [n, a] : res.a_column) {
            os << "| " << n << " | " << a.to_string() << " |";
            for (int w = sh.w_lo; w <= sh.w_hi; ++w) {
                auto it = by_pos.find({n, w});
                os << " " << (it == by_pos.end() ? "" : it->second->text) << " |";
            }
            os << "\n";
        }
    } else if (opts.format == TableFormat::Csv) {
        os << "n,A(n;" << sh.d << ")";
        for (int w = sh.w_lo; w <= sh.w_hi; ++w) os << ",w=" << w;
        os << "\n";
        for (const auto& [n, a] : res.a_column) {
            os << n << "," << a.to_string();
            for (int w = sh.w_lo; w <= sh.w_hi; ++w) {
                auto it = by_pos.find({n, w});
                os << "," << (it == by_pos.end() ? "" : it->second->text);
            }
            os << "\n";
        }
    } else {
        os << "{\n  \"d\": " << sh.d << ",\n  \"cells\": [\n";
        bool first = true;
        for (const TableCell& c : res.cells) {
            if (!first) os << ",\n";
            first = false;
            os << "    {\"n\": " << c.n << ", \"w\": " << c.w << ", \"lower\": " << c.lower.to_string()
               << ", \"upper\": " << c.upper.to_string() << ", \"lower_rule\": \"" << c.lower_rule
               << "\", \"upper_rule\": \"" << c.upper_rule << "\", \"exact\": "
               << (c.exact_by_expurgation ? "true" : "false") << ", \"starred\": " << (c.starred ? "true" : "false")
               << "}";
        }
        os << "\n  ]\n}\n";
    }
    res.document = os.str();
    return res;
}

}  // namespace bwc

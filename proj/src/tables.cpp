#include "bwc/tables.hpp"

#include "bwc/assets.hpp"
#include "bwc/combinat.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace bwc {

namespace {

Quantity parse_quantity(const std::string& s) {
    if (s == "A") return Quantity::A;
    if (s == "Aw") return Quantity::Aw;
    if (s == "Aq") return Quantity::Aq;
    if (s == "R") return Quantity::CoveringRadius;
    throw std::runtime_error("KnownTable: unknown quantity '" + s + "'");
}

std::string record_key(const KnownValueRecord& r) {
    std::string k = "(n=" + std::to_string(r.n) + ",d=" + std::to_string(r.d);
    if (r.w >= 0) k += ",w=" + std::to_string(r.w);
    if (r.q >= 0) k += ",q=" + std::to_string(r.q);
    return k + ")";
}

}  // namespace

KnownTable::KnownTable(std::vector<KnownValueRecord> records, std::string version)
    : version_(std::move(version)), records_(std::move(records)) {
    index();
    // completion must never contradict the stored data; surface any
    // inconsistency at load time with the offending key
    for (const auto& r : records_) {
        if (r.quantity == Quantity::A) (void)query_A(r.n, r.d);
        if (r.quantity == Quantity::Aw) (void)query_Aw(r.n, r.d, r.w);
    }
}

void KnownTable::index() {
    for (const auto& r : records_) {
        if (r.n < 1 || r.d < 1 || r.d > r.n)
            throw std::runtime_error("KnownTable: parameters out of range for record " + record_key(r));
        if (r.lower > r.upper || r.lower < BigInt(1))
            throw std::runtime_error("KnownTable: lower > upper (or < 1) for record " + record_key(r));
        max_n_ = std::max(max_n_, r.n);
        switch (r.quantity) {
            case Quantity::A: {
                auto key = std::make_pair(r.n, r.d);
                if (a_.count(key)) throw std::runtime_error("KnownTable: duplicate A record " + record_key(r));
                a_[key] = BoundInterval{r.lower, r.upper, "table:" + r.source, "table:" + r.source};
                break;
            }
            case Quantity::Aw: {
                if (r.w < 0 || r.w > r.n)
                    throw std::runtime_error("KnownTable: bad w in record " + record_key(r));
                auto key = std::make_tuple(r.n, r.d, r.w);
                if (aw_.count(key)) throw std::runtime_error("KnownTable: duplicate Aw record " + record_key(r));
                // consistency with the trivial exact values
                if (r.d > 2 * std::min(r.w, r.n - r.w) && !(r.lower == BigInt(1) && r.upper == BigInt(1)))
                    throw std::runtime_error("KnownTable: record contradicts trivial value " + record_key(r));
                aw_[key] = BoundInterval{r.lower, r.upper, "table:" + r.source, "table:" + r.source};
                break;
            }
            case Quantity::Aq: {
                aq_[std::make_tuple(r.n, r.d, r.q)] =
                    BoundInterval{r.lower, r.upper, "table:" + r.source, "table:" + r.source};
                break;
            }
            case Quantity::CoveringRadius: {
                auto key = std::make_pair(r.n, r.d);
                BigInt cur = cr_.count(key) ? cr_[key] : BigInt(0);
                cr_[key] = std::max(cur, r.lower);
                break;
            }
        }
    }
}

KnownTable KnownTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("KnownTable::load: cannot open " + path);
    nlohmann::json j;
    in >> j;
    std::vector<KnownValueRecord> recs;
    for (const auto& e : j.at("records")) {
        KnownValueRecord r;
        r.quantity = parse_quantity(e.at("quantity").get<std::string>());
        r.n = e.at("n").get<int>();
        r.d = e.at("d").get<int>();
        r.w = e.value("w", -1);
        r.q = e.value("q", -1);
        r.lower = BigInt(e.at("lower").get<long long>());
        r.upper = BigInt(e.at("upper").get<long long>());
        r.source = e.value("source", "");
        recs.push_back(std::move(r));
    }
    return KnownTable(std::move(recs), j.value("version", ""));
}

KnownTable KnownTable::load_default() {
    return load(assets_dir() + "/knowns-2010.json");
}

BoundInterval KnownTable::query_A(int n, int d) const {
    if (n < 1 || d < 1 || d > n) throw std::invalid_argument("query_A: need 1 <= d <= n");
    if (d == 1) return {BigInt::pow2(n), BigInt::pow2(n), "whole-space", "whole-space"};
    if (d == n) return {BigInt(2), BigInt(2), "repetition", "repetition"};

    BoundInterval res{BigInt(2), BigInt::pow2(n), "repetition", "whole-space"};
    if (auto it = a_.find({n, d}); it != a_.end()) {
        res = it->second;
        if (res.exact()) return res;
    }
    // monotone completion against every stored record
    for (const auto& [key, iv] : a_) {
        auto [sn, sd] = key;
        // lower: A non-increasing in d, non-decreasing in n
        if (sn <= n && sd >= d && iv.lower > res.lower) {
            res.lower = iv.lower;
            res.lower_provenance = "monotone(A(" + std::to_string(sn) + "," + std::to_string(sd) + "))";
        }
        // upper: A non-increasing in d; halving A(n,d) <= 2 A(n-1,d)
        if (sn <= n && sd <= d) {
            BigInt up = iv.upper;
            for (int k = sn; k < n; ++k) up = up * BigInt(2);
            if (up < res.upper) {
                res.upper = up;
                res.upper_provenance = "monotone(A(" + std::to_string(sn) + "," + std::to_string(sd) + "))";
            }
        }
    }
    if (res.lower > res.upper)
        throw std::runtime_error("query_A: stored records are mutually inconsistent at (" +
                                 std::to_string(n) + "," + std::to_string(d) + ")");
    return res;
}

BoundInterval KnownTable::query_Aw(int n, int d, int w) const {
    if (n < 1 || d < 1 || w < 0 || w > n) throw std::invalid_argument("query_Aw: bad parameters");
    // trivial exact cases
    if (w == 0 || w == n) return {BigInt(1), BigInt(1), "single-word", "single-word"};
    if (d > 2 * std::min(w, n - w)) return {BigInt(1), BigInt(1), "trivial-one", "trivial-one"};
    if (d <= 2) return {binomial(n, w), binomial(n, w), "whole-weight-class", "whole-weight-class"};

    BoundInterval res{BigInt(1), binomial(n, w), "trivial-one", "weight-class-size"};
    auto probe = [&](int nn, int dd, int ww) -> const BoundInterval* {
        auto it = aw_.find({nn, dd, ww});
        return it == aw_.end() ? nullptr : &it->second;
    };
    // stored, including complement symmetry
    for (int ww : {w, n - w}) {
        if (const BoundInterval* iv = probe(n, d, ww)) {
            if (iv->lower > res.lower) { res.lower = iv->lower; res.lower_provenance = iv->lower_provenance; }
            if (iv->upper < res.upper) { res.upper = iv->upper; res.upper_provenance = iv->upper_provenance; }
        }
        // lower completion: A(n,d,w) is non-increasing in d
        for (int dd = d + 1; dd <= n; ++dd)
            if (const BoundInterval* iv = probe(n, dd, ww))
                if (iv->lower > res.lower) {
                    res.lower = iv->lower;
                    res.lower_provenance = "monotone-d(" + iv->lower_provenance + ")";
                }
        // upper completion from smaller d
        for (int dd = 3; dd < d; ++dd)
            if (const BoundInterval* iv = probe(n, dd, ww))
                if (iv->upper < res.upper) {
                    res.upper = iv->upper;
                    res.upper_provenance = "monotone-d(" + iv->upper_provenance + ")";
                }
    }
    if (res.lower > res.upper)
        throw std::runtime_error("query_Aw: stored records are mutually inconsistent at (" + std::to_string(n) +
                                 "," + std::to_string(d) + "," + std::to_string(w) + ")");
    return res;
}

std::optional<BoundInterval> KnownTable::query_Aq(int N, int D, int q) const {
    auto it = aq_.find({N, D, q});
    if (it == aq_.end()) return std::nullopt;
    return it->second;
}

int covering_radius_sphere_lb(int n, const BigInt& a_upper) {
    BigInt space = BigInt::pow2(n);
    BigInt ball(0);
    for (int r = 0; r <= n; ++r) {
        ball += binomial(n, r);
        if (a_upper * ball >= space) return r;
    }
    return n;
}

BigInt KnownTable::covering_radius_lower(int n, int d) const {
    BigInt best(covering_radius_sphere_lb(n, query_A(n, d).upper));
    if (auto it = cr_.find({n, d}); it != cr_.end()) best = std::max(best, it->second);
    return best;
}

}  // namespace bwc

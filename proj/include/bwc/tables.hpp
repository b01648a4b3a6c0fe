#pragma once

#include "bwc/bigint.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bwc {

// Certified integer interval with per-side provenance.
struct BoundInterval {
    BigInt lower{1};
    BigInt upper{0};
    std::string lower_provenance;
    std::string upper_provenance;

    bool valid() const { return BigInt(1) <= lower && lower <= upper; }
    bool exact() const { return lower == upper; }
};

enum class Quantity { A, Aw, Aq, CoveringRadius };

struct KnownValueRecord {
    Quantity quantity = Quantity::A;
    int n = 0;
    int d = 0;
    int w = -1;                       // Aw only
    int q = -1;                       // Aq only
    BigInt lower{1};
    BigInt upper{1};
    std::string source;
};

// Immutable store of known values; queries fall back to sound trivial
// intervals and monotonicity completion, never to an error.
class KnownTable {
  public:
    KnownTable() = default;
    explicit KnownTable(std::vector<KnownValueRecord> records, std::string version = "");

    static KnownTable load(const std::string& path);
    static KnownTable load_default();          // assets_dir()/knowns-2010.json

    const std::string& version() const { return version_; }
    size_t size() const { return records_.size(); }
    const std::vector<KnownValueRecord>& records() const { return records_; }

    // A(n,d): stored, else monotone completion over stored records
    // (non-increasing in d, non-decreasing in n, A <= 2 A(n-1,d), A(n,1)=2^n,
    // A(n,n)=2), else [1, 2^n].
    BoundInterval query_A(int n, int d) const;

    // A(n,d,w): stored under (n,d,w) or (n,d,n-w); trivial exact cases; lower
    // side completed by relaxing d; fallback [1, C(n,w)].
    BoundInterval query_Aw(int n, int d, int w) const;

    // A_q(N,D) if stored.
    std::optional<BoundInterval> query_Aq(int N, int D, int q) const;

    // Largest known covering-radius lower bound of an optimal (n,d) code:
    // stored records combined with the sphere-covering bound.
    BigInt covering_radius_lower(int n, int d) const;

  private:
    std::string version_;
    std::vector<KnownValueRecord> records_;
    std::map<std::pair<int, int>, BoundInterval> a_;                 // (n,d)
    std::map<std::tuple<int, int, int>, BoundInterval> aw_;          // (n,d,w)
    std::map<std::tuple<int, int, int>, BoundInterval> aq_;          // (N,D,q)
    std::map<std::pair<int, int>, BigInt> cr_;                       // (n,d)
    int max_n_ = 0;

    void index();
};

// Sphere-covering bound: smallest R with A_upper * sum_{i<=R} C(n,i) >= 2^n.
// Valid lower bound on the covering radius of every (n,d)-optimal code.
int covering_radius_sphere_lb(int n, const BigInt& a_upper);

}  // namespace bwc

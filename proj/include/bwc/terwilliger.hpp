#pragma once

#include "bwc/bigint.hpp"
#include "bwc/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bwc {

// Orbits of ordered pairs (x,y) in H_n^2 under coordinate permutations are
// labelled by (u,v,t) = (wt x, wt y, d(x,y)).
bool triple_valid(int n, int u, int v, int t);
BigInt orbit_size(int n, int u, int v, int t);
// all valid triples of H_n^2 in deterministic (u,v,t) order
std::vector<std::array<int, 3>> all_triples(int n);

// Exact values of the zonal kernels of the isotypic components, computed per
// n by projecting the Krawtchouk kernels and raising: the degree-k kernel is
// K_k(t) minus the raised images of the lower kernels. Cached per n.
class ZonalKernelTable {
  public:
    static const ZonalKernelTable& for_length(int n);

    int n() const { return n_; }
    int kmax() const { return n_ / 2; }
    // zero outside k <= u,v <= n-k
    const Rational& value(int k, int u, int v, int t) const;

  private:
    explicit ZonalKernelTable(int n);
    int n_;
    std::vector<std::vector<Rational>> tables_;   // [k][triple index]
    std::vector<int> offset_;                     // (u,v) -> base index
    int index(int u, int v, int t) const;
    friend class ZonalKernelTableBuilder;
};

// Linear matrix expressions equivalent to positive semidefiniteness of an
// invariant 2^n x 2^n matrix: for each k the block has rows and columns
// indexed by weights k..n-k, and its (a,b) entry is
//   sum_t x_{a,b,t} * orbit_size(n,a,b,t) * Z_k(a,b,t).
struct BlockCoefficient {
    int row = 0, col = 0;           // 0-based block indices
    int u = 0, v = 0, t = 0;        // triple of the variable
    Rational coefficient;
};

struct BlockExpr {
    int k = 0;
    int dim = 0;
    int first_weight = 0;           // weight of block row 0
    std::vector<BlockCoefficient> coefficients;
};

std::vector<BlockExpr> block_diagonalize(int n);

struct BlockVerifyReport {
    int n = 0;
    int trials = 0;
    int disagreements = 0;
    double max_scaled_gap = 0.0;    // worst |lambda_min|/scale seen on the agreeing side
    std::string detail;
};

// Compare the PSD verdict of the blocks against an explicit 2^n
// eigendecomposition on random invariant matrices (both sign-indefinite and
// PSD instances). Any disagreement beyond tolerance 1e-8 is a defect.
BlockVerifyReport verify_block_diagonalization(int n, int trials, uint64_t seed = 0x5eed);

}  // namespace bwc

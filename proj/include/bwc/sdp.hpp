#pragma once

#include <optional>
#include <string>
#include <vector>

namespace bwc {

// Solver-facing form:
//   maximize  obj_constant + c^T x   subject to   F0 + sum_i x_i F_i  PSD.
// Blocks with negative dimension are diagonal. Inequalities and nonnegative
// scalars from the modeling layer become diagonal slots.
struct LoweredSdp {
    struct Entry {
        int block = 0;
        int row = 0, col = 0;     // row <= col
        double value = 0.0;
    };

    std::string name;
    std::vector<int> block_dims;
    int m = 0;
    double obj_constant = 0.0;
    std::vector<double> c;
    std::vector<Entry> f0;
    std::vector<std::vector<Entry>> f;

    // optional solver/certification metadata
    std::vector<double> x0;          // strictly feasible start
    double var_sum_bound = -1.0;     // sum_i |x_i| over the feasible set, when known
    // every feasible x has x_i >= 0 and c_i >= 1, so ||x||_1 <= c^T x; this
    // turns dual residuals into a multiplicative correction
    bool objective_dominates_l1 = false;
    std::vector<std::string> var_names;

    void validate() const;
};

// Modeling form: PSD matrix variables, scalar variables, and linear
// equality/inequality constraints over their entries; sense is maximize.
struct SdpProblem {
    struct Block {
        std::string name;
        int dim = 0;
    };
    struct Scalar {
        std::string name;
        bool nonneg = false;
    };
    // one linear term: either a scalar variable or a matrix entry (row<=col,
    // coefficient applies to the symmetric pair)
    struct Term {
        int scalar = -1;
        int block = -1;
        int row = 0, col = 0;
        double coef = 0.0;
    };
    enum class Rel { LessEq, Eq };
    struct Constraint {
        std::vector<Term> terms;
        Rel rel = Rel::LessEq;
        double rhs = 0.0;
        std::string name;
    };

    std::string name;
    std::vector<Block> blocks;        // PSD matrix variables
    std::vector<Scalar> scalars;
    std::vector<Constraint> constraints;
    std::vector<Term> objective;      // maximize
    double objective_constant = 0.0;

    int add_block(const std::string& nm, int dim);
    int add_scalar(const std::string& nm, bool nonneg);

    // Rewrites matrix entries as solver variables, eliminates scalar
    // equalities by substitution, and turns inequalities into diagonal
    // slack slots.
    LoweredSdp lower() const;
};

// SDPA sparse format (".dat-s"). The file follows the usual minimization
// convention, so the objective and constant block are negated on the way out
// and back in; re-parsing our own output reconstructs an equivalent problem.
std::string export_sdpa(const LoweredSdp& p);
inline std::string export_sdpa(const SdpProblem& p) { return export_sdpa(p.lower()); }
LoweredSdp parse_sdpa(const std::string& text);

}  // namespace bwc

#pragma once

#include "bwc/sdp.hpp"

#include <string>

namespace bwc {

struct SolveOptions {
    double tol = 1e-8;
    int max_iterations = 200;
    bool verbose = false;           // iteration log to stderr
};

struct SolveReport {
    bool converged = false;
    std::string message;
    int iterations = 0;
    double primal_value = 0.0;      // c^T x + constant
    double dual_value = 0.0;        // <F0, Y> + constant
    double duality_gap = 0.0;       // <X, Y>
    double max_violation = 0.0;     // worst dual equality residual
    double min_block_eig = 0.0;     // most negative eigenvalue of the dual slack blocks
    double dual_correction = 0.0;   // shift applied to certify the dual matrix
    double residual_correction = 0.0;
    bool certified = false;
    double certified_upper_bound = 0.0;
    std::vector<double> x;          // primal solution
};

// Dense primal-dual path-following on the lowered form. The certified upper
// bound shifts the dual slack blocks PSD, re-evaluates the dual residuals,
// and charges them against the variable-sum bound when the problem carries
// one.
SolveReport solve(const LoweredSdp& p, const SolveOptions& opts = {});
inline SolveReport solve(const SdpProblem& p, const SolveOptions& opts = {}) {
    return solve(p.lower(), opts);
}

// floor(certified bound + 1e-6); requires a certified solve
long long integer_bound(const SolveReport& report);

}  // namespace bwc

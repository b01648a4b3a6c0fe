#pragma once

#include "bwc/rational.hpp"
#include "bwc/sdp.hpp"
#include "bwc/sdp_solver.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace bwc {

// Constraint triples for the polynomial bound on L(n,d,w):
// 0 <= u,v <= w, d <= t <= n, t <= u+v, u+v-t even.
struct OmegaSet {
    int n = 0, d = 0, w = 0;
    std::vector<std::array<int, 3>> triples;
};

OmegaSet omega(int n, int d, int w);

// Degree-bounded polynomial SDP: maximize f0 over kernels
// P = f0 + sum_k <G_k, E_k> with G_k PSD, P <= 0 on omega(n,d,w) and
// P(u,u,0) <= 1 for u = 0..w; the bound on L(n,d,w) is 1/f0.
SdpProblem build_poly_sdp(int n, int d, int w, int degree = 2);

// Exact-rational recertification of a poly-SDP solution: clips the G_k to
// certified PSD matrices, re-evaluates every constraint exactly, and lowers
// f0 by the worst violation. Returns the certified f0 (> 0) if any.
std::optional<Rational> certify_poly_solution(int n, int d, int w, int degree,
                                              const LoweredSdp& lowered, const std::vector<double>& x);

// Symmetry-reduced theta' of the distance-{1..d-1} graph on the radius-w
// ball: variables per pair orbit, normalization over the diagonal orbits,
// entrywise nonnegativity, and one PSD block per isotypic component.
SdpProblem build_theta_prime_sdp(int n, int d, int w);

struct SdpBoundResult {
    SolveReport report;
    long long bound = 0;               // floor(certified + 1e-6)
    std::optional<Rational> exact_f0;  // poly route only
    std::string method;
};

// Convenience pipelines used by the CLI and tables.
SdpBoundResult theta_prime_bound(int n, int d, int w, const SolveOptions& opts = {});
SdpBoundResult poly_bound(int n, int d, int w, int degree = 2, const SolveOptions& opts = {});

}  // namespace bwc

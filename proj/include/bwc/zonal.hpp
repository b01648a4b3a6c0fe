#pragma once

#include "bwc/polyuvt.hpp"
#include "bwc/rational.hpp"

#include <optional>

namespace bwc {

// Zonal kernels Z_k(u,v,t) of the degree-k isotypic component, normalized to
// |leading t coefficient| = 1 with Z_k(u,u,0) >= 0.

// Closed forms for k <= 2.
PolyUVT zonal_closed_form(int k, int n);

// Algorithmic construction for general k: builds the (k+1)-dimensional space
// of symmetric kernels of bidegree (k,k), applies the lowering operator
// symbolically, and normalizes the one-dimensional kernel. k <= max_k
// (default 5; the symbolic tables grow quickly).
PolyUVT zonal_general(int k, int n, int max_k = 5);

// degree-1 bound: L(n,d,w) <= d / (d - 2w(1-w/n)) when w <= n/2 and the
// denominator is positive. Exact rational; absent when it does not apply.
std::optional<Rational> elias_degree1(int n, int d, int w);

// maximizer of the degree-2 quadratic: d(n+1-2w) / ((n-1)d + 2(n-w)^2).
Rational lambda_opt(int n, int d, int w);

// f0(lambda) with (n(n-1)/2) f0 = -((n-1)d + 2(n-w)^2) l^2 + d(2n+2-4w) l + d(2d-(n-1)).
Rational f0_quadratic(int n, int d, int w, const Rational& lambda);

// degree-2 bound on L(n,d,w) for w <= (n+1)/2 when
// d > ((n-w)/(n-1)) (sqrt(2(n-w)(n-1)) - (n+1-w)); the square root is decided
// by exact integer squaring. Absent when the preconditions fail.
std::optional<Rational> degree2_bound(int n, int d, int w);

}  // namespace bwc

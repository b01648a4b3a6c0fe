#pragma once

#include "bwc/bigint.hpp"

namespace bwc {

// C(n,k), exact. Cached internally; safe for concurrent use after warmup.
BigInt binomial(int n, int k);

// C(n,k) as int64; throws on overflow (fine for n <= 61 or small k).
long long binomial_i64(int n, int k);

// Krawtchouk polynomial K_k(t) over F_2^n:  sum_j (-1)^j C(t,j) C(n-t, k-j).
BigInt krawtchouk(int n, int k, int t);

// Binary entropy h(p) = -p log2 p - (1-p) log2 (1-p), h(0)=h(1)=0.
double entropy(double p);

// Inverse of h on [0, 1/2]; bisection to 1e-12.
double entropy_inv(double y);

}  // namespace bwc

#include "bwc/combinat.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace bwc {

namespace {
std::mutex g_binom_mutex;
std::vector<std::vector<BigInt>> g_binom;   // g_binom[n][k], filled row by row
}

BigInt binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return BigInt(0);
    std::lock_guard<std::mutex> lock(g_binom_mutex);
    while (static_cast<int>(g_binom.size()) <= n) {
        int m = static_cast<int>(g_binom.size());
        std::vector<BigInt> row(m + 1);
        row[0] = BigInt(1);
        row[m] = BigInt(1);
        for (int j = 1; j < m; ++j) row[j] = g_binom[m - 1][j - 1] + g_binom[m - 1][j];
        g_binom.push_back(std::move(row));
    }
    return g_binom[n][k];
}

long long binomial_i64(int n, int k) {
    return binomial(n, k).to_int64();
}

BigInt krawtchouk(int n, int k, int t) {
    BigInt s(0);
    for (int j = 0; j <= k; ++j) {
        BigInt term = binomial(t, j) * binomial(n - t, k - j);
        if (j & 1) s -= term; else s += term;
    }
    return s;
}

double entropy(double p) {
    if (p < 0.0 || p > 1.0) throw std::domain_error("entropy: p outside [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double entropy_inv(double y) {
    if (y < 0.0 || y > 1.0) throw std::domain_error("entropy_inv: y outside [0,1]");
    double lo = 0.0, hi = 0.5;
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        if (entropy(mid) < y) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace bwc

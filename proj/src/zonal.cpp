#include "bwc/zonal.hpp"

#include "bwc/bigint.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace bwc {

PolyUVT zonal_closed_form(int k, int n) {
    if (k < 0 || k > 2) throw std::invalid_argument("zonal_closed_form: k must be 0, 1 or 2");
    if (k == 2 && n < 3) throw std::invalid_argument("zonal_closed_form: k=2 needs n >= 3");
    PolyUVT z;
    if (k == 0) {
        z.add_term(0, 0, 0, 1);
        return z;
    }
    if (k == 1) {
        z.add_term(0, 0, 1, -1);
        z.add_term(1, 0, 0, 1);
        z.add_term(0, 1, 0, 1);
        z.add_term(1, 1, 0, Rational(-2, n));
        return z;
    }
    // k = 2
    z.add_term(0, 0, 2, 1);
    Rational a(2, n - 2);
    z.add_term(0, 0, 1, a * Rational(n));
    z.add_term(1, 0, 1, a * Rational(-n));
    z.add_term(0, 1, 1, a * Rational(-n));
    z.add_term(1, 1, 1, a * Rational(2));
    Rational b(1, static_cast<long long>(n - 1) * (n - 2));
    z.add_term(2, 2, 0, b * Rational(4));
    z.add_term(2, 1, 0, b * Rational(-4 * n));
    z.add_term(1, 2, 0, b * Rational(-4 * n));
    z.add_term(2, 0, 0, b * Rational(static_cast<long long>(n + 2) * (n - 1)));
    z.add_term(0, 2, 0, b * Rational(static_cast<long long>(n + 2) * (n - 1)));
    z.add_term(1, 1, 0, b * Rational(2LL * n * (n + 1)));
    z.add_term(1, 0, 0, b * Rational(-2LL * n * (n - 1)));
    z.add_term(0, 1, 0, b * Rational(-2LL * n * (n - 1)));
    return z;
}

namespace {

// Neighbor-sum operator in the first argument: for an invariant kernel
// F(u,v,t), (K_x F)(x,y) = sum over words x' adjacent to x of F(x',y).
// Flipping a coordinate moves (u,t) by (+-1,+-1) with multiplicities
// determined by the overlap a = (u+v-t)/2.
PolyUVT apply_Kx(const PolyUVT& f, int n) {
    PolyUVT u = PolyUVT::var_u(), v = PolyUVT::var_v(), t = PolyUVT::var_t();
    PolyUVT a = (u + v - t) * Rational(1, 2);
    PolyUVT r = a * f.shifted(-1, 0, 1);
    r += (u - a) * f.shifted(-1, 0, -1);
    r += (v - a) * f.shifted(1, 0, -1);
    r += (PolyUVT(Rational(n)) - u - v + a) * f.shifted(1, 0, 1);
    return r;
}

PolyUVT apply_Ky(const PolyUVT& f, int n) {
    PolyUVT u = PolyUVT::var_u(), v = PolyUVT::var_v(), t = PolyUVT::var_t();
    PolyUVT a = (u + v - t) * Rational(1, 2);
    PolyUVT r = a * f.shifted(0, -1, 1);
    r += (v - a) * f.shifted(0, -1, -1);
    r += (u - a) * f.shifted(0, 1, -1);
    r += (PolyUVT(Rational(n)) - u - v + a) * f.shifted(0, 1, 1);
    return r;
}

// Extract the pure degree-k component in x of a kernel whose x-components
// live in degrees 0..k, using the spectral projector of K_x (eigenvalue
// n-2l on degree-l components).
PolyUVT extract_pure_x(PolyUVT f, int k, int n) {
    for (int l = 0; l < k; ++l) {
        PolyUVT g = apply_Kx(f, n) - f * Rational(n - 2 * l);
        f = g * Rational(1, 2LL * (l - k));
    }
    return f;
}

PolyUVT extract_pure_y(PolyUVT f, int k, int n) {
    for (int l = 0; l < k; ++l) {
        PolyUVT g = apply_Ky(f, n) - f * Rational(n - 2 * l);
        f = g * Rational(1, 2LL * (l - k));
    }
    return f;
}

// Lowering operator in x on a kernel that is pure of degree k in x:
// multiplication by n-2u splits into degrees k-1 and k+1; keep the k-1 part.
PolyUVT lower_x(const PolyUVT& f, int k, int n) {
    PolyUVT U = PolyUVT(Rational(n)) - PolyUVT::var_u() * Rational(2);
    PolyUVT prod = U * f;
    PolyUVT g = apply_Kx(prod, n) - prod * Rational(n - 2 * (k + 1));
    return g * Rational(1, 4);
}

PolyUVT lower_y(const PolyUVT& f, int k, int n) {
    PolyUVT V = PolyUVT(Rational(n)) - PolyUVT::var_v() * Rational(2);
    PolyUVT prod = V * f;
    PolyUVT g = apply_Ky(prod, n) - prod * Rational(n - 2 * (k + 1));
    return g * Rational(1, 4);
}

std::vector<std::array<int, 3>> valid_triples(int n, int cap) {
    std::vector<std::array<int, 3>> out;
    int lim = std::min(n, cap);
    for (int u = 0; u <= lim; ++u)
        for (int v = 0; v <= lim; ++v)
            for (int t = std::abs(u - v); t <= std::min({u + v, 2 * n - u - v, n}); t += 2)
                out.push_back({u, v, t});
    return out;
}

}  // namespace

PolyUVT zonal_general(int k, int n, int max_k) {
    if (k < 0 || 2 * k > n) throw std::invalid_argument("zonal_general: need 0 <= k <= n/2");
    if (k > max_k) throw std::invalid_argument("zonal_general: k exceeds the configured cap");
    if (k == 0) return zonal_closed_form(0, n);

    // candidate space: purified U^a V^a T^(k-a), a = 0..k
    PolyUVT U = PolyUVT(Rational(n)) - PolyUVT::var_u() * Rational(2);
    PolyUVT V = PolyUVT(Rational(n)) - PolyUVT::var_v() * Rational(2);
    PolyUVT T = PolyUVT(Rational(n)) - PolyUVT::var_t() * Rational(2);
    std::vector<PolyUVT> basis;
    for (int a = 0; a <= k; ++a) {
        PolyUVT m(Rational(1));
        for (int i = 0; i < a; ++i) m = m * U;
        for (int i = 0; i < a; ++i) m = m * V;
        for (int i = 0; i < k - a; ++i) m = m * T;
        basis.push_back(extract_pure_y(extract_pure_x(m, k, n), k, n));
    }
    // images under the lowering operator
    std::vector<PolyUVT> lowered;
    for (const PolyUVT& b : basis) lowered.push_back(lower_x(b, k, n) + lower_y(b, k, n));

    // kernel of the evaluation matrix on valid triples; grow the evaluation
    // window until the kernel is one-dimensional
    for (int cap = 2 * k + 2;; cap += 4) {
        std::vector<std::array<int, 3>> pts = valid_triples(n, cap);
        // rows: points, cols: k+1 coefficients
        std::vector<std::vector<Rational>> m;
        for (const auto& p : pts) {
            std::vector<Rational> row(k + 1);
            bool nonzero = false;
            for (int a = 0; a <= k; ++a) {
                row[a] = lowered[a].eval(p[0], p[1], p[2]);
                nonzero = nonzero || !row[a].is_zero();
            }
            if (nonzero) m.push_back(std::move(row));
        }
        // Gaussian elimination
        size_t rank = 0;
        std::vector<int> pivot_col;
        for (int col = 0; col <= k && rank < m.size(); ++col) {
            size_t p = rank;
            while (p < m.size() && m[p][col].is_zero()) ++p;
            if (p == m.size()) continue;
            std::swap(m[rank], m[p]);
            for (size_t r = 0; r < m.size(); ++r) {
                if (r == rank || m[r][col].is_zero()) continue;
                Rational f = m[r][col] / m[rank][col];
                for (int cc = 0; cc <= k; ++cc) m[r][cc] -= f * m[rank][cc];
            }
            pivot_col.push_back(col);
            ++rank;
        }
        int nullity = k + 1 - static_cast<int>(rank);
        if (nullity > 1 && cap < n) continue;   // window too small, grow it
        if (nullity != 1)
            throw std::runtime_error("zonal_general: kernel dimension " + std::to_string(nullity) +
                                     " (expected 1) at k=" + std::to_string(k) + ", n=" + std::to_string(n));
        // back-substitute with the single free column set to 1
        std::vector<Rational> coef(k + 1);
        std::vector<bool> is_pivot(k + 1, false);
        for (int c : pivot_col) is_pivot[c] = true;
        int free_col = -1;
        for (int c = 0; c <= k; ++c)
            if (!is_pivot[c]) free_col = c;
        coef[free_col] = Rational(1);
        for (size_t r = 0; r < rank; ++r) {
            int pc = pivot_col[r];
            coef[pc] = -(m[r][free_col] / m[r][pc]);
        }
        PolyUVT z;
        for (int a = 0; a <= k; ++a) z += basis[a] * coef[a];

        // normalize: |t^k coefficient| = 1, then sign so Z(u,u,0) >= 0
        Rational lead = z.coeff(0, 0, k);
        if (lead.is_zero())
            throw std::runtime_error("zonal_general: vanishing leading t coefficient");
        z = z * (Rational(1) / lead.abs());
        bool nonneg = true;
        for (int u = 0; u <= n; ++u)
            if (z.eval(u, u, 0).sign() < 0) { nonneg = false; break; }
        if (!nonneg) z = z * Rational(-1);
        return z;
    }
}

std::optional<Rational> elias_degree1(int n, int d, int w) {
    if (2 * w > n) return std::nullopt;
    long long den = static_cast<long long>(d) * n - 2LL * w * (n - w);
    if (den <= 0) return std::nullopt;
    return Rational(static_cast<long long>(d) * n, den);
}

Rational lambda_opt(int n, int d, int w) {
    return Rational(static_cast<long long>(d) * (n + 1 - 2 * w),
                    static_cast<long long>(n - 1) * d + 2LL * (n - w) * (n - w));
}

Rational f0_quadratic(int n, int d, int w, const Rational& lambda) {
    if (n < 2) throw std::invalid_argument("f0_quadratic: n >= 2 required");
    Rational a(-(static_cast<long long>(n - 1) * d + 2LL * (n - w) * (n - w)));
    Rational b(static_cast<long long>(d) * (2 * n + 2 - 4 * w));
    Rational c(static_cast<long long>(d) * (2 * d - (n - 1)));
    Rational q = a * lambda * lambda + b * lambda + c;
    return q * Rational(2, static_cast<long long>(n) * (n - 1));
}

std::optional<Rational> degree2_bound(int n, int d, int w) {
    if (n < 3) return std::nullopt;
    if (2 * w > n + 1) return std::nullopt;
    long long s = n - w;
    // d (n-1)/s + (n+1-w) > sqrt(2 s (n-1)), decided by squaring
    BigInt lhs = BigInt(d) * BigInt(n - 1) + BigInt(s) * BigInt(n + 1 - w);
    BigInt rhs = BigInt(2) * BigInt(s) * BigInt(s) * BigInt(s) * BigInt(n - 1);
    if (!(lhs * lhs > rhs)) return std::nullopt;
    // 2d((n-1)d + 2s^2) / ((n-1)d^2 + 2s(n+1-2w)d - (n-1)s^2)
    BigInt num = BigInt(2) * BigInt(d) * (BigInt(n - 1) * BigInt(d) + BigInt(2) * BigInt(s) * BigInt(s));
    BigInt den = BigInt(n - 1) * BigInt(d) * BigInt(d) +
                 BigInt(2) * BigInt(s) * BigInt(n + 1 - 2 * w) * BigInt(d) -
                 BigInt(n - 1) * BigInt(s) * BigInt(s);
    if (den.sign() <= 0) return std::nullopt;
    return Rational(num, den);
}

}  // namespace bwc

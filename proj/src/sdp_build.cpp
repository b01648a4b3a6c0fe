#include "bwc/sdp_build.hpp"

#include "bwc/combinat.hpp"
#include "bwc/linalg.hpp"
#include "bwc/terwilliger.hpp"
#include "bwc/zonal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace bwc {

OmegaSet omega(int n, int d, int w) {
    if (n < 1 || d < 1 || d > n || w < 0 || w > n) throw std::invalid_argument("omega: bad parameters");
    OmegaSet o{n, d, w, {}};
    for (int u = 0; u <= w; ++u)
        for (int v = 0; v <= w; ++v)
            for (int t = d; t <= n; ++t) {
                if (t > u + v) continue;
                if ((u + v - t) % 2 != 0) continue;
                o.triples.push_back({u, v, t});
            }
    return o;
}

namespace {

PolyUVT zonal_for(int k, int n) {
    if (k <= 2) return zonal_closed_form(k, n);
    return zonal_general(k, n);
}

}  // namespace

SdpProblem build_poly_sdp(int n, int d, int w, int degree) {
    if (degree < 1 || degree > 5)
        throw std::invalid_argument("build_poly_sdp: degree must be between 1 and 5");
    if (n < 3) throw std::invalid_argument("build_poly_sdp: n >= 3 required");
    SdpProblem prob;
    prob.name = "poly" + std::to_string(degree) + "(" + std::to_string(n) + "," + std::to_string(d) + "," +
                std::to_string(w) + ")";

    std::vector<PolyUVT> zk;
    std::vector<int> gdim;
    for (int k = 0; k <= degree; ++k) {
        zk.push_back(zonal_for(k, n));
        gdim.push_back(degree - k + 1);
    }
    std::vector<int> gblock(degree + 1);
    for (int k = 0; k <= degree; ++k)
        gblock[k] = prob.add_block("G" + std::to_string(k), gdim[k]);
    int f0 = prob.add_scalar("f0", false);
    prob.objective.push_back({f0, -1, 0, 0, 1.0});

    // P(u,v,t) = f0 + sum_k sum_{i<=j} G_k[i,j] (u^i v^j + u^j v^i) Z_k(u,v,t)
    auto p_terms = [&](int u, int v, int t) {
        std::vector<SdpProblem::Term> terms;
        terms.push_back({f0, -1, 0, 0, 1.0});
        for (int k = 0; k <= degree; ++k) {
            Rational z = zk[k].eval(u, v, t);
            if (z.is_zero()) continue;
            for (int i = 0; i < gdim[k]; ++i)
                for (int j = i; j < gdim[k]; ++j) {
                    Rational monom;
                    auto upow = [](long long base, int e) {
                        Rational r(1);
                        for (int q = 0; q < e; ++q) r *= Rational(base);
                        return r;
                    };
                    if (i == j) monom = upow(u, i) * upow(v, i);
                    else monom = upow(u, i) * upow(v, j) + upow(u, j) * upow(v, i);
                    Rational coef = monom * z;
                    if (coef.is_zero()) continue;
                    terms.push_back({-1, gblock[k], i, j, coef.to_double()});
                }
        }
        return terms;
    };

    // P <= 0 on the constraint triples (symmetric in u,v: keep u <= v)
    for (const auto& [u, v, t] : omega(n, d, w).triples) {
        if (u > v) continue;
        SdpProblem::Constraint con;
        con.terms = p_terms(u, v, t);
        con.rel = SdpProblem::Rel::LessEq;
        con.rhs = 0.0;
        con.name = "P(" + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(t) + ")<=0";
        prob.constraints.push_back(std::move(con));
    }
    // P(u,u,0) <= 1 on the diagonal
    for (int u = 0; u <= w; ++u) {
        SdpProblem::Constraint con;
        con.terms = p_terms(u, u, 0);
        con.rel = SdpProblem::Rel::LessEq;
        con.rhs = 1.0;
        con.name = "P(" + std::to_string(u) + "," + std::to_string(u) + ",0)<=1";
        prob.constraints.push_back(std::move(con));
    }
    return prob;
}

namespace {

// exact LDL^T positive-semidefiniteness check for a small rational matrix
bool rational_psd(std::vector<std::vector<Rational>> a) {
    size_t n = a.size();
    for (size_t k = 0; k < n; ++k) {
        if (a[k][k].sign() < 0) return false;
        if (a[k][k].is_zero()) {
            // the whole row/column must vanish
            for (size_t j = k; j < n; ++j)
                if (!a[k][j].is_zero()) return false;
            continue;
        }
        for (size_t i = k + 1; i < n; ++i) {
            Rational f = a[i][k] / a[k][k];
            for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
        for (size_t i = k + 1; i < n; ++i) a[k][i] = a[i][k] = Rational(0);
    }
    return true;
}

}  // namespace

std::optional<Rational> certify_poly_solution(int n, int d, int w, int degree,
                                              const LoweredSdp& lowered, const std::vector<double>& x) {
    // pull G_k entries and f0 out of the solver variables by name
    std::map<std::string, double> byname;
    for (int i = 0; i < lowered.m; ++i) byname[lowered.var_names[i]] = x[i];
    Rational f0 = Rational::from_double(byname.at("f0"));

    std::vector<std::vector<std::vector<Rational>>> g(degree + 1);
    for (int k = 0; k <= degree; ++k) {
        int dim = degree - k + 1;
        g[k].assign(dim, std::vector<Rational>(dim, Rational(0)));
        Mat gd(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = i; j < dim; ++j) {
                std::string nm = "G" + std::to_string(k) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
                double v = byname.at(nm);
                gd(i, j) = v;
                gd(j, i) = v;
            }
        // clip to exactly-PSD: add delta I until the rational LDL^T passes
        std::vector<double> ev = sym_eigenvalues(gd);
        double lam = ev.empty() ? 0.0 : ev.front();
        double scale = std::max(1.0, std::abs(ev.empty() ? 0.0 : ev.back()));
        double delta = std::max(0.0, -lam) * 1.05 + 1e-12 * scale;
        for (int tries = 0;; ++tries) {
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    g[k][i][j] = Rational::from_double(gd(i, j)) +
                                 (i == j ? Rational::from_double(delta) : Rational(0));
            if (rational_psd(g[k])) break;
            if (tries > 60) return std::nullopt;
            delta = delta * 4 + 1e-12 * scale;
        }
    }

    // exact P evaluation
    std::vector<PolyUVT> zk;
    for (int k = 0; k <= degree; ++k) zk.push_back(zonal_for(k, n));
    auto eval_P = [&](int u, int v, int t) {
        Rational s = f0;
        for (int k = 0; k <= degree; ++k) {
            Rational z = zk[k].eval(u, v, t);
            if (z.is_zero()) continue;
            int dim = degree - k + 1;
            auto upow = [](long long base, int e) {
                Rational r(1);
                for (int q = 0; q < e; ++q) r *= Rational(base);
                return r;
            };
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) s += g[k][i][j] * upow(u, i) * upow(v, j) * z;
        }
        return s;
    };

    Rational violation(0);
    for (const auto& [u, v, t] : omega(n, d, w).triples) {
        if (u > v) continue;
        Rational pv = eval_P(u, v, t);
        if (pv > violation) violation = pv;
    }
    for (int u = 0; u <= w; ++u) {
        Rational pv = eval_P(u, u, 0) - Rational(1);
        if (pv > violation) violation = pv;
    }
    Rational certified = f0 - violation;
    if (certified.sign() <= 0) return std::nullopt;
    return certified;
}

SdpProblem build_theta_prime_sdp(int n, int d, int w) {
    if (n < 1 || n > 32) throw std::invalid_argument("build_theta_prime_sdp: n must be <= 32");
    if (d < 1 || d > n || w < 0 || w > n) throw std::invalid_argument("build_theta_prime_sdp: bad parameters");
    const ZonalKernelTable& zt = ZonalKernelTable::for_length(n);

    SdpProblem prob;
    prob.name = "theta'(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(w) + ")";

    // variables: orbit sums over unordered pair orbits inside the ball;
    // allowed distances are 0 (diagonal) and d..n
    struct Var {
        int u, v, t;
        int scalar;
    };
    std::vector<Var> vars;
    std::map<std::array<int, 3>, int> var_of;
    for (int u = 0; u <= w; ++u)
        for (int v = u; v <= w; ++v)
            for (int t = (u == v ? 0 : d); t <= std::min({u + v, 2 * n - u - v, n}); ++t) {
                if (t != 0 && t < d) continue;
                if (!triple_valid(n, u, v, t)) continue;
                int s = prob.add_scalar("x(" + std::to_string(u) + "," + std::to_string(v) + "," +
                                            std::to_string(t) + ")",
                                        true);
                var_of[{u, v, t}] = s;
                vars.push_back({u, v, t, s});
            }

    // objective: total matrix sum; off-diagonal orbits count twice
    for (const Var& vr : vars)
        prob.objective.push_back({vr.scalar, -1, 0, 0, vr.u == vr.v ? (vr.t == 0 ? 1.0 : 1.0) : 2.0});
    // careful: unordered (u,u,t>0) still represents a single ordered orbit
    // (u,v) = (v,u), so the coefficient is 1 there and 2 only for u < v.

    // normalization: the diagonal orbit sums add to 1
    {
        SdpProblem::Constraint con;
        for (const Var& vr : vars)
            if (vr.t == 0) con.terms.push_back({vr.scalar, -1, 0, 0, 1.0});
        con.rel = SdpProblem::Rel::Eq;
        con.rhs = 1.0;
        con.name = "trace";
        prob.constraints.push_back(std::move(con));
    }

    // one PSD block per isotypic component, rows indexed by weights
    // k..min(w, n-k); entries are defined by equalities from the scalars
    for (int k = 0; k <= std::min(w, n / 2); ++k) {
        int hi = std::min(w, n - k);
        int dim = hi - k + 1;
        if (dim < 1) continue;
        // per-block scale keeps the coefficients near unit size
        Rational max_abs(0);
        for (int a = k; a <= hi; ++a)
            for (int b = a; b <= hi; ++b)
                for (int t = (a == b ? 0 : d); t <= std::min({a + b, 2 * n - a - b, n}); ++t) {
                    if (t != 0 && t < d) continue;
                    if (!triple_valid(n, a, b, t)) continue;
                    Rational z = zt.value(k, a, b, t).abs();
                    if (z > max_abs) max_abs = z;
                }
        if (max_abs.is_zero()) max_abs = Rational(1);
        int blk = prob.add_block("S" + std::to_string(k), dim);
        for (int a = k; a <= hi; ++a)
            for (int b = a; b <= hi; ++b) {
                SdpProblem::Constraint con;
                con.terms.push_back({-1, blk, a - k, b - k, -1.0});
                for (int t = (a == b ? 0 : d); t <= std::min({a + b, 2 * n - a - b, n}); ++t) {
                    if (t != 0 && t < d) continue;
                    if (!triple_valid(n, a, b, t)) continue;
                    auto it = var_of.find({a, b, t});
                    if (it == var_of.end()) continue;
                    Rational coef = zt.value(k, a, b, t) / max_abs;
                    if (coef.is_zero()) continue;
                    con.terms.push_back({it->second, -1, 0, 0, coef.to_double()});
                }
                con.rel = SdpProblem::Rel::Eq;
                con.rhs = 0.0;
                con.name = "S" + std::to_string(k) + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
                prob.constraints.push_back(std::move(con));
            }
    }
    return prob;
}

namespace {

double ball_size(int n, int w) {
    BigInt s(0);
    for (int i = 0; i <= w; ++i) s += binomial(n, i);
    return s.to_double();
}

// strictly feasible start and certification metadata for the lowered form
void attach_theta_metadata(LoweredSdp& low, int n, int d, int w) {
    double vw = ball_size(n, w);
    low.var_sum_bound = vw;
    low.objective_dominates_l1 = true;
    std::map<std::string, int> index;
    for (int i = 0; i < low.m; ++i) index[low.var_names[i]] = i;
    low.x0.assign(low.m, 0.0);

    // diagonal orbit sums proportional to the weight-class sizes, shrunk so
    // the eliminated (0,0,0) slot stays strictly positive
    double kappa = 0.25 / vw;
    for (int u = 1; u <= w; ++u) {
        auto it = index.find("x(" + std::to_string(u) + "," + std::to_string(u) + ",0)");
        if (it != index.end()) low.x0[it->second] = (1.0 - kappa) * binomial(n, u).to_double() / vw;
    }
    auto xdiag = [&](int a) {
        if (a == 0) return kappa * (1.0 - 1.0 / vw) + 1.0 / vw;
        return (1.0 - kappa) * binomial(n, a).to_double() / vw;
    };

    // Gershgorin budget: the off-diagonal start must keep every block
    // diagonally dominant
    double min_diag_block = 1e300, max_row = 1.0;
    const ZonalKernelTable& zt = ZonalKernelTable::for_length(n);
    for (int k = 0; k <= std::min(w, n / 2); ++k) {
        int hi = std::min(w, n - k);
        Rational max_abs(0);
        for (int a = k; a <= hi; ++a)
            for (int b = a; b <= hi; ++b)
                for (int t = (a == b ? 0 : d); t <= std::min({a + b, 2 * n - a - b, n}); ++t)
                    if ((t == 0 || t >= d) && triple_valid(n, a, b, t) && zt.value(k, a, b, t).abs() > max_abs)
                        max_abs = zt.value(k, a, b, t).abs();
        if (max_abs.is_zero()) continue;
        for (int a = k; a <= hi; ++a) {
            double z00 = (zt.value(k, a, a, 0) / max_abs).to_double();
            min_diag_block = std::min(min_diag_block, z00 * xdiag(a));
            double row = 0;
            for (int b = k; b <= hi; ++b)
                for (int t = d; t <= std::min({a + b, 2 * n - a - b, n}); ++t)
                    if (triple_valid(n, a, b, t))
                        row += std::abs((zt.value(k, a, b, t) / max_abs).to_double());
            max_row = std::max(max_row, row);
        }
    }
    double eps = std::min(0.125 * min_diag_block / max_row, kappa / (4.0 * vw));
    eps = std::max(eps, 1e-300);
    for (int i = 0; i < low.m; ++i)
        if (low.x0[i] == 0.0 && low.var_names[i].rfind("x(", 0) == 0) low.x0[i] = eps;
}

}  // namespace

SdpBoundResult theta_prime_bound(int n, int d, int w, const SolveOptions& opts) {
    SdpProblem prob = build_theta_prime_sdp(n, d, w);
    LoweredSdp low = prob.lower();
    low.name = prob.name;
    attach_theta_metadata(low, n, d, w);
    SdpBoundResult res;
    res.method = "theta-prime";
    res.report = solve(low, opts);
    if (!res.report.certified)
        throw std::runtime_error("theta_prime_bound: solver produced no certified bound for " + prob.name +
                                 " (" + res.report.message + ")");
    res.bound = integer_bound(res.report);
    return res;
}

SdpBoundResult poly_bound(int n, int d, int w, int degree, const SolveOptions& opts) {
    SdpProblem prob = build_poly_sdp(n, d, w, degree);
    LoweredSdp low = prob.lower();
    low.name = prob.name;
    // strictly feasible start: G_k = I, f0 below every constraint slack
    {
        std::map<std::string, int> index;
        for (int i = 0; i < low.m; ++i) index[low.var_names[i]] = i;
        low.x0.assign(low.m, 0.0);
        std::vector<PolyUVT> zk;
        for (int k = 0; k <= degree; ++k) zk.push_back(zonal_for(k, n));
        auto base = [&](int u, int v, int t) {
            double s = 0;
            for (int k = 0; k <= degree; ++k) {
                double z = zk[k].eval(u, v, t).to_double();
                for (int i = 0; i <= degree - k; ++i)
                    s += std::pow(static_cast<double>(u), i) * std::pow(static_cast<double>(v), i) * z;
            }
            return s;
        };
        double f0_start = 0.0;
        for (const auto& [u, v, t] : omega(n, d, w).triples)
            f0_start = std::min(f0_start, -base(u, v, t) - 1.0);
        for (int u = 0; u <= w; ++u) f0_start = std::min(f0_start, 1.0 - base(u, u, 0) - 1.0);
        for (int k = 0; k <= degree; ++k)
            for (int i = 0; i <= degree - k; ++i)
                low.x0[index.at("G" + std::to_string(k) + "[" + std::to_string(i) + "," + std::to_string(i) +
                                "]")] = 1.0;
        low.x0[index.at("f0")] = f0_start;
    }
    SdpBoundResult res;
    res.method = "poly" + std::to_string(degree);
    res.report = solve(low, opts);
    res.exact_f0 = certify_poly_solution(n, d, w, degree, low, res.report.x);
    if (res.exact_f0) {
        Rational bound = Rational(1) / *res.exact_f0;
        res.report.certified = true;
        res.report.certified_upper_bound = bound.to_double() * (1.0 + 1e-15) + 1e-300;
        res.bound = BigInt::div_floor(bound.num(), bound.den()).to_int64();
        // match the documented rounding guard
        res.report.certified_upper_bound = std::max(res.report.certified_upper_bound,
                                                    static_cast<double>(res.bound));
    } else {
        res.report.certified = false;
        res.bound = -1;
    }
    return res;
}

}  // namespace bwc

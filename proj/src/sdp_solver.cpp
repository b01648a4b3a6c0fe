#include "bwc/sdp_solver.hpp"

#include "bwc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace bwc {

namespace {

// block-diagonal symmetric matrix: dense blocks and diagonal blocks
struct BlockMat {
    const std::vector<int>* dims = nullptr;
    std::vector<Mat> dense;
    std::vector<std::vector<double>> diag;

    explicit BlockMat(const std::vector<int>& d) : dims(&d) {
        dense.resize(d.size());
        diag.resize(d.size());
        for (size_t b = 0; b < d.size(); ++b) {
            if (d[b] > 0) dense[b] = Mat(d[b], d[b]);
            else diag[b].assign(-d[b], 0.0);
        }
    }
    bool is_dense(size_t b) const { return (*dims)[b] > 0; }
    void set_identity(double s) {
        for (size_t b = 0; b < dims->size(); ++b) {
            if (is_dense(b)) {
                dense[b] = Mat::identity(dense[b].rows()) * s;
            } else {
                std::fill(diag[b].begin(), diag[b].end(), s);
            }
        }
    }
    void zero() {
        for (size_t b = 0; b < dims->size(); ++b) {
            if (is_dense(b)) dense[b] = Mat(dense[b].rows(), dense[b].cols());
            else std::fill(diag[b].begin(), diag[b].end(), 0.0);
        }
    }
    void add_entries(const std::vector<LoweredSdp::Entry>& es, double scale) {
        for (const auto& e : es) {
            if (is_dense(e.block)) {
                dense[e.block](e.row, e.col) += scale * e.value;
                if (e.row != e.col) dense[e.block](e.col, e.row) += scale * e.value;
            } else {
                diag[e.block][e.row] += scale * e.value;
            }
        }
    }
    void axpy(double a, const BlockMat& o) {
        for (size_t b = 0; b < dims->size(); ++b) {
            if (is_dense(b)) dense[b].axpy(a, o.dense[b]);
            else
                for (size_t i = 0; i < diag[b].size(); ++i) diag[b][i] += a * o.diag[b][i];
        }
    }
    double inner(const BlockMat& o) const {
        double s = 0;
        for (size_t b = 0; b < dims->size(); ++b) {
            if (is_dense(b)) {
                const Mat& a = dense[b];
                for (size_t i = 0; i < a.rows(); ++i)
                    for (size_t j = 0; j < a.cols(); ++j) s += a(i, j) * o.dense[b](i, j);
            } else {
                for (size_t i = 0; i < diag[b].size(); ++i) s += diag[b][i] * o.diag[b][i];
            }
        }
        return s;
    }
    // trace inner product against a sparse symmetric coefficient list
    double inner_entries(const std::vector<LoweredSdp::Entry>& es) const {
        double s = 0;
        for (const auto& e : es) {
            if (is_dense(e.block)) {
                s += e.value * (e.row == e.col ? dense[e.block](e.row, e.row)
                                               : dense[e.block](e.row, e.col) + dense[e.block](e.col, e.row));
            } else {
                s += e.value * diag[e.block][e.row];
            }
        }
        return s;
    }
    void symmetrize() {
        for (size_t b = 0; b < dims->size(); ++b)
            if (is_dense(b)) dense[b].symmetrize();
    }
};

struct Factorization {
    std::vector<Mat> chol;                 // dense blocks
    std::vector<std::vector<double>> dinv; // diagonal blocks
};

bool factorize(const BlockMat& a, Factorization& f) {
    f.chol.assign(a.dims->size(), Mat());
    f.dinv.assign(a.dims->size(), {});
    for (size_t b = 0; b < a.dims->size(); ++b) {
        if (a.is_dense(b)) {
            if (!cholesky(a.dense[b], f.chol[b])) return false;
        } else {
            f.dinv[b].resize(a.diag[b].size());
            for (size_t i = 0; i < a.diag[b].size(); ++i) {
                if (!(a.diag[b][i] > 0.0)) return false;
                f.dinv[b][i] = 1.0 / a.diag[b][i];
            }
        }
    }
    return true;
}

BlockMat inverse_of(const BlockMat& a, const Factorization& f) {
    BlockMat inv(*a.dims);
    for (size_t b = 0; b < a.dims->size(); ++b) {
        if (a.is_dense(b)) inv.dense[b] = chol_inverse(f.chol[b]);
        else inv.diag[b] = f.dinv[b];
    }
    return inv;
}

// largest step alpha so that a + alpha*da stays positive definite, via the
// smallest eigenvalue of L^{-1} da L^{-T}
double max_step(const BlockMat& a, const Factorization& f, const BlockMat& da, double tau) {
    double alpha = 1.0;
    for (size_t b = 0; b < a.dims->size(); ++b) {
        if (a.is_dense(b)) {
            const Mat& l = f.chol[b];
            size_t nb = l.rows();
            // B = L^{-1} da L^{-T}
            Mat w = da.dense[b];
            // forward solve on columns: W := L^{-1} W
            for (size_t col = 0; col < nb; ++col) {
                for (size_t i = 0; i < nb; ++i) {
                    double s = w(i, col);
                    for (size_t k = 0; k < i; ++k) s -= l(i, k) * w(k, col);
                    w(i, col) = s / l(i, i);
                }
            }
            // W := W L^{-T}  (i.e. solve on rows)
            for (size_t rw = 0; rw < nb; ++rw) {
                for (size_t i = 0; i < nb; ++i) {
                    double s = w(rw, i);
                    for (size_t k = 0; k < i; ++k) s -= l(i, k) * w(rw, k);
                    w(rw, i) = s / l(i, i);
                }
            }
            w.symmetrize();
            std::vector<double> ev = sym_eigenvalues(w);
            if (!ev.empty() && ev.front() < 0) alpha = std::min(alpha, -tau / ev.front());
        } else {
            for (size_t i = 0; i < a.diag[b].size(); ++i)
                if (da.diag[b][i] < 0) alpha = std::min(alpha, -tau * a.diag[b][i] / da.diag[b][i]);
        }
    }
    return alpha;
}

// product X^{-1} * M * Y for dense/diag blocks (inputs: inverse of X, M, Y)
void xinv_m_y(const BlockMat& xinv, const BlockMat& m, const BlockMat& y, BlockMat& out) {
    for (size_t b = 0; b < xinv.dims->size(); ++b) {
        if (xinv.is_dense(b)) {
            out.dense[b] = xinv.dense[b] * m.dense[b] * y.dense[b];
        } else {
            for (size_t i = 0; i < xinv.diag[b].size(); ++i)
                out.diag[b][i] = xinv.diag[b][i] * m.diag[b][i] * y.diag[b][i];
        }
    }
}

}  // namespace

SolveReport solve(const LoweredSdp& p, const SolveOptions& opts) {
    p.validate();
    SolveReport rep;
    const int m = p.m;
    if (m == 0) {
        // no variables: either feasible constant problem or not
        rep.converged = true;
        rep.certified = true;
        rep.primal_value = rep.dual_value = rep.certified_upper_bound = p.obj_constant;
        rep.message = "constant problem";
        return rep;
    }

    int total_dim = 0;
    for (int d : p.block_dims) total_dim += std::abs(d);

    // initial x: metadata start, else 0, else least-squares toward tau*I
    std::vector<double> x = p.x0;
    if (static_cast<int>(x.size()) != m) x.assign(m, 0.0);
    BlockMat X(p.block_dims);
    auto build_X = [&](const std::vector<double>& xv, BlockMat& out) {
        out.zero();
        out.add_entries(p.f0, 1.0);
        for (int i = 0; i < m; ++i)
            if (xv[i] != 0.0) out.add_entries(p.f[i], xv[i]);
    };
    build_X(x, X);
    Factorization xfac;
    if (!factorize(X, xfac)) {
        // least-squares start: min || F0 + sum x_i F_i - tau I ||_F
        Mat a(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) {
                BlockMat fi(p.block_dims), fj(p.block_dims);
                fi.add_entries(p.f[i], 1.0);
                fj.add_entries(p.f[j], 1.0);
                double v = fi.inner(fj);
                a(i, j) = v;
                a(j, i) = v;
            }
        for (int i = 0; i < m; ++i) a(i, i) += 1e-10;
        double f0_scale = 1.0;
        for (const auto& e : p.f0) f0_scale = std::max(f0_scale, std::abs(e.value));
        for (double tau = f0_scale; tau <= f0_scale * 1e6; tau *= 4) {
            BlockMat target(p.block_dims);
            target.set_identity(tau);
            target.add_entries(p.f0, -1.0);
            std::vector<double> b(m);
            for (int i = 0; i < m; ++i) b[i] = target.inner_entries(p.f[i]);
            Mat l;
            if (!cholesky(a, l)) break;
            x = chol_solve(l, b);
            build_X(x, X);
            if (factorize(X, xfac)) break;
        }
        if (!factorize(X, xfac)) {
            rep.message = "no strictly feasible start found";
            return rep;
        }
    }

    double cscale = 1.0;
    for (int i = 0; i < m; ++i) cscale = std::max(cscale, std::abs(p.c[i]));
    BlockMat Y(p.block_dims);
    Y.set_identity(std::max(10.0, cscale));
    Factorization yfac;
    factorize(Y, yfac);

    BlockMat Xinv(p.block_dims), W(p.block_dims), DX(p.block_dims), DY(p.block_dims), T(p.block_dims);
    Mat schur(m, m);
    std::vector<double> dx(m), dx_cor(m);

    auto dual_resid = [&]() {
        double worst = 0;
        for (int i = 0; i < m; ++i)
            worst = std::max(worst, std::abs(Y.inner_entries(p.f[i]) + p.c[i]));
        return worst;
    };

    int it = 0;
    for (; it < opts.max_iterations; ++it) {
        Xinv = inverse_of(X, xfac);
        double mu = X.inner(Y) / total_dim;
        double pobj = p.obj_constant;
        for (int i = 0; i < m; ++i) pobj += p.c[i] * x[i];
        double dobj = p.obj_constant + Y.inner_entries(p.f0);
        double gap = X.inner(Y);
        double resid = dual_resid();
        if (opts.verbose)
            std::fprintf(stderr, "  it %3d  primal %.9g  dual %.9g  gap %.3g  resid %.3g\n", it, pobj, dobj,
                         gap, resid);
        if (gap / (1.0 + std::abs(pobj) + std::abs(dobj)) < opts.tol && resid < opts.tol * (1.0 + cscale)) {
            rep.converged = true;
            break;
        }

        // Schur matrix M_ij = tr(X^{-1} F_i Y F_j)
        for (int j = 0; j < m; ++j) {
            W.zero();
            // W = X^{-1} F_j Y restricted to blocks F_j touches
            for (const auto& e : p.f[j]) {
                if (X.is_dense(e.block)) {
                    const Mat& xi = Xinv.dense[e.block];
                    const Mat& yy = Y.dense[e.block];
                    Mat& wb = W.dense[e.block];
                    size_t nb = xi.rows();
                    for (size_t r = 0; r < nb; ++r)
                        for (size_t cc = 0; cc < nb; ++cc) {
                            wb(r, cc) += e.value * xi(r, e.row) * yy(e.col, cc);
                            if (e.row != e.col) wb(r, cc) += e.value * xi(r, e.col) * yy(e.row, cc);
                        }
                } else {
                    W.diag[e.block][e.row] += e.value * Xinv.diag[e.block][e.row] * Y.diag[e.block][e.row];
                }
            }
            for (int i = 0; i <= j; ++i) {
                double v = W.inner_entries(p.f[i]);
                schur(i, j) = v;
                schur(j, i) = v;
            }
        }
        for (int i = 0; i < m; ++i) schur(i, i) += 1e-14 * (1.0 + schur(i, i));
        Mat sl;
        if (!cholesky(schur, sl)) {
            rep.message = "Schur complement factorization failed";
            break;
        }

        auto solve_direction = [&](double sigmu, const BlockMat* xinv_corr, std::vector<double>& dxv) {
            std::vector<double> rhs(m);
            for (int i = 0; i < m; ++i) {
                double v = p.c[i] + sigmu * Xinv.inner_entries(p.f[i]);
                if (xinv_corr) v -= xinv_corr->inner_entries(p.f[i]);
                rhs[i] = v;
            }
            dxv = chol_solve(sl, rhs);
        };
        auto build_dy = [&](double sigmu, const BlockMat* xinv_corr, const std::vector<double>& dxv) {
            // DY = sigmu X^{-1} - Y - X^{-1} DX Y - X^{-1} corr
            DX.zero();
            for (int i = 0; i < m; ++i)
                if (dxv[i] != 0.0) DX.add_entries(p.f[i], dxv[i]);
            xinv_m_y(Xinv, DX, Y, T);
            DY.zero();
            DY.axpy(sigmu, Xinv);
            DY.axpy(-1.0, Y);
            DY.axpy(-1.0, T);
            if (xinv_corr) DY.axpy(-1.0, *xinv_corr);
            DY.symmetrize();
        };

        // predictor
        solve_direction(0.0, nullptr, dx);
        build_dy(0.0, nullptr, dx);
        double ap = max_step(X, xfac, DX, 0.99);
        double ad = max_step(Y, yfac, DY, 0.99);
        // Mehrotra centering from the affine step
        double gap_aff = 0.0;
        {
            BlockMat Xa = X, Ya = Y;
            Xa.axpy(ap, DX);
            Ya.axpy(ad, DY);
            gap_aff = Xa.inner(Ya);
        }
        double sigma = std::pow(std::max(0.0, gap_aff / gap), 3.0);
        sigma = std::min(1.0, std::max(1e-6, sigma));

        // corrector: second-order term X^{-1} (DX_aff DY_aff)
        BlockMat xinv_corr(p.block_dims);
        for (size_t b = 0; b < xinv_corr.dims->size(); ++b) {
            if (xinv_corr.is_dense(b)) {
                xinv_corr.dense[b] = Xinv.dense[b] * (DX.dense[b] * DY.dense[b]);
            } else {
                for (size_t i2 = 0; i2 < xinv_corr.diag[b].size(); ++i2)
                    xinv_corr.diag[b][i2] = Xinv.diag[b][i2] * DX.diag[b][i2] * DY.diag[b][i2];
            }
        }
        solve_direction(sigma * mu, &xinv_corr, dx_cor);
        build_dy(sigma * mu, &xinv_corr, dx_cor);
        ap = max_step(X, xfac, DX, 0.98);
        ad = max_step(Y, yfac, DY, 0.98);

        // commit with backtracking; a failed Cholesky after the nominally
        // safe step means roundoff ate the margin, so shrink and retry
        bool committed = false;
        for (int bt = 0; bt < 40 && !committed; ++bt) {
            std::vector<double> xt = x;
            for (int i = 0; i < m; ++i) xt[i] += ap * dx_cor[i];
            BlockMat Xt(p.block_dims);
            build_X(xt, Xt);
            BlockMat Yt = Y;
            Yt.axpy(ad, DY);
            Factorization xf2, yf2;
            if (factorize(Xt, xf2) && factorize(Yt, yf2)) {
                x = std::move(xt);
                X = std::move(Xt);
                Y = std::move(Yt);
                xfac = std::move(xf2);
                yfac = std::move(yf2);
                committed = true;
            } else {
                ap *= 0.5;
                ad *= 0.5;
            }
        }
        if (!committed) {
            rep.message = "step backtracking failed (numerical breakdown)";
            break;
        }
    }
    if (it == opts.max_iterations) rep.message = "maximum iterations reached";

    rep.iterations = it;
    rep.x = x;
    rep.primal_value = p.obj_constant;
    for (int i = 0; i < m; ++i) rep.primal_value += p.c[i] * x[i];
    rep.dual_value = p.obj_constant + Y.inner_entries(p.f0);
    rep.duality_gap = X.inner(Y);
    rep.max_violation = dual_resid();

    // certification: shift the dual blocks PSD and charge the residuals
    double min_eig = 0.0;
    for (size_t b = 0; b < Y.dims->size(); ++b) {
        if (Y.is_dense(b)) {
            std::vector<double> ev = sym_eigenvalues(Y.dense[b]);
            if (!ev.empty()) min_eig = std::min(min_eig, ev.front());
        } else {
            for (double v : Y.diag[b]) min_eig = std::min(min_eig, v);
        }
    }
    rep.min_block_eig = min_eig;
    double shift = std::max(0.0, -min_eig) * (1.0 + 1e-8) + 1e-12 * (1.0 + std::abs(min_eig));
    rep.dual_correction = shift;
    // residuals of the shifted dual matrix
    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
        double tr_fi = 0.0;
        for (const auto& e : p.f[i])
            if (e.row == e.col) tr_fi += e.value;
        worst = std::max(worst, std::abs(Y.inner_entries(p.f[i]) + shift * tr_fi + p.c[i]));
    }
    double f0_trace = 0.0;
    for (const auto& e : p.f0)
        if (e.row == e.col) f0_trace += e.value;
    double dual_shifted = Y.inner_entries(p.f0) + shift * f0_trace;
    rep.certified = false;
    rep.certified_upper_bound = rep.dual_value;
    if (p.var_sum_bound >= 0.0) {
        rep.residual_correction = worst * p.var_sum_bound;
        rep.certified = true;
        rep.certified_upper_bound = p.obj_constant + dual_shifted + rep.residual_correction;
    }
    if (p.objective_dominates_l1 && worst < 0.5) {
        // c^T x <= <F0,Y'> + max|r| ||x||_1 <= <F0,Y'> + max|r| c^T x
        double mult = std::max(0.0, dual_shifted) / (1.0 - worst);
        double cand = p.obj_constant + mult;
        if (!rep.certified || cand < rep.certified_upper_bound) {
            rep.residual_correction = mult - dual_shifted;
            rep.certified_upper_bound = cand;
        }
        rep.certified = true;
    }
    return rep;
}

long long integer_bound(const SolveReport& report) {
    if (!report.certified)
        throw std::invalid_argument("integer_bound: report carries no certified bound");
    return static_cast<long long>(std::floor(report.certified_upper_bound + 1e-6));
}

}  // namespace bwc

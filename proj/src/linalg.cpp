#include "bwc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bwc {

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Mat Mat::transposed() const {
    Mat m(c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("Mat: dimension mismatch in product");
    Mat m(r_, o.c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k) {
            double aik = (*this)(i, k);
            if (aik == 0.0) continue;
            for (size_t j = 0; j < o.c_; ++j) m(i, j) += aik * o(k, j);
        }
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    Mat m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    Mat m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
}

Mat Mat::operator*(double s) const {
    Mat m = *this;
    for (double& x : m.a_) x *= s;
    return m;
}

void Mat::axpy(double alpha, const Mat& o) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += alpha * o.a_[i];
}

void Mat::symmetrize() {
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = i + 1; j < c_; ++j) {
            double m = 0.5 * ((*this)(i, j) + (*this)(j, i));
            (*this)(i, j) = m;
            (*this)(j, i) = m;
        }
}

double Mat::frobenius() const {
    double s = 0;
    for (double x : a_) s += x * x;
    return std::sqrt(s);
}

namespace {

// one Jacobi sweep pass; returns off-diagonal norm after the pass
void jacobi_rotate(Mat& a, Mat* v, size_t p, size_t q) {
    double apq = a(p, q);
    if (apq == 0.0) return;
    double app = a(p, p), aqq = a(q, q);
    double tau = (aqq - app) / (2.0 * apq);
    double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    double c = 1.0 / std::sqrt(1.0 + t * t);
    double s = t * c;
    size_t n = a.rows();
    for (size_t k = 0; k < n; ++k) {
        double akp = a(k, p), akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (size_t k = 0; k < n; ++k) {
        double apk = a(p, k), aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    if (v) {
        for (size_t k = 0; k < n; ++k) {
            double vkp = (*v)(k, p), vkq = (*v)(k, q);
            (*v)(k, p) = c * vkp - s * vkq;
            (*v)(k, q) = s * vkp + c * vkq;
        }
    }
}

}  // namespace

void sym_eigen(Mat a, std::vector<double>& values, Mat& vectors) {
    size_t n = a.rows();
    vectors = Mat::identity(n);
    if (n == 0) { values.clear(); return; }
    double norm = a.frobenius();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (std::sqrt(off) <= 1e-15 * std::max(1.0, norm)) break;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) jacobi_rotate(a, &vectors, p, q);
    }
    values.resize(n);
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    std::vector<double> diag(n);
    for (size_t i = 0; i < n; ++i) diag[i] = a(i, i);
    std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) { return diag[x] < diag[y]; });
    Mat sorted(n, n);
    for (size_t j = 0; j < n; ++j) {
        values[j] = diag[idx[j]];
        for (size_t i = 0; i < n; ++i) sorted(i, j) = vectors(i, idx[j]);
    }
    vectors = std::move(sorted);
}

std::vector<double> sym_eigenvalues(Mat a) {
    std::vector<double> values;
    Mat v;
    sym_eigen(std::move(a), values, v);
    return values;
}

bool cholesky(const Mat& a, Mat& l) {
    size_t n = a.rows();
    l = Mat(n, n);
    for (size_t j = 0; j < n; ++j) {
        double d = a(j, j);
        for (size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (!(d > 0.0) || !std::isfinite(d)) return false;
        l(j, j) = std::sqrt(d);
        for (size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / l(j, j);
        }
    }
    return true;
}

std::vector<double> chol_solve(const Mat& l, std::vector<double> b) {
    size_t n = l.rows();
    for (size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (size_t k = 0; k < i; ++k) s -= l(i, k) * b[k];
        b[i] = s / l(i, i);
    }
    for (size_t i = n; i-- > 0;) {
        double s = b[i];
        for (size_t k = i + 1; k < n; ++k) s -= l(k, i) * b[k];
        b[i] = s / l(i, i);
    }
    return b;
}

Mat chol_inverse(const Mat& l) {
    size_t n = l.rows();
    Mat inv(n, n);
    for (size_t col = 0; col < n; ++col) {
        std::vector<double> e(n, 0.0);
        e[col] = 1.0;
        std::vector<double> x = chol_solve(l, std::move(e));
        for (size_t i = 0; i < n; ++i) inv(i, col) = x[i];
    }
    // enforce exact symmetry against roundoff
    inv.symmetrize();
    return inv;
}

}  // namespace bwc

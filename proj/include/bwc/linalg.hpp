#pragma once

#include <cstddef>
#include <vector>

namespace bwc {

// Dense row-major matrix of doubles; just enough for the small blocks the
// solver touches.
class Mat {
  public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, 0.0) {}
    static Mat identity(size_t n);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    double& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    double operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }
    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }

    Mat transposed() const;
    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(double s) const;
    void axpy(double alpha, const Mat& o);   // *this += alpha * o
    void symmetrize();
    double frobenius() const;

  private:
    size_t r_ = 0, c_ = 0;
    std::vector<double> a_;
};

// Eigenvalues (ascending) of a symmetric matrix, cyclic Jacobi.
std::vector<double> sym_eigenvalues(Mat a);
// Full eigendecomposition: a = V diag(w) V^T; returns eigenvalues ascending.
void sym_eigen(Mat a, std::vector<double>& values, Mat& vectors);

// Cholesky a = L L^T for SPD a; returns false if a pivot fails.
bool cholesky(const Mat& a, Mat& l);
// Solve (L L^T) x = b given the Cholesky factor.
std::vector<double> chol_solve(const Mat& l, std::vector<double> b);
// A^{-1} from the Cholesky factor.
Mat chol_inverse(const Mat& l);

}  // namespace bwc

#include "asq/cmatrix.hpp"

#include <cmath>

#include "asq/kernels.hpp"

namespace asq {

CMatrix CMatrix::identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

CMatrix CMatrix::transpose() const {
    CMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

cplx CMatrix::trace() const {
    if (rows_ != cols_) throw Error(ErrorCode::DimMismatch, "trace of non-square matrix");
    cplx t = 0.0;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : a_) m = std::max(m, std::abs(v));
    return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorCode::DimMismatch, "matrix addition shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorCode::DimMismatch, "matrix subtraction shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
    for (cplx& v : a_) v *= s;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::DimMismatch, "matrix product shape mismatch");
    CMatrix c(a.rows(), b.cols());
    kernels::matmul_parallel(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
    return c;
}

cplx hs_inner(const CMatrix& x, const CMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw Error(ErrorCode::DimMismatch, "hs_inner shape mismatch");
    cplx s = 0.0;
    const cplx* px = x.data();
    const cplx* py = y.data();
    const size_t n = static_cast<size_t>(x.rows()) * x.cols();
    for (size_t i = 0; i < n; ++i) s += px[i] * std::conj(py[i]);
    return s;
}

double hermiticity_residual(const CMatrix& m) {
    if (m.rows() != m.cols())
        throw Error(ErrorCode::DimMismatch, "hermiticity_residual of non-square matrix");
    double r = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r = std::max(r, std::abs(m(i, j) - std::conj(m(j, i))));
    return r;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::DimMismatch, "max_abs_diff shape mismatch");
    double r = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r = std::max(r, std::abs(a(i, j) - b(i, j)));
    return r;
}

}  // namespace asq

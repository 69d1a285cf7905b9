#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "asq/error.hpp"
#include "asq/tolerance.hpp"

namespace asq {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Value type; all operations are pure.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static CMatrix identity(int n);
    static CMatrix zero(int rows, int cols) { return CMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const cplx& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    cplx* data() { return a_.data(); }
    const cplx* data() const { return a_.data(); }

    CMatrix adjoint() const;
    CMatrix transpose() const;
    cplx trace() const;
    double max_abs() const;

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(cplx s);

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
    friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> a_;
};

// Matrix product through the OpenMP kernel.
CMatrix operator*(const CMatrix& a, const CMatrix& b);

// Hilbert-Schmidt inner product <X,Y> = Tr(X Y^dag) = sum_ij X_ij conj(Y_ij).
cplx hs_inner(const CMatrix& x, const CMatrix& y);

// max entry of |M - M^dag|; requires square.
double hermiticity_residual(const CMatrix& m);

// max entry of |A - B|.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

}  // namespace asq

#pragma once

#include <vector>

#include "asq/cmatrix.hpp"

namespace asq::kernels {

// Hot loops, each in two variants: a serial reference and an OpenMP version.
// The parallel versions assign each output element (or each reduction item) to
// exactly one thread with the same per-element evaluation order as the serial
// code, so results are bit-identical between the two; the parity test suite
// asserts that.

// C = A * B, A is m x k, B is k x n.
void matmul_serial(const cplx* a, const cplx* b, cplx* c, int m, int k, int n);
void matmul_parallel(const cplx* a, const cplx* b, cplx* c, int m, int k, int n);

// Brute-force intersection-number scan over a relation matrix.
// p[(i*(d+1) + j)*(d+1) + k] = #{z : rel(x,z)=i, rel(z,y)=j} for any (x,y)
// with rel(x,y)=k; `constant` reports whether that count is independent of the
// choice of (x,y) (association scheme axiom 4). Counts are taken from the
// first pair realizing each k (row-major scan order).
struct IntersectionScan {
    int d = 0;
    std::vector<long long> p;  // (d+1)^3
    bool constant = true;
    long long violations = 0;  // number of (x,y) pairs disagreeing with the reference count
};

IntersectionScan intersection_scan_serial(const int* rel, int n, int d);
IntersectionScan intersection_scan_parallel(const int* rel, int n, int d);

// max over ordered pairs m' != m and all k of |Tr(U_{m'}^dag rho U_m E_k)|.
double pair_trace_residual_serial(const std::vector<CMatrix>& unitaries, const CMatrix& rho,
                                  const std::vector<CMatrix>& idempotents);
double pair_trace_residual_parallel(const std::vector<CMatrix>& unitaries, const CMatrix& rho,
                                    const std::vector<CMatrix>& idempotents);

}  // namespace asq::kernels

#include "asq/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace asq {

namespace {

// One complex Jacobi rotation zeroing a(p,q). The 2x2 Hermitian block is
// phase-rotated to a real symmetric block, then a classic real rotation is
// applied; the combined unitary G acts on columns p,q as
//   col_p' = c col_p - s e^{-i phi} col_q
//   col_q' = s col_p + c e^{-i phi} col_q
// with phi = arg a(p,q).
void jacobi_rotate(CMatrix& a, CMatrix& v, int p, int q) {
    const cplx apq = a(p, q);
    const double absapq = std::abs(apq);
    if (absapq == 0.0) return;

    const cplx phase = apq / absapq;  // e^{i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * absapq);
    double t;
    if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const cplx sp = s * phase;          // s e^{i phi}
    const cplx spc = std::conj(sp);     // s e^{-i phi}
    const cplx cphc = c * std::conj(phase);

    const int n = a.rows();
    // A <- G^dag A G
    for (int r = 0; r < n; ++r) {
        const cplx arp = a(r, p);
        const cplx arq = a(r, q);
        a(r, p) = c * arp - spc * arq;
        a(r, q) = s * arp + cphc * arq;
    }
    for (int col = 0; col < n; ++col) {
        const cplx apc = a(p, col);
        const cplx aqc = a(q, col);
        a(p, col) = c * apc - sp * aqc;
        a(q, col) = s * apc + c * phase * aqc;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = cplx(a(p, p).real(), 0.0);
    a(q, q) = cplx(a(q, q).real(), 0.0);

    for (int r = 0; r < n; ++r) {
        const cplx vrp = v(r, p);
        const cplx vrq = v(r, q);
        v(r, p) = c * vrp - spc * vrq;
        v(r, q) = s * vrp + cphc * vrq;
    }
}

double offdiag_max(const CMatrix& a) {
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

}  // namespace

EigResult herm_eig(const CMatrix& m, Tolerance tol) {
    if (m.rows() != m.cols())
        throw Error(ErrorCode::DimMismatch, "herm_eig requires a square matrix");
    const double hres = hermiticity_residual(m);
    if (hres > tol.eps)
        throw Error(ErrorCode::NotHermitian,
                    "hermiticity residual " + std::to_string(hres) + " exceeds tolerance");

    const int n = m.rows();
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

    CMatrix v = CMatrix::identity(n);
    const double scale = std::max(a.max_abs(), 1e-300);
    const double stop = 1e-15 * scale;

    for (int sweep = 0; sweep < 100; ++sweep) {
        if (offdiag_max(a) <= stop) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > stop) jacobi_rotate(a, v, p, q);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return a(x, x).real() < a(y, y).real();
    });

    EigResult res;
    res.values.resize(n);
    res.vectors = CMatrix(n, n);
    for (int i = 0; i < n; ++i) {
        res.values[i] = a(order[i], order[i]).real();
        for (int r = 0; r < n; ++r) res.vectors(r, i) = v(r, order[i]);
    }
    return res;
}

int numeric_rank(const CMatrix& m, Tolerance tol) {
    const double scale = m.max_abs();
    if (scale == 0.0) return 0;
    const CMatrix gram = m.adjoint() * m;
    EigResult eig = herm_eig(gram, Tolerance{std::max(tol.eps, 1e-12) * std::max(1.0, gram.max_abs())});
    int rank = 0;
    for (double lam : eig.values) {
        const double sigma = std::sqrt(std::max(lam, 0.0));
        if (sigma > tol.eps * scale) ++rank;
    }
    return rank;
}

int span_dim(const std::vector<CMatrix>& mats, Tolerance tol) {
    const int k = static_cast<int>(mats.size());
    if (k == 0) return 0;
    CMatrix gram(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) gram(a, b) = hs_inner(mats[a], mats[b]);
    const double scale = std::max(gram.max_abs(), 1e-300);
    EigResult eig = herm_eig(gram, Tolerance{1e-10 * scale});
    int dim = 0;
    for (double lam : eig.values)
        if (lam > tol.eps * scale) ++dim;
    return dim;
}

CMatrix complete_to_unitary(const CMatrix& rows, Tolerance tol) {
    const int r = rows.rows();
    const int dim = rows.cols();
    if (r > dim)
        throw Error(ErrorCode::NotOrthonormal, "more rows than the ambient dimension");

    // Orthonormality of the given rows.
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j <= i; ++j) {
            cplx g = 0.0;
            for (int c = 0; c < dim; ++c) g += rows(i, c) * std::conj(rows(j, c));
            const double target = (i == j) ? 1.0 : 0.0;
            if (std::abs(g - target) > tol.eps)
                throw Error(ErrorCode::NotOrthonormal,
                            "input rows are not orthonormal within tolerance");
        }
    }

    CMatrix u(dim, dim);
    for (int i = 0; i < r; ++i)
        for (int c = 0; c < dim; ++c) u(i, c) = rows(i, c);

    int have = r;
    std::vector<cplx> w(dim);
    for (int k = 0; k < dim && have < dim; ++k) {
        for (int c = 0; c < dim; ++c) w[c] = (c == k) ? 1.0 : 0.0;
        // project out existing rows
        for (int b = 0; b < have; ++b) {
            cplx ip = 0.0;
            for (int c = 0; c < dim; ++c) ip += std::conj(u(b, c)) * w[c];
            for (int c = 0; c < dim; ++c) w[c] -= ip * u(b, c);
        }
        double norm = 0.0;
        for (int c = 0; c < dim; ++c) norm += std::norm(w[c]);
        norm = std::sqrt(norm);
        if (norm < tol.eps) continue;  // e_k already in the span
        // re-orthogonalize once, then normalize
        for (int b = 0; b < have; ++b) {
            cplx ip = 0.0;
            for (int c = 0; c < dim; ++c) ip += std::conj(u(b, c)) * w[c];
            for (int c = 0; c < dim; ++c) w[c] -= ip * u(b, c);
        }
        norm = 0.0;
        for (int c = 0; c < dim; ++c) norm += std::norm(w[c]);
        norm = std::sqrt(norm);
        if (norm < tol.eps) continue;
        for (int c = 0; c < dim; ++c) u(have, c) = w[c] / norm;
        ++have;
    }
    if (have != dim)
        throw Error(ErrorCode::CompletionFailed,
                    "standard-basis completion produced " + std::to_string(have) + " of " +
                        std::to_string(dim) + " rows");
    return u;
}

}  // namespace asq

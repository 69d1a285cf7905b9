#include <algorithm>
#include <cmath>
#include <complex>

#include "asq/kernels.hpp"

namespace asq::kernels {

void matmul_serial(const cplx* a, const cplx* b, cplx* c, int m, int k, int n) {
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            cplx acc = 0.0;
            const cplx* arow = a + static_cast<size_t>(i) * k;
            for (int l = 0; l < k; ++l) acc += arow[l] * b[static_cast<size_t>(l) * n + j];
            c[static_cast<size_t>(i) * n + j] = acc;
        }
    }
}

IntersectionScan intersection_scan_serial(const int* rel, int n, int d) {
    IntersectionScan scan;
    scan.d = d;
    const int dd = d + 1;
    scan.p.assign(static_cast<size_t>(dd) * dd * dd, -1);

    std::vector<long long> counts(static_cast<size_t>(dd) * dd);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            const int k = rel[static_cast<size_t>(x) * n + y];
            std::fill(counts.begin(), counts.end(), 0);
            for (int z = 0; z < n; ++z) {
                const int i = rel[static_cast<size_t>(x) * n + z];
                const int j = rel[static_cast<size_t>(z) * n + y];
                ++counts[static_cast<size_t>(i) * dd + j];
            }
            bool mismatch = false;
            for (int i = 0; i < dd; ++i) {
                for (int j = 0; j < dd; ++j) {
                    long long& ref = scan.p[(static_cast<size_t>(i) * dd + j) * dd + k];
                    const long long got = counts[static_cast<size_t>(i) * dd + j];
                    if (ref < 0)
                        ref = got;
                    else if (ref != got)
                        mismatch = true;
                }
            }
            if (mismatch) ++scan.violations;
        }
    }
    for (long long& v : scan.p)
        if (v < 0) v = 0;  // relation value never realized
    scan.constant = scan.violations == 0;
    return scan;
}

double pair_trace_residual_serial(const std::vector<CMatrix>& unitaries, const CMatrix& rho,
                                  const std::vector<CMatrix>& idempotents) {
    const int nu = static_cast<int>(unitaries.size());
    const int dim = rho.rows();
    std::vector<CMatrix> rho_u(nu, CMatrix(dim, dim));
    for (int m = 0; m < nu; ++m)
        matmul_serial(rho.data(), unitaries[m].data(), rho_u[m].data(), dim, dim, dim);

    double res = 0.0;
    CMatrix x(dim, dim);
    for (int mp = 0; mp < nu; ++mp) {
        const CMatrix adj = unitaries[mp].adjoint();
        for (int m = 0; m < nu; ++m) {
            if (m == mp) continue;
            matmul_serial(adj.data(), rho_u[m].data(), x.data(), dim, dim, dim);
            for (const CMatrix& e : idempotents) {
                cplx tr = 0.0;
                for (int r = 0; r < dim; ++r)
                    for (int c = 0; c < dim; ++c) tr += x(r, c) * e(c, r);
                res = std::max(res, std::abs(tr));
            }
        }
    }
    return res;
}

}  // namespace asq::kernels

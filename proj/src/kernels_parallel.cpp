#include <algorithm>
#include <cmath>
#include <complex>

#include "asq/kernels.hpp"

namespace asq::kernels {

void matmul_parallel(const cplx* a, const cplx* b, cplx* c, int m, int k, int n) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            cplx acc = 0.0;
            const cplx* arow = a + static_cast<size_t>(i) * k;
            for (int l = 0; l < k; ++l) acc += arow[l] * b[static_cast<size_t>(l) * n + j];
            c[static_cast<size_t>(i) * n + j] = acc;
        }
    }
}

IntersectionScan intersection_scan_parallel(const int* rel, int n, int d) {
    IntersectionScan scan;
    scan.d = d;
    const int dd = d + 1;
    scan.p.assign(static_cast<size_t>(dd) * dd * dd, -1);

    // Reference counts come from the first (row-major) pair realizing each
    // relation value, same as the serial scan.
    std::vector<int> first_x(dd, -1), first_y(dd, -1);
    for (int x = 0; x < n && static_cast<int>(std::count(first_x.begin(), first_x.end(), -1)) > 0;
         ++x) {
        for (int y = 0; y < n; ++y) {
            const int k = rel[static_cast<size_t>(x) * n + y];
            if (first_x[k] < 0) {
                first_x[k] = x;
                first_y[k] = y;
            }
        }
    }
    for (int k = 0; k < dd; ++k) {
        if (first_x[k] < 0) continue;
        const int x = first_x[k], y = first_y[k];
        for (int z = 0; z < n; ++z) {
            const int i = rel[static_cast<size_t>(x) * n + z];
            const int j = rel[static_cast<size_t>(z) * n + y];
            long long& ref = scan.p[(static_cast<size_t>(i) * dd + j) * dd + k];
            if (ref < 0) ref = 0;
            ++ref;
        }
        for (int i = 0; i < dd; ++i)
            for (int j = 0; j < dd; ++j) {
                long long& ref = scan.p[(static_cast<size_t>(i) * dd + j) * dd + k];
                if (ref < 0) ref = 0;
            }
    }

    long long violations = 0;
#pragma omp parallel reduction(+ : violations)
    {
        std::vector<long long> counts(static_cast<size_t>(dd) * dd);
#pragma omp for schedule(static)
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
                for (int i = 0; i < dd && !mismatch; ++i)
                    for (int j = 0; j < dd; ++j)
                        if (scan.p[(static_cast<size_t>(i) * dd + j) * dd + k] !=
                            counts[static_cast<size_t>(i) * dd + j]) {
                            mismatch = true;
                            break;
                        }
                if (mismatch) ++violations;
            }
        }
    }
    for (long long& v : scan.p)
        if (v < 0) v = 0;
    scan.violations = violations;
    scan.constant = violations == 0;
    return scan;
}

double pair_trace_residual_parallel(const std::vector<CMatrix>& unitaries, const CMatrix& rho,
                                    const std::vector<CMatrix>& idempotents) {
    const int nu = static_cast<int>(unitaries.size());
    const int dim = rho.rows();
    std::vector<CMatrix> rho_u(nu, CMatrix(dim, dim));
#pragma omp parallel for schedule(static)
    for (int m = 0; m < nu; ++m)
        matmul_serial(rho.data(), unitaries[m].data(), rho_u[m].data(), dim, dim, dim);

    double res = 0.0;
#pragma omp parallel reduction(max : res)
    {
        CMatrix x(dim, dim);
#pragma omp for schedule(dynamic)
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
    }
    return res;
}

}  // namespace asq::kernels

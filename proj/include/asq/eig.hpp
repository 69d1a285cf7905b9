#pragma once

#include <utility>
#include <vector>

#include "asq/cmatrix.hpp"
#include "asq/tolerance.hpp"

namespace asq {

struct EigResult {
    std::vector<double> values;  // ascending
    CMatrix vectors;             // unitary; column i pairs with values[i]
};

// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
// Input must satisfy |M - M^dag|_max <= tol.eps (NotHermitian otherwise);
// the iteration runs on the symmetrized (M + M^dag)/2.
// Guarantees |M - Q diag(values) Q^dag|_max <= 10 * tol.eps * |M|_max.
// Fully deterministic: fixed sweep order, stable eigenvalue sort.
EigResult herm_eig(const CMatrix& m, Tolerance tol);

// Count of singular values > tol.eps * |M|_max. Singular values are computed
// as sqrt of the eigenvalues of M^dag M (clamped at zero).
int numeric_rank(const CMatrix& m, Tolerance tol);

// Dimension of span{mats} via the eigenvalues of the Gram matrix
// G[a][b] = <mats_a, mats_b>_HS; counts eigenvalues > tol.eps * |G|_max.
int span_dim(const std::vector<CMatrix>& mats, Tolerance tol);

// Given r pairwise-orthonormal D-vectors as the rows of `rows`, returns a
// D x D unitary whose first r rows are the inputs exactly as given. Remaining
// rows come from Gram-Schmidt over the standard basis in ascending order
// (one re-orthogonalization pass per accepted vector); basis vectors whose
// first-pass projection residual is below tol.eps are skipped.
CMatrix complete_to_unitary(const CMatrix& rows, Tolerance tol);

}  // namespace asq

#pragma once

#include <utility>
#include <vector>

#include "asq/cmatrix.hpp"
#include "asq/scheme.hpp"
#include "asq/spectral.hpp"
#include "asq/tolerance.hpp"

namespace asq {

// Kraus operators F_i = A_i K^{-1/2}, K = sum_i A_i^dag A_i. K lies in the
// Bose-Mesner algebra (K = sum_i kappa_i E_i with kappa_i = sum_k theta_k(i)^2,
// every kappa_i >= 1 because theta_0(i) = 1), so the normalization preserves
// span{F_i^dag F_j} = span{E_i}.
struct KrausChannel {
    std::vector<CMatrix> kraus;
    int n = 0;
};

// Basis of the non-commutative graph S. For scheme channels the basis is the
// set of minimal idempotents, which is Hilbert-Schmidt orthogonal.
struct OperatorSystem {
    std::vector<CMatrix> basis;
    int dim = 0;
};

struct DensityOperator {
    CMatrix mat;
};

KrausChannel normalize_kraus(const AssociationScheme& s, const SpectralData& sd, Tolerance tol);

OperatorSystem operator_system(const SpectralData& sd);

// Hilbert-Schmidt orthogonality of X against every basis element of S.
// Returns (in_perp, max |<X, basis_k>|).
std::pair<bool, double> in_s_perp(const OperatorSystem& s, const CMatrix& x, Tolerance tol);

// Validates the DensityOperator invariants (Hermitian, PSD within tol,
// unit trace) and wraps the matrix.
DensityOperator make_density(CMatrix m, Tolerance tol);

// rho -> sum_i F_i rho F_i^dag; output validated as a DensityOperator.
DensityOperator apply_channel(const KrausChannel& ch, const DensityOperator& rho, Tolerance tol);

// Trace preservation in both conventions (sum F_i^dag F_i = I is enforced;
// sum F_i F_i^dag = I coincides for symmetric schemes and is reported too),
// plus span{F_i^dag F_j} dimension = d+1 and membership of every F_i^dag F_j
// in span{E_k}.
VerificationReport cptp_checks(const KrausChannel& ch, const SpectralData& sd, Tolerance tol);

}  // namespace asq

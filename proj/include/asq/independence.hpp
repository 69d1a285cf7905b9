#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "asq/channel.hpp"
#include "asq/cmatrix.hpp"
#include "asq/report.hpp"
#include "asq/spectral.hpp"
#include "asq/tolerance.hpp"

namespace asq {

// Independence certificate: unit vectors phi_1..phi_M (rows), pairwise
// orthogonal with every cross operator |phi_i><phi_j| in S^perp.
struct AlphaCertificate {
    CMatrix vectors;  // M x D, row per vector
};

// Knill-Laflamme code certificate: projection P with P S P = C P.
struct AlphaQCertificate {
    CMatrix projector;
    int dim = 0;
    std::vector<cplx> scalars;  // lambda_X per operator-system basis element
};

// t^2 unitary t x t matrices, pairwise Hilbert-Schmidt orthogonal:
// S_{j,k} = sum_r exp(2 pi i j r / t) E_{r, r+k mod t}, stored at index j*t+k.
struct SpinBasis {
    int t = 0;
    std::vector<CMatrix> mats;
};

// Unitary entanglement-assisted certificate: density rho and unitaries
// U_1..U_N with Tr(U_{m'}^dag rho U_m E_k) = 0 for all m != m' and all k.
// The t x D matrices B_m = W^dag U_m V are retained for audit.
struct AlphaUCertificate {
    DensityOperator rho;
    std::vector<CMatrix> unitaries;
    std::vector<CMatrix> block_data;
};

struct BoundsReport {
    int alpha_q = 0;
    int alpha = 0;                  // = D for scheme channels
    int alpha_u_lower = 0;          // t^2 d when pseudocyclic, else alpha
    int alpha_upper_trivial = 0;    // D
    int alpha_u_upper_trivial = 0;  // 1 + dim S^perp = 1 + (D^2 - (d+1))
    bool pseudocyclic = false;
    int t = 0;
    std::optional<double> ratio;    // t^2 d / D^2 when pseudocyclic
};

// The D vectors realizing alpha(S) = D: union of orthonormal bases of the
// eigenspaces W_i (the rows of the eigenbasis).
AlphaCertificate build_alpha_certificate(const SpectralData& sd);

// Pigeonhole (M <= D), unit norms, pairwise orthogonality, and
// |<phi_j| E_k |phi_i>| <= tol for all i != j, k.
VerificationReport verify_alpha_certificate(const AlphaCertificate& cert, const OperatorSystem& s,
                                            Tolerance tol);

// Value = max over eigenvalue-product classes Y of sum_{i in Y} m_i, with
// P = sum_{i in Y*} E_i (ties broken by lowest class index). With A_0 = I the
// classes are singletons, so the value is max_i m_i.
std::pair<int, AlphaQCertificate> alpha_q(const SpectralData& sd, Tolerance tol);

VerificationReport verify_alpha_q_certificate(const AlphaQCertificate& cert,
                                              const OperatorSystem& s, Tolerance tol);

SpinBasis spin_basis(int t);

// The t^2 d unitaries of the pseudocyclic construction: row space blocks
// B_m(0) = 0, B_m(j) = C_i for m = i + (j-1) t^2, and U_m solving
// B_m = W^dag U_m V with W = first t standard basis vectors. Requires a
// pseudocyclic scheme (NotPseudocyclic) with t >= 2 (TSmall).
AlphaUCertificate build_alpha_u_certificate(const SpectralData& sd, const OperatorSystem& s,
                                            Tolerance tol);

// Checks rho, unitarity of every U_m, and the pair condition
// Tr(U_{m'}^dag rho U_m E_k) = 0 over ordered pairs (both orders).
VerificationReport verify_alpha_u_certificate(const AlphaUCertificate& cert,
                                              const OperatorSystem& s, Tolerance tol);

BoundsReport bounds_report(const SpectralData& sd, const OperatorSystem& s, Tolerance tol);

}  // namespace asq

#pragma once

#include <cstdint>
#include <vector>

#include "asq/cmatrix.hpp"
#include "asq/report.hpp"
#include "asq/scheme.hpp"
#include "asq/tolerance.hpp"

namespace asq {

// Spectral decomposition of the Bose-Mesner algebra of a symmetric scheme.
//
// Index 0 is pinned to the eigenspace containing the all-ones vector, so
// m_0 = 1 and theta[k][0] is the valency of A_k. Remaining eigenspaces are
// ordered by their eigenvalue columns (theta[1][i], theta[2][i], ...) in
// descending lexicographic order, which is seed-independent.
struct SpectralData {
    int n = 0;
    int d = 0;
    std::vector<CMatrix> idempotents;            // E_0..E_d, Hermitian projections
    std::vector<std::vector<double>> eigentable; // theta[k][i] = eigenvalue of A_k on W_i
    std::vector<int> multiplicities;             // m_i = rank(E_i) = dim W_i
    CMatrix eigenbasis;                          // n x n; row r holds the entries of v_r
    std::vector<int> group_offsets;              // d+2 entries; rows [off[i], off[i+1]) span W_i
};

struct PseudocyclicProfile {
    bool is_pseudocyclic = false;
    int t = 0;  // common multiplicity m_1 = ... = m_d when pseudocyclic
};

// Simultaneous diagonalization of A_0..A_d: eigendecompose a seeded random
// combination M = sum c_k A_k, group by eigenvalue gaps (relative 1e-6),
// certify that every A_k acts as a scalar on each group, and refine groups by
// restricted eigendecompositions where certification fails.
SpectralData decompose(const AssociationScheme& s, std::uint64_t seed, Tolerance tol);

PseudocyclicProfile pseudocyclic_profile(const SpectralData& sd);

// Partition of column indices of a (possibly complex) eigenvalue table where
// i ~ i' iff conj(theta[k][i]) * theta[l][i] matches for all k, l within tol.
// Classes are returned sorted by smallest member.
std::vector<std::vector<int>> eigenvalue_product_classes(const CMatrix& theta, double tol);

// The same partition on the scheme's eigentable. With A_0 = I present the
// classes are always singletons.
std::vector<std::vector<int>> eigenvalue_products(const SpectralData& sd, Tolerance tol);

// Named checks for the SpectralData invariants: idempotency, resolution of
// identity, reconstruction A_k = sum_i theta[k][i] E_i, unit theta row for
// A_0, pairwise-distinct eigenvalue columns, multiplicity bookkeeping, and
// valencies in column 0.
VerificationReport spectral_invariants(const AssociationScheme& s, const SpectralData& sd,
                                       Tolerance tol);

}  // namespace asq

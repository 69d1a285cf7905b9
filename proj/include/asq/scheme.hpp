#pragma once

#include <cstdint>
#include <vector>

#include "asq/cmatrix.hpp"
#include "asq/field.hpp"
#include "asq/report.hpp"

namespace asq {

// Association scheme on n points with d nonidentity classes, stored as one
// relation value per pair: relation[x*n+y] = i means the (x,y) entry of A_i
// is 1. A_0 = I is the diagonal; classes 1..d partition the off-diagonal.
struct AssociationScheme {
    int n = 0;
    int d = 0;
    std::vector<int> relation;

    int rel(int x, int y) const { return relation[static_cast<size_t>(x) * n + y]; }
    bool is_symmetric() const;
};

// Structure constants p[i][j][k] with A_i A_j = sum_k p[i][j][k] A_k,
// computed by the brute-force counting oracle.
struct IntersectionNumbers {
    int d = 0;
    std::vector<long long> p;          // (d+1)^3, index (i*(d+1)+j)*(d+1)+k
    std::vector<long long> valencies;  // k_i, row sums of A_i

    long long at(int i, int j, int k) const {
        return p[(static_cast<size_t>(i) * (d + 1) + j) * (d + 1) + k];
    }
};

// Cyclotomic scheme on GF(q): relation[x][y] = 1 + class(x - y), classes being
// the cosets of the index-d subgroup of the multiplicative group. Requires
// d | q-1, d > 1 and -1 in C_0 (equivalently (q-1)/d even or p = 2); schemes
// failing the latter are non-symmetric and are rejected.
AssociationScheme cyclotomic_scheme(const FieldCtx& ctx, int d);

// Binary Hamming scheme H(n,2): points are length-n binary words, relation is
// Hamming distance. 1 <= n <= 12.
AssociationScheme hamming_scheme(int word_length);

// d = 1, A_1 = J - I. N >= 2.
AssociationScheme one_class_scheme(int points);

// One named check per defining axiom; axiom 4 runs the brute-force
// intersection-number scan and doubles as its oracle.
VerificationReport verify_axioms(const AssociationScheme& s);

IntersectionNumbers intersection_numbers(const AssociationScheme& s);

// A_i as a complex matrix with 0/1 entries.
CMatrix adjacency_matrix(const AssociationScheme& s, int i);

// A_i in exact integers, for recombination identities.
std::vector<std::int64_t> adjacency_int(const AssociationScheme& s, int i);

// FNV-1a 64 over the relation entries (little-endian uint32 each, row-major).
std::uint64_t scheme_hash(const AssociationScheme& s);

}  // namespace asq

#include "asq/scheme.hpp"

#include <bit>
#include <string>

#include "asq/kernels.hpp"

namespace asq {

bool AssociationScheme::is_symmetric() const {
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (rel(x, y) != rel(y, x)) return false;
    return true;
}

AssociationScheme cyclotomic_scheme(const FieldCtx& ctx, int d) {
    const std::int64_t q = ctx.size();
    if (d <= 1 || (q - 1) % d != 0)
        throw Error(ErrorCode::BadDivisor,
                    "class count d = " + std::to_string(d) + " must satisfy d > 1 and d | q-1");

    // Symmetry holds iff -1 lies in C_0, i.e. (q-1)/d even or p = 2.
    const auto minus_one_class = ctx.cyclotomic_class(d, ctx.neg(1));
    if (!minus_one_class.has_value() || *minus_one_class != 0)
        throw Error(ErrorCode::NonSymmetric,
                    "-1 is not in C_0; the cyclotomic scheme would be non-symmetric");

    AssociationScheme s;
    s.n = static_cast<int>(q);
    s.d = d;
    s.relation.assign(static_cast<size_t>(q) * q, 0);
    for (std::int64_t x = 0; x < q; ++x) {
        for (std::int64_t y = 0; y < q; ++y) {
            if (x == y) continue;
            const auto cls = ctx.cyclotomic_class(d, ctx.sub(x, y));
            s.relation[static_cast<size_t>(x) * q + y] = 1 + *cls;
        }
    }
    return s;
}

AssociationScheme hamming_scheme(int word_length) {
    if (word_length < 1 || word_length > 12)
        throw Error(ErrorCode::SizeCap, "Hamming word length must be in [1, 12]");
    const int n = 1 << word_length;
    AssociationScheme s;
    s.n = n;
    s.d = word_length;
    s.relation.assign(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            s.relation[static_cast<size_t>(x) * n + y] = std::popcount(static_cast<unsigned>(x ^ y));
    return s;
}

AssociationScheme one_class_scheme(int points) {
    if (points < 2) throw Error(ErrorCode::SizeCap, "one-class scheme needs at least 2 points");
    AssociationScheme s;
    s.n = points;
    s.d = 1;
    s.relation.assign(static_cast<size_t>(points) * points, 1);
    for (int x = 0; x < points; ++x) s.relation[static_cast<size_t>(x) * points + x] = 0;
    return s;
}

VerificationReport verify_axioms(const AssociationScheme& s) {
    VerificationReport rep;
    const int n = s.n;
    const int d = s.d;

    long long diag_violations = 0;
    for (int x = 0; x < n; ++x)
        if (s.rel(x, x) != 0) ++diag_violations;
    rep.add("axiom1_identity_diagonal", static_cast<double>(diag_violations), 0.0);

    long long partition_violations = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            const int v = s.rel(x, y);
            if (v < 1 || v > d) ++partition_violations;
        }
    rep.add("axiom2_offdiagonal_partition", static_cast<double>(partition_violations), 0.0);

    // Axiom 3: a class permutation i -> i' with rel(y,x) = rel(x,y)'.
    std::vector<int> transpose_of(d + 1, -1);
    transpose_of[0] = 0;
    long long transpose_violations = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int v = s.rel(x, y);
            if (v < 0 || v > d) continue;  // charged to axiom 2
            const int w = s.rel(y, x);
            if (transpose_of[v] == -1)
                transpose_of[v] = w;
            else if (transpose_of[v] != w)
                ++transpose_violations;
        }
    std::vector<int> seen(d + 1, 0);
    for (int i = 0; i <= d; ++i) {
        const int t = transpose_of[i];
        if (t < 0 || t > d || seen[t]++)
            ++transpose_violations;
    }
    rep.add("axiom3_transpose_closed", static_cast<double>(transpose_violations), 0.0);

    const auto scan = kernels::intersection_scan_parallel(s.relation.data(), n, d);
    rep.add("axiom4_intersection_constancy", static_cast<double>(scan.violations), 0.0);

    return rep;
}

IntersectionNumbers intersection_numbers(const AssociationScheme& s) {
    const auto scan = kernels::intersection_scan_parallel(s.relation.data(), s.n, s.d);
    IntersectionNumbers nums;
    nums.d = s.d;
    nums.p = scan.p;
    nums.valencies.assign(s.d + 1, 0);
    for (int y = 0; y < s.n; ++y) ++nums.valencies[s.rel(0, y)];
    return nums;
}

CMatrix adjacency_matrix(const AssociationScheme& s, int i) {
    if (i < 0 || i > s.d)
        throw Error(ErrorCode::IndexOutOfRange, "class index " + std::to_string(i));
    CMatrix a(s.n, s.n);
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y)
            if (s.rel(x, y) == i) a(x, y) = 1.0;
    return a;
}

std::vector<std::int64_t> adjacency_int(const AssociationScheme& s, int i) {
    if (i < 0 || i > s.d)
        throw Error(ErrorCode::IndexOutOfRange, "class index " + std::to_string(i));
    std::vector<std::int64_t> a(static_cast<size_t>(s.n) * s.n, 0);
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y)
            if (s.rel(x, y) == i) a[static_cast<size_t>(x) * s.n + y] = 1;
    return a;
}

std::uint64_t scheme_hash(const AssociationScheme& s) {
    std::uint64_t h = 14695981039346656037ULL;
    auto eat = [&h](std::uint8_t byte) {
        h ^= byte;
        h *= 1099511628211ULL;
    };
    for (int v : s.relation) {
        const auto u = static_cast<std::uint32_t>(v);
        eat(static_cast<std::uint8_t>(u & 0xff));
        eat(static_cast<std::uint8_t>((u >> 8) & 0xff));
        eat(static_cast<std::uint8_t>((u >> 16) & 0xff));
        eat(static_cast<std::uint8_t>((u >> 24) & 0xff));
    }
    return h;
}

}  // namespace asq

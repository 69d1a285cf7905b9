#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <vector>

#include "asq/json_io.hpp"
#include "asq/scheme.hpp"

using namespace asq;

namespace {

// Exact integer product of two adjacency matrices.
std::vector<std::int64_t> int_matmul(const std::vector<std::int64_t>& a,
                                     const std::vector<std::int64_t>& b, int n) {
    std::vector<std::int64_t> c(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const std::int64_t v = a[static_cast<size_t>(i) * n + k];
            if (v == 0) continue;
            for (int j = 0; j < n; ++j) c[static_cast<size_t>(i) * n + j] += v * b[static_cast<size_t>(k) * n + j];
        }
    return c;
}

}  // namespace

TEST_CASE("paley q=5 relation and adjacency") {
    const FieldCtx f = FieldCtx::make(5, 1);
    const AssociationScheme s = cyclotomic_scheme(f, 2);
    CHECK(s.n == 5);
    CHECK(s.d == 2);
    CHECK(s.is_symmetric());

    // A_1 is the pentagon: first row (0,1,0,0,1)
    const CMatrix a1 = adjacency_matrix(s, 1);
    const double expected[5] = {0, 1, 0, 0, 1};
    for (int y = 0; y < 5; ++y) CHECK(a1(0, y).real() == expected[y]);

    // circulant: row x is row 0 shifted by x
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) CHECK(s.rel(x, y) == s.rel(0, (y - x + 5) % 5));
}

TEST_CASE("cyclotomic GF(13) d=3 valencies") {
    const FieldCtx f = FieldCtx::make(13, 1);
    const AssociationScheme s = cyclotomic_scheme(f, 3);
    CHECK(s.n == 13);
    const IntersectionNumbers nums = intersection_numbers(s);
    CHECK(nums.valencies == std::vector<long long>{1, 4, 4, 4});
    // spec'd structure constant: p_{1,1}^0 = k_1 = 4 for the symmetric scheme
    CHECK(nums.at(1, 1, 0) == 4);
}

TEST_CASE("non-symmetric cyclotomic schemes are rejected") {
    const FieldCtx f = FieldCtx::make(5, 1);
    try {
        cyclotomic_scheme(f, 4);  // 4th powers mod 5 = {1}, -1 = 4 not in C_0
        FAIL("expected NonSymmetric");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonSymmetric);
    }
    CHECK_THROWS_AS(cyclotomic_scheme(f, 3), Error);  // 3 does not divide 4
}

TEST_CASE("hamming schemes") {
    const AssociationScheme h1 = hamming_scheme(1);
    CHECK(h1.n == 2);
    CHECK(h1.d == 1);
    CHECK(h1.relation == one_class_scheme(2).relation);

    const AssociationScheme h2 = hamming_scheme(2);
    CHECK(h2.n == 4);
    CHECK(intersection_numbers(h2).valencies == std::vector<long long>{1, 2, 1});

    const AssociationScheme h4 = hamming_scheme(4);
    CHECK(h4.n == 16);
    CHECK(h4.d == 4);
    CHECK(intersection_numbers(h4).valencies == std::vector<long long>{1, 4, 6, 4, 1});

    CHECK_THROWS_AS(hamming_scheme(0), Error);
    CHECK_THROWS_AS(hamming_scheme(13), Error);
}

TEST_CASE("one-class schemes") {
    const AssociationScheme s2 = one_class_scheme(2);
    CHECK(s2.relation == std::vector<int>{0, 1, 1, 0});
    CHECK(intersection_numbers(one_class_scheme(5)).valencies ==
          std::vector<long long>{1, 4});
    CHECK_THROWS_AS(one_class_scheme(1), Error);
}

TEST_CASE("axioms verify on every generated scheme") {
    std::vector<AssociationScheme> schemes;
    schemes.push_back(cyclotomic_scheme(FieldCtx::make(5, 1), 2));
    schemes.push_back(cyclotomic_scheme(FieldCtx::make(13, 1), 3));
    schemes.push_back(cyclotomic_scheme(FieldCtx::make(17, 1), 4));
    schemes.push_back(cyclotomic_scheme(FieldCtx::make(9, 2), 2));
    schemes.push_back(hamming_scheme(3));
    schemes.push_back(one_class_scheme(4));
    for (const auto& s : schemes) {
        const VerificationReport rep = verify_axioms(s);
        CHECK(rep.overall());
        CHECK(rep.checks.size() == 4);
    }
}

TEST_CASE("axiom checks fail on malformed relations") {
    AssociationScheme s = one_class_scheme(4);
    s.relation[0] = 1;  // relation[0][0] = 1 violates A_0 = I
    const VerificationReport rep = verify_axioms(s);
    CHECK_FALSE(rep.overall());
    CHECK(rep.checks[0].name == "axiom1_identity_diagonal");
    CHECK_FALSE(rep.checks[0].passed);

    // breaking one off-diagonal pair breaks intersection constancy
    AssociationScheme h = hamming_scheme(2);
    h.relation[1] = 2;
    const VerificationReport rep2 = verify_axioms(h);
    CHECK_FALSE(rep2.overall());
}

TEST_CASE("sum of adjacency matrices is J, exactly") {
    const AssociationScheme s = cyclotomic_scheme(FieldCtx::make(13, 1), 2);
    std::vector<std::int64_t> sum(static_cast<size_t>(s.n) * s.n, 0);
    for (int i = 0; i <= s.d; ++i) {
        const auto a = adjacency_int(s, i);
        for (size_t k = 0; k < sum.size(); ++k) sum[k] += a[k];
    }
    for (std::int64_t v : sum) CHECK(v == 1);
}

TEST_CASE("recombination A_i A_j = sum_k p_ijk A_k in exact integers") {
    for (const AssociationScheme& s :
         {cyclotomic_scheme(FieldCtx::make(13, 1), 3), hamming_scheme(3), one_class_scheme(6)}) {
        const IntersectionNumbers nums = intersection_numbers(s);
        std::vector<std::vector<std::int64_t>> adj;
        for (int i = 0; i <= s.d; ++i) adj.push_back(adjacency_int(s, i));
        for (int i = 0; i <= s.d; ++i)
            for (int j = 0; j <= s.d; ++j) {
                const auto prod = int_matmul(adj[i], adj[j], s.n);
                std::vector<std::int64_t> rhs(prod.size(), 0);
                for (int k = 0; k <= s.d; ++k) {
                    const std::int64_t c = nums.at(i, j, k);
                    if (c == 0) continue;
                    for (size_t e = 0; e < rhs.size(); ++e) rhs[e] += c * adj[k][e];
                }
                CHECK(prod == rhs);
            }
    }
}

TEST_CASE("symmetric schemes commute exactly") {
    const AssociationScheme s = cyclotomic_scheme(FieldCtx::make(17, 1), 4);
    std::vector<std::vector<std::int64_t>> adj;
    for (int i = 0; i <= s.d; ++i) adj.push_back(adjacency_int(s, i));
    for (int i = 0; i <= s.d; ++i)
        for (int j = i + 1; j <= s.d; ++j)
            CHECK(int_matmul(adj[i], adj[j], s.n) == int_matmul(adj[j], adj[i], s.n));
}

TEST_CASE("scheme JSON round-trip is bit-exact") {
    namespace fs = std::filesystem;
    const AssociationScheme s = cyclotomic_scheme(FieldCtx::make(13, 1), 3);
    const auto path = fs::temp_directory_path() / "asq_scheme_roundtrip.json";
    save_scheme(s, path.string());
    const AssociationScheme t = load_scheme(path.string());
    CHECK(t.n == s.n);
    CHECK(t.d == s.d);
    CHECK(t.relation == s.relation);
    CHECK(scheme_hash(t) == scheme_hash(s));
    fs::remove(path);
}

TEST_CASE("load_scheme rejects malformed files") {
    namespace fs = std::filesystem;
    const auto path = fs::temp_directory_path() / "asq_bad_scheme.json";
    {
        std::FILE* f = std::fopen(path.string().c_str(), "w");
        std::fputs("{\"format\":\"asq-scheme\",\"n\":3,\"d\":1,\"relation\":[0,1,1,1]}", f);
        std::fclose(f);
    }
    CHECK_THROWS_AS(load_scheme(path.string()), Error);  // 4 entries for n=3
    fs::remove(path);
    CHECK_THROWS_AS(load_scheme("/nonexistent/file.json"), Error);
}

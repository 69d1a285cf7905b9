#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numbers>

#include "asq/eig.hpp"
#include "asq/json_io.hpp"
#include "asq/spectral.hpp"

using namespace asq;

namespace {

SpectralData decomposed(const AssociationScheme& s, std::uint64_t seed = 42) {
    return decompose(s, seed, default_tolerance(s.n));
}

}  // namespace

TEST_CASE("one-class scheme decomposes into J/N and I - J/N") {
    const AssociationScheme s = one_class_scheme(5);
    const SpectralData sd = decomposed(s);
    CHECK(sd.multiplicities == std::vector<int>{1, 4});

    CMatrix j_over_n(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) j_over_n(i, j) = 0.2;
    CHECK(max_abs_diff(sd.idempotents[0], j_over_n) < 1e-10);
    CHECK(max_abs_diff(sd.idempotents[1], CMatrix::identity(5) - j_over_n) < 1e-10);
}

TEST_CASE("paley q=5 spectral data") {
    const AssociationScheme s = cyclotomic_scheme(FieldCtx::make(5, 1), 2);
    const SpectralData sd = decomposed(s);
    CHECK(sd.multiplicities == std::vector<int>{1, 2, 2});

    // theta[1][.] = (2, (-1+sqrt5)/2, (-1-sqrt5)/2) in the pinned order
    CHECK(sd.eigentable[1][0] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(sd.eigentable[1][1] == doctest::Approx((-1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-10));
    CHECK(sd.eigentable[1][2] == doctest::Approx((-1.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-10));

    // numeric rank of each idempotent agrees with the group sizes
    for (int i = 0; i <= 2; ++i)
        CHECK(numeric_rank(sd.idempotents[i], default_tolerance(5)) == sd.multiplicities[i]);
}

TEST_CASE("cyclotomic GF(13) d=3 multiplicities") {
    const AssociationScheme s = cyclotomic_scheme(FieldCtx::make(13, 1), 3);
    const SpectralData sd = decomposed(s);
    CHECK(sd.multiplicities == std::vector<int>{1, 4, 4, 4});
    for (int i = 0; i <= 3; ++i)
        CHECK(numeric_rank(sd.idempotents[i], default_tolerance(13)) == 4);
}

TEST_CASE("hamming n=4 multiplicities are binomial") {
    const SpectralData sd = decomposed(hamming_scheme(4));
    CHECK(sd.multiplicities == std::vector<int>{1, 4, 6, 4, 1});
    CHECK_FALSE(pseudocyclic_profile(sd).is_pseudocyclic);
}

TEST_CASE("spectral invariants hold across the scheme family") {
    std::vector<AssociationScheme> schemes;
    schemes.push_back(cyclotomic_scheme(FieldCtx::make(5, 1), 2));
    schemes.push_back(cyclotomic_scheme(FieldCtx::make(13, 1), 2));
    schemes.push_back(cyclotomic_scheme(FieldCtx::make(17, 1), 4));
    schemes.push_back(cyclotomic_scheme(FieldCtx::make(9, 2), 4));
    schemes.push_back(hamming_scheme(3));
    schemes.push_back(one_class_scheme(7));
    for (const auto& s : schemes) {
        const SpectralData sd = decomposed(s);
        const VerificationReport rep = spectral_invariants(s, sd, default_tolerance(s.n));
        INFO("scheme n=" << s.n << " d=" << s.d);
        for (const auto& c : rep.checks) {
            INFO(c.name << " residual " << c.max_residual);
            CHECK(c.passed);
        }
    }
}

TEST_CASE("pseudocyclic profiles") {
    CHECK(pseudocyclic_profile(decomposed(cyclotomic_scheme(FieldCtx::make(5, 1), 2))).t == 2);
    CHECK(pseudocyclic_profile(decomposed(one_class_scheme(6))).t == 5);
    CHECK(pseudocyclic_profile(decomposed(one_class_scheme(6))).is_pseudocyclic);

    const auto prof = pseudocyclic_profile(decomposed(cyclotomic_scheme(FieldCtx::make(13, 1), 3)));
    CHECK(prof.is_pseudocyclic);
    CHECK(prof.t == 4);
}

TEST_CASE("decompose is deterministic for a fixed seed") {
    const AssociationScheme s = cyclotomic_scheme(FieldCtx::make(13, 1), 3);
    const SpectralData a = decompose(s, 42, default_tolerance(s.n));
    const SpectralData b = decompose(s, 42, default_tolerance(s.n));
    CHECK(a.multiplicities == b.multiplicities);
    CHECK(max_abs_diff(a.eigenbasis, b.eigenbasis) == 0.0);
    for (int i = 0; i <= s.d; ++i) {
        CHECK(max_abs_diff(a.idempotents[i], b.idempotents[i]) == 0.0);
        for (int k = 0; k <= s.d; ++k) CHECK(a.eigentable[k][i] == b.eigentable[k][i]);
    }

    // different seed: same invariant content (idempotents as a set agree)
    const SpectralData c = decompose(s, 7, default_tolerance(s.n));
    CHECK(c.multiplicities == a.multiplicities);
    for (int i = 0; i <= s.d; ++i)
        CHECK(max_abs_diff(a.idempotents[i], c.idempotents[i]) < 1e-9);
}

TEST_CASE("decompose rejects non-symmetric relations") {
    AssociationScheme s = one_class_scheme(3);
    s.relation[0 * 3 + 1] = 1;
    s.relation[1 * 3 + 0] = 0;  // asymmetric now (and malformed)
    CHECK_THROWS_AS(decomposed(s), Error);
}

TEST_CASE("eigenbasis rows are grouped by eigenspace") {
    const AssociationScheme s = cyclotomic_scheme(FieldCtx::make(13, 1), 2);
    const SpectralData sd = decomposed(s);
    REQUIRE(sd.group_offsets.size() == static_cast<size_t>(s.d + 2));
    CHECK(sd.group_offsets.front() == 0);
    CHECK(sd.group_offsets.back() == s.n);
    // rows of group i must be fixed by E_i
    for (int i = 0; i <= s.d; ++i)
        for (int r = sd.group_offsets[i]; r < sd.group_offsets[i + 1]; ++r) {
            for (int a = 0; a < s.n; ++a) {
                cplx acc = 0.0;
                for (int b = 0; b < s.n; ++b) acc += sd.idempotents[i](a, b) * sd.eigenbasis(r, b);
                CHECK(std::abs(acc - sd.eigenbasis(r, a)) < 1e-10);
            }
        }
}

TEST_CASE("span of A_i^T A_j equals span of idempotents (dimension d+1)") {
    for (const AssociationScheme& s :
         {cyclotomic_scheme(FieldCtx::make(5, 1), 2), hamming_scheme(3)}) {
        std::vector<CMatrix> products;
        for (int i = 0; i <= s.d; ++i)
            for (int j = 0; j <= s.d; ++j)
                products.push_back(adjacency_matrix(s, i).adjoint() * adjacency_matrix(s, j));
        CHECK(span_dim(products, default_tolerance(s.n)) == s.d + 1);
    }
}

TEST_CASE("eigenvalue product classes") {
    // with an identity row, classes are singletons
    const SpectralData sd = decomposed(cyclotomic_scheme(FieldCtx::make(5, 1), 2));
    const auto classes = eigenvalue_products(sd, default_tolerance(5));
    CHECK(classes.size() == 3);
    for (const auto& c : classes) CHECK(c.size() == 1);

    // synthetic 2x2 table with phase-proportional columns and no identity row:
    // theta = [[1, e^{i phi}], [2, 2 e^{i phi}]] merges both indices
    const cplx phase = std::polar(1.0, 0.7);
    CMatrix theta(2, 2);
    theta(0, 0) = 1.0;
    theta(0, 1) = phase;
    theta(1, 0) = 2.0;
    theta(1, 1) = 2.0 * phase;
    const auto merged = eigenvalue_product_classes(theta, 1e-10);
    REQUIRE(merged.size() == 1);
    CHECK(merged[0] == std::vector<int>{0, 1});

    // brute-force the defining condition as an independent oracle
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
            CHECK(std::abs(std::conj(theta(k, 0)) * theta(l, 0) -
                           std::conj(theta(k, 1)) * theta(l, 1)) < 1e-12);
}

TEST_CASE("spectral JSON round-trip") {
    namespace fs = std::filesystem;
    const AssociationScheme s = cyclotomic_scheme(FieldCtx::make(5, 1), 2);
    const SpectralData sd = decomposed(s);
    const auto path = fs::temp_directory_path() / "asq_spectral_roundtrip.json";
    save_spectral(sd, path.string());
    const SpectralData t = load_spectral(path.string());
    CHECK(t.multiplicities == sd.multiplicities);
    CHECK(max_abs_diff(t.eigenbasis, sd.eigenbasis) == 0.0);
    CHECK(max_abs_diff(t.idempotents[1], sd.idempotents[1]) == 0.0);
    CHECK(t.eigentable == sd.eigentable);
    fs::remove(path);
}

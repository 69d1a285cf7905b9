#include <doctest.h>

#include <cmath>
#include <random>

#include "asq/channel.hpp"

using namespace asq;

namespace {

struct Setup {
    AssociationScheme s;
    SpectralData sd;
    OperatorSystem sys;
    KrausChannel ch;
    Tolerance tol;
};

Setup make_setup(AssociationScheme s) {
    Setup st{std::move(s), {}, {}, {}, {}};
    st.tol = default_tolerance(st.s.n);
    st.sd = decompose(st.s, 42, st.tol);
    st.sys = operator_system(st.sd);
    st.ch = normalize_kraus(st.s, st.sd, st.tol);
    return st;
}

DensityOperator random_density(int n, std::uint64_t seed, Tolerance tol) {
    std::mt19937_64 rng(seed);
    auto u = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5; };
    CMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = cplx(u(), u());
    CMatrix rho = g * g.adjoint();  // PSD
    rho *= 1.0 / rho.trace().real();
    return make_density(std::move(rho), tol);
}

}  // namespace

TEST_CASE("normalize_kraus on the 2-point one-class scheme") {
    // A_1 = J - I swaps the two points; K = I + (J-I)^2 = 2I, so
    // F_1 = (J - I)/sqrt2.
    const Setup st = make_setup(one_class_scheme(2));
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(st.ch.kraus[1](0, 1).real() == doctest::Approx(r).epsilon(1e-12));
    CHECK(st.ch.kraus[1](1, 0).real() == doctest::Approx(r).epsilon(1e-12));
    CHECK(std::abs(st.ch.kraus[1](0, 0)) < 1e-12);
    CHECK(st.ch.kraus[0](0, 0).real() == doctest::Approx(r).epsilon(1e-12));
}

TEST_CASE("degenerate single-point scheme has F_0 = 1") {
    AssociationScheme s;
    s.n = 1;
    s.d = 0;
    s.relation = {0};
    const Setup st = make_setup(s);
    REQUIRE(st.ch.kraus.size() == 1);
    CHECK(st.ch.kraus[0](0, 0).real() == doctest::Approx(1.0));
}

TEST_CASE("trace preservation within 1e-10 on paley q=5") {
    const Setup st = make_setup(cyclotomic_scheme(FieldCtx::make(5, 1), 2));
    CMatrix sum(st.s.n, st.s.n);
    for (const CMatrix& f : st.ch.kraus) sum += f.adjoint() * f;
    CHECK(max_abs_diff(sum, CMatrix::identity(st.s.n)) <= 1e-10);
}

TEST_CASE("cptp_checks pass on several schemes") {
    for (AssociationScheme s :
         {cyclotomic_scheme(FieldCtx::make(13, 1), 3), hamming_scheme(3), one_class_scheme(5)}) {
        const Setup st = make_setup(std::move(s));
        const VerificationReport rep = cptp_checks(st.ch, st.sd, st.tol);
        INFO("scheme n=" << st.s.n);
        for (const auto& c : rep.checks) {
            INFO(c.name << " residual " << c.max_residual);
            CHECK(c.passed);
        }
    }
}

TEST_CASE("operator_system exposes the idempotent basis") {
    const Setup one = make_setup(one_class_scheme(5));
    CHECK(one.sys.dim == 2);
    CMatrix j_over_n(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) j_over_n(i, j) = 0.2;
    CHECK(max_abs_diff(one.sys.basis[0], j_over_n) < 1e-10);

    CHECK(make_setup(cyclotomic_scheme(FieldCtx::make(5, 1), 2)).sys.dim == 3);
    CHECK(make_setup(hamming_scheme(4)).sys.dim == 5);
}

TEST_CASE("in_s_perp") {
    const Setup st = make_setup(cyclotomic_scheme(FieldCtx::make(5, 1), 2));

    // E_0 is in S, not S^perp; <E_0, E_0> = rank = 1
    auto [flag0, res0] = in_s_perp(st.sys, st.sd.idempotents[0], st.tol);
    CHECK_FALSE(flag0);
    CHECK(res0 == doctest::Approx(1.0).epsilon(1e-9));

    // |v><w| with v in W_1, w in W_2 lies in S^perp
    const int r1 = st.sd.group_offsets[1];
    const int r2 = st.sd.group_offsets[2];
    CMatrix vw(st.s.n, st.s.n);
    for (int a = 0; a < st.s.n; ++a)
        for (int b = 0; b < st.s.n; ++b)
            vw(a, b) = st.sd.eigenbasis(r1, a) * std::conj(st.sd.eigenbasis(r2, b));
    auto [flag1, res1] = in_s_perp(st.sys, vw, st.tol);
    CHECK(flag1);
    CHECK(res1 < st.tol.eps);

    auto [flagz, resz] = in_s_perp(st.sys, CMatrix(st.s.n, st.s.n), st.tol);
    CHECK(flagz);
    CHECK(resz == 0.0);
}

TEST_CASE("apply_channel preserves density operators") {
    const Setup st = make_setup(cyclotomic_scheme(FieldCtx::make(5, 1), 2));

    // uniform input
    CMatrix eye_over_n = CMatrix::identity(st.s.n);
    eye_over_n *= 1.0 / st.s.n;
    const DensityOperator out =
        apply_channel(st.ch, make_density(std::move(eye_over_n), st.tol), st.tol);
    CHECK(std::abs(out.mat.trace() - cplx(1.0)) <= 1e-10);

    // seeded random densities stay PSD with unit trace
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const DensityOperator rho = random_density(st.s.n, 500 + seed, st.tol);
        const DensityOperator mapped = apply_channel(st.ch, rho, st.tol);
        CHECK(std::abs(mapped.mat.trace() - cplx(1.0)) <= 1e-10);
    }
}

TEST_CASE("2x2 hand computation of the channel action") {
    const Setup st = make_setup(one_class_scheme(2));
    CMatrix pure(2, 2);
    pure(0, 0) = 1.0;
    const DensityOperator out = apply_channel(st.ch, make_density(std::move(pure), st.tol), st.tol);
    // F_0 rho F_0^dag = diag(1,0)/2, F_1 rho F_1^dag = diag(0,1)/2
    CHECK(out.mat(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(out.mat(1, 1).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(out.mat(0, 1)) < 1e-12);
}

TEST_CASE("dimension mismatches raise") {
    const Setup st = make_setup(one_class_scheme(3));
    CMatrix wrong = CMatrix::identity(2);
    wrong *= 0.5;
    CHECK_THROWS_AS(apply_channel(st.ch, make_density(std::move(wrong), st.tol), st.tol), Error);
    CHECK_THROWS_AS(in_s_perp(st.sys, CMatrix(2, 2), st.tol), Error);
}

TEST_CASE("make_density validates its invariants") {
    const Tolerance tol = default_tolerance(2);
    CMatrix not_unit = CMatrix::identity(2);  // trace 2
    CHECK_THROWS_AS(make_density(std::move(not_unit), tol), Error);

    CMatrix neg(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;  // negative eigenvalue
    CHECK_THROWS_AS(make_density(std::move(neg), tol), Error);
}

#include "asq/independence.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "asq/eig.hpp"
#include "asq/kernels.hpp"

namespace asq {

AlphaCertificate build_alpha_certificate(const SpectralData& sd) {
    return AlphaCertificate{sd.eigenbasis};
}

VerificationReport verify_alpha_certificate(const AlphaCertificate& cert, const OperatorSystem& s,
                                            Tolerance tol) {
    VerificationReport rep;
    const int m = cert.vectors.rows();
    const int dim = cert.vectors.cols();
    rep.note("certificate_size", std::to_string(m));

    if (!s.basis.empty() && s.basis.front().rows() != dim)
        throw Error(ErrorCode::DimMismatch, "certificate vectors do not match the operator system");

    // alpha(S) <= dim H_A: pairwise orthogonal nonzero vectors are independent.
    rep.add("alpha_pigeonhole_size", m > dim ? static_cast<double>(m - dim) : 0.0, 0.0);

    // Gram of the rows: unit diagonal, zero off-diagonal.
    const CMatrix gram = cert.vectors * cert.vectors.adjoint();
    double unit_res = 0.0, orth_res = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const double dev = std::abs(gram(i, j) - (i == j ? cplx(1.0) : cplx(0.0)));
            (i == j ? unit_res : orth_res) = std::max(i == j ? unit_res : orth_res, dev);
        }
    rep.add("alpha_unit_norms", unit_res, tol.eps);
    rep.add("alpha_pairwise_orthogonal", orth_res, tol.eps);

    // |phi_i><phi_j| in S^perp  <=>  <phi_j|E_k|phi_i> = 0 for all k.
    double perp_res = 0.0;
    for (const CMatrix& e : s.basis) {
        const CMatrix h = cert.vectors * e * cert.vectors.adjoint();
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j) perp_res = std::max(perp_res, std::abs(h(j, i)));
    }
    rep.add("alpha_cross_operators_in_s_perp", perp_res, tol.eps);
    return rep;
}

std::pair<int, AlphaQCertificate> alpha_q(const SpectralData& sd, Tolerance tol) {
    const auto classes = eigenvalue_products(sd, tol);

    int best = -1;
    int best_value = -1;
    for (size_t c = 0; c < classes.size(); ++c) {
        int value = 0;
        for (int i : classes[c]) value += sd.multiplicities[i];
        if (value > best_value) {  // classes are ordered by smallest member
            best_value = value;
            best = static_cast<int>(c);
        }
    }

    AlphaQCertificate cert;
    cert.dim = best_value;
    cert.projector = CMatrix(sd.n, sd.n);
    std::vector<bool> in_class(sd.d + 1, false);
    for (int i : classes[best]) {
        in_class[i] = true;
        cert.projector += sd.idempotents[i];
    }
    cert.scalars.resize(sd.d + 1);
    for (int i = 0; i <= sd.d; ++i) cert.scalars[i] = in_class[i] ? 1.0 : 0.0;
    return {best_value, std::move(cert)};
}

VerificationReport verify_alpha_q_certificate(const AlphaQCertificate& cert,
                                              const OperatorSystem& s, Tolerance tol) {
    VerificationReport rep;
    const CMatrix& p = cert.projector;
    if (!s.basis.empty() && s.basis.front().rows() != p.rows())
        throw Error(ErrorCode::DimMismatch, "projector does not match the operator system");

    rep.add("alpha_q_projector_hermitian", hermiticity_residual(p), tol.eps);
    rep.add("alpha_q_projector_idempotent", max_abs_diff(p * p, p), tol.eps);

    const double tr = p.trace().real();
    rep.note("projector_rank", std::to_string(numeric_rank(p, tol)));

    double comp_res = 0.0;
    for (const CMatrix& x : s.basis) {
        const CMatrix pxp = p * x * p;
        const cplx lambda = tr > 0.5 ? pxp.trace() / tr : cplx(0.0);
        CMatrix dev = pxp;
        dev -= lambda * p;
        comp_res = std::max(comp_res, dev.max_abs());
    }
    rep.add("alpha_q_scalar_compression", comp_res, tol.eps);
    return rep;
}

SpinBasis spin_basis(int t) {
    if (t < 1) throw Error(ErrorCode::SizeCap, "spin basis needs t >= 1");
    SpinBasis sb;
    sb.t = t;
    sb.mats.reserve(static_cast<size_t>(t) * t);
    for (int j = 0; j < t; ++j)
        for (int k = 0; k < t; ++k) {
            CMatrix m(t, t);
            for (int r = 0; r < t; ++r)
                m(r, (r + k) % t) = std::polar(1.0, 2.0 * std::numbers::pi * j * r / t);
            sb.mats.push_back(std::move(m));
        }
    return sb;
}

AlphaUCertificate build_alpha_u_certificate(const SpectralData& sd, const OperatorSystem& s,
                                            Tolerance tol) {
    const auto prof = pseudocyclic_profile(sd);
    if (!prof.is_pseudocyclic)
        throw Error(ErrorCode::NotPseudocyclic,
                    "the alpha_u construction requires a pseudocyclic scheme");
    if (prof.t < 2)
        throw Error(ErrorCode::TSmall, "the alpha_u construction requires t >= 2");

    const int t = prof.t;
    const int d = sd.d;
    const int dim = sd.n;  // D = 1 + t d

    // rho = (1/t) sum |w_i><w_i| over the first t standard basis vectors.
    CMatrix rho_mat(dim, dim);
    for (int i = 0; i < t; ++i) rho_mat(i, i) = 1.0 / t;

    // W completes to the identity; V has the eigenbasis vectors as columns.
    const CMatrix v_cols = sd.eigenbasis.transpose();
    const CMatrix v_cols_adj = v_cols.adjoint();

    const SpinBasis spins = spin_basis(t);
    const int count = t * t * d;

    AlphaUCertificate cert;
    cert.rho = make_density(std::move(rho_mat), tol);
    cert.unitaries.reserve(count);
    cert.block_data.reserve(count);

    for (int m = 0; m < count; ++m) {
        const int j = m / (t * t) + 1;   // eigenspace block carrying the spin matrix
        const int i = m % (t * t);       // spin index
        CMatrix b(t, dim);
        const int off = sd.group_offsets[j];
        for (int r = 0; r < t; ++r)
            for (int c = 0; c < t; ++c) b(r, off + c) = spins.mats[i](r, c);
        const CMatrix b_full = complete_to_unitary(b, tol);
        cert.unitaries.push_back(b_full * v_cols_adj);
        cert.block_data.push_back(std::move(b));
    }
    return cert;
}

VerificationReport verify_alpha_u_certificate(const AlphaUCertificate& cert,
                                              const OperatorSystem& s, Tolerance tol) {
    VerificationReport rep;
    const int count = static_cast<int>(cert.unitaries.size());
    rep.note("certificate_size", std::to_string(count));

    const CMatrix& rho = cert.rho.mat;
    const int dim = rho.rows();
    if (!s.basis.empty() && s.basis.front().rows() != dim)
        throw Error(ErrorCode::DimMismatch, "certificate does not match the operator system");

    double rho_herm = hermiticity_residual(rho);
    double rho_trace = std::abs(rho.trace() - cplx(1.0));
    double rho_min_eig = 0.0;
    {
        EigResult eig = herm_eig(rho, Tolerance{std::max(tol.eps, rho_herm * 2)});
        if (!eig.values.empty()) rho_min_eig = std::max(0.0, -eig.values.front());
    }
    rep.add("alpha_u_rho_hermitian", rho_herm, tol.eps);
    rep.add("alpha_u_rho_unit_trace", rho_trace, tol.eps);
    rep.add("alpha_u_rho_psd", rho_min_eig, tol.eps);

    double unitary_res = 0.0;
    const CMatrix eye = CMatrix::identity(dim);
    for (const CMatrix& u : cert.unitaries) {
        if (u.rows() != dim || u.cols() != dim)
            throw Error(ErrorCode::DimMismatch, "unitary dimension mismatch");
        unitary_res = std::max(unitary_res, max_abs_diff(u.adjoint() * u, eye));
    }
    rep.add("alpha_u_unitaries", unitary_res, tol.eps);

    const double pair_res =
        kernels::pair_trace_residual_parallel(cert.unitaries, rho, s.basis);
    rep.add("alpha_u_pair_condition", pair_res, tol.eps);
    return rep;
}

BoundsReport bounds_report(const SpectralData& sd, const OperatorSystem& s, Tolerance tol) {
    BoundsReport b;
    const int dim = sd.n;
    b.alpha = dim;
    b.alpha_upper_trivial = dim;
    b.alpha_u_upper_trivial = 1 + (dim * dim - s.dim);
    b.alpha_q = alpha_q(sd, tol).first;

    const auto prof = pseudocyclic_profile(sd);
    b.pseudocyclic = prof.is_pseudocyclic;
    if (prof.is_pseudocyclic) {
        b.t = prof.t;
        b.alpha_u_lower = prof.t * prof.t * sd.d;
        b.ratio = static_cast<double>(b.alpha_u_lower) / (static_cast<double>(dim) * dim);
    } else {
        b.alpha_u_lower = b.alpha;
    }
    return b;
}

}  // namespace asq

#include "asq/channel.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "asq/eig.hpp"
#include "asq/report.hpp"

namespace asq {

KrausChannel normalize_kraus(const AssociationScheme& s, const SpectralData& sd, Tolerance tol) {
    const int n = s.n;
    const int d = s.d;

    // kappa_i = sum_k theta_k(i)^2; K^{-1/2} = sum_i kappa_i^{-1/2} E_i.
    CMatrix k_inv_sqrt(n, n);
    for (int i = 0; i <= d; ++i) {
        double kappa = 0.0;
        for (int k = 0; k <= d; ++k) kappa += sd.eigentable[k][i] * sd.eigentable[k][i];
        if (kappa < tol.eps)
            throw Error(ErrorCode::SingularNormalizer,
                        "normalizer eigenvalue " + std::to_string(kappa) + " too small");
        const double w = 1.0 / std::sqrt(kappa);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) k_inv_sqrt(a, b) += w * sd.idempotents[i](a, b);
    }

    KrausChannel ch;
    ch.n = n;
    ch.kraus.reserve(d + 1);
    for (int i = 0; i <= d; ++i) ch.kraus.push_back(adjacency_matrix(s, i) * k_inv_sqrt);
    return ch;
}

OperatorSystem operator_system(const SpectralData& sd) {
    OperatorSystem s;
    s.basis = sd.idempotents;
    s.dim = static_cast<int>(s.basis.size());
    return s;
}

std::pair<bool, double> in_s_perp(const OperatorSystem& s, const CMatrix& x, Tolerance tol) {
    double res = 0.0;
    for (const CMatrix& b : s.basis) res = std::max(res, std::abs(hs_inner(x, b)));
    return {res <= tol.eps, res};
}

DensityOperator make_density(CMatrix m, Tolerance tol) {
    if (m.rows() != m.cols())
        throw Error(ErrorCode::DimMismatch, "density operator must be square");
    const double hres = hermiticity_residual(m);
    if (hres > tol.eps)
        throw Error(ErrorCode::NotDensity,
                    "density hermiticity residual " + std::to_string(hres));
    const double traw = std::abs(m.trace() - cplx(1.0));
    if (traw > tol.eps)
        throw Error(ErrorCode::NotDensity, "density trace differs from 1 by " + std::to_string(traw));
    EigResult eig = herm_eig(m, Tolerance{std::max(tol.eps, hres * 2)});
    if (!eig.values.empty() && eig.values.front() < -tol.eps)
        throw Error(ErrorCode::NotDensity,
                    "density operator has eigenvalue " + std::to_string(eig.values.front()));
    return DensityOperator{std::move(m)};
}

DensityOperator apply_channel(const KrausChannel& ch, const DensityOperator& rho, Tolerance tol) {
    if (rho.mat.rows() != ch.n)
        throw Error(ErrorCode::DimMismatch, "channel input dimension mismatch");
    CMatrix out(ch.n, ch.n);
    for (const CMatrix& f : ch.kraus) out += f * rho.mat * f.adjoint();
    return make_density(std::move(out), tol);
}

VerificationReport cptp_checks(const KrausChannel& ch, const SpectralData& sd, Tolerance tol) {
    VerificationReport rep;
    const int n = ch.n;
    const CMatrix eye = CMatrix::identity(n);

    CMatrix sum_fdf(n, n), sum_ffd(n, n);
    for (const CMatrix& f : ch.kraus) {
        sum_fdf += f.adjoint() * f;
        sum_ffd += f * f.adjoint();
    }
    rep.add("cptp_trace_preserving", max_abs_diff(sum_fdf, eye), tol.eps);
    rep.add("cptp_trace_preserving_transpose", max_abs_diff(sum_ffd, eye), tol.eps);

    std::vector<CMatrix> products;
    products.reserve(ch.kraus.size() * ch.kraus.size());
    for (const CMatrix& fi : ch.kraus)
        for (const CMatrix& fj : ch.kraus) products.push_back(fi.adjoint() * fj);

    const int dim = span_dim(products, tol);
    rep.add("channel_span_dimension",
            static_cast<double>(std::abs(dim - static_cast<int>(sd.idempotents.size()))), 0.0);

    // Every F_i^dag F_j must project cleanly onto span{E_k}; the idempotents
    // are HS-orthogonal with <E_k, E_k> = m_k.
    double member_res = 0.0;
    for (const CMatrix& x : products) {
        CMatrix resid = x;
        for (size_t k = 0; k < sd.idempotents.size(); ++k) {
            const cplx c = hs_inner(x, sd.idempotents[k]) / cplx(sd.multiplicities[k]);
            resid -= c * sd.idempotents[k];
        }
        member_res = std::max(member_res, resid.max_abs());
    }
    rep.add("channel_products_in_span", member_res, tol.eps);

    return rep;
}

}  // namespace asq

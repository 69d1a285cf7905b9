// asq: construct association schemes, derive their quantum channels, and
// compute verifiable certificates for the independence numbers of the
// resulting non-commutative graphs.
//
// Exit codes (stable across subcommands):
//   0  all checks pass
//   1  a mathematical check or construction failed
//   2  usage or file-format error

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asq/channel.hpp"
#include "asq/error.hpp"
#include "asq/field.hpp"
#include "asq/independence.hpp"
#include "asq/json_io.hpp"
#include "asq/scheme.hpp"
#include "asq/spectral.hpp"
#include "asq/version.hpp"

namespace {

using namespace asq;

// Flag wins over ASQ_TOL, which wins over the per-scheme default 1e-8*max(1,n).
Tolerance resolve_tol(const std::optional<double>& flag, int n) {
    if (flag.has_value()) return Tolerance{*flag};
    if (const char* env = std::getenv("ASQ_TOL")) {
        try {
            return Tolerance{std::stod(env)};
        } catch (const std::exception&) {
            throw Error(ErrorCode::FormatError, "ASQ_TOL is not a number");
        }
    }
    return default_tolerance(n);
}

void print_report(const VerificationReport& rep) {
    std::cout << "checks:\n";
    for (const CheckResult& c : rep.checks) {
        std::cout << "  " << std::left << std::setw(38) << c.name << std::right
                  << std::scientific << std::setprecision(3) << std::setw(12) << c.max_residual
                  << "  <= " << std::setw(10) << c.threshold << "  "
                  << (c.passed ? "pass" : "FAIL") << "\n";
    }
    std::cout.unsetf(std::ios::scientific);
    std::cout << std::setprecision(6);
    std::cout << "overall: " << (rep.overall() ? "PASS" : "FAIL") << "\n";
}

int cmd_generate(const std::string& kind, std::int64_t p, int f, int d, int hamming_n,
                 int one_class_n, const std::string& out_path) {
    AssociationScheme s;
    if (kind == "cyclotomic") {
        const FieldCtx ctx = FieldCtx::make(p, f);
        s = cyclotomic_scheme(ctx, d);
    } else if (kind == "hamming") {
        s = hamming_scheme(hamming_n);
    } else {
        s = one_class_scheme(one_class_n);
    }
    save_scheme(s, out_path);
    std::cout << "n=" << s.n << " d=" << s.d << " symmetric=" << (s.is_symmetric() ? "yes" : "no")
              << " hash=" << scheme_hash(s) << " -> " << out_path << "\n";
    return 0;
}

struct AnalyzeOutput {
    VerificationReport report;
    std::string summary;
};

AnalyzeOutput analyze_scheme(const AssociationScheme& s, std::uint64_t seed, Tolerance tol,
                             const std::string& certs_dir, const std::string& spectral_path) {
    AnalyzeOutput out;
    VerificationReport& rep = out.report;
    const std::uint64_t hash = scheme_hash(s);
    rep.note("tool", kToolVersion);
    rep.note("n", std::to_string(s.n));
    rep.note("d", std::to_string(s.d));
    rep.note("scheme_hash", std::to_string(hash));
    rep.note("seed", std::to_string(seed));
    rep.note("tol", std::to_string(tol.eps));

    rep.merge(verify_axioms(s));

    const SpectralData sd = decompose(s, seed, tol);
    rep.merge(spectral_invariants(s, sd, tol));
    if (!spectral_path.empty()) save_spectral(sd, spectral_path);

    const OperatorSystem sys = operator_system(sd);
    const KrausChannel ch = normalize_kraus(s, sd, tol);
    rep.merge(cptp_checks(ch, sd, tol));

    const auto prof = pseudocyclic_profile(sd);
    const BoundsReport bounds = bounds_report(sd, sys, tol);

    const AlphaCertificate alpha_cert = build_alpha_certificate(sd);
    rep.merge(verify_alpha_certificate(alpha_cert, sys, tol));
    rep.add("alpha_certificate_size",
            static_cast<double>(std::abs(alpha_cert.vectors.rows() - s.n)), 0.0);

    const auto [aq_value, aq_cert] = alpha_q(sd, tol);
    rep.merge(verify_alpha_q_certificate(aq_cert, sys, tol));
    rep.add("alpha_q_le_alpha", aq_value > bounds.alpha ? 1.0 : 0.0, 0.0);

    bool built_alpha_u = false;
    AlphaUCertificate au_cert;
    if (prof.is_pseudocyclic && prof.t >= 2) {
        au_cert = build_alpha_u_certificate(sd, sys, tol);
        rep.merge(verify_alpha_u_certificate(au_cert, sys, tol));
        rep.add("alpha_u_certificate_size",
                static_cast<double>(std::abs(static_cast<int>(au_cert.unitaries.size()) -
                                             bounds.alpha_u_lower)),
                0.0);
        rep.add("alpha_u_exceeds_alpha",
                bounds.alpha_u_lower > bounds.alpha ? 0.0 : 1.0, 0.0);
        built_alpha_u = true;
    }

    if (!certs_dir.empty()) {
        std::filesystem::create_directories(certs_dir);
        save_alpha_certificate(alpha_cert, hash, certs_dir + "/alpha.json");
        save_alpha_q_certificate(aq_cert, hash, certs_dir + "/alpha_q.json");
        if (built_alpha_u) save_alpha_u_certificate(au_cert, hash, certs_dir + "/alpha_u.json");
    }

    std::ostringstream sum;
    sum << "scheme: n=" << s.n << " d=" << s.d << " hash=" << hash << "\n";
    sum << "multiplicities:";
    for (int m : sd.multiplicities) sum << " " << m;
    sum << "   pseudocyclic: " << (prof.is_pseudocyclic ? "yes" : "no");
    if (prof.is_pseudocyclic) sum << " (t=" << prof.t << ")";
    sum << "\n";
    sum << "alpha   = " << bounds.alpha << "   (certificate with " << alpha_cert.vectors.rows()
        << " vectors)\n";
    sum << "alpha_q = " << aq_value << "   (projector rank " << aq_value << ")\n";
    if (built_alpha_u)
        sum << "alpha_u in [" << bounds.alpha_u_lower << ", " << bounds.alpha_u_upper_trivial
            << "]   (certificate with " << au_cert.unitaries.size() << " unitaries)\n";
    else
        sum << "alpha_u in [" << bounds.alpha_u_lower << ", " << bounds.alpha_u_upper_trivial
            << "]   (construction skipped: "
            << (prof.is_pseudocyclic ? "t < 2" : "not pseudocyclic") << ")\n";
    if (bounds.ratio.has_value())
        sum << "ratio t^2 d / D^2 = " << std::setprecision(12) << *bounds.ratio << "\n";
    out.summary = sum.str();
    return out;
}

int cmd_analyze(const std::string& scheme_path, std::uint64_t seed,
                const std::optional<double>& tol_flag, const std::string& report_path,
                const std::string& certs_dir, const std::string& spectral_path) {
    const AssociationScheme s = load_scheme(scheme_path);
    const Tolerance tol = resolve_tol(tol_flag, s.n);
    AnalyzeOutput out = analyze_scheme(s, seed, tol, certs_dir, spectral_path);
    std::cout << out.summary;
    print_report(out.report);
    if (!report_path.empty()) save_report(out.report, report_path);
    return out.report.overall() ? 0 : 1;
}

int cmd_check_cert(const std::string& scheme_path, const std::string& cert_path,
                   std::uint64_t seed, const std::optional<double>& tol_flag,
                   const std::string& spectral_path) {
    const AssociationScheme s = load_scheme(scheme_path);
    const Tolerance tol = resolve_tol(tol_flag, s.n);
    const LoadedCertificate cert = load_certificate(cert_path);

    const std::uint64_t hash = scheme_hash(s);
    if (cert.scheme_hash != hash)
        throw Error(ErrorCode::HashMismatch,
                    "certificate was produced for a different scheme (hash " +
                        std::to_string(cert.scheme_hash) + " != " + std::to_string(hash) + ")");

    const SpectralData sd =
        spectral_path.empty() ? decompose(s, seed, tol) : load_spectral(spectral_path);
    const OperatorSystem sys = operator_system(sd);

    VerificationReport rep;
    if (cert.kind == "alpha")
        rep = verify_alpha_certificate(cert.alpha, sys, tol);
    else if (cert.kind == "alpha_q")
        rep = verify_alpha_q_certificate(cert.alpha_q, sys, tol);
    else
        rep = verify_alpha_u_certificate(cert.alpha_u, sys, tol);

    std::cout << "certificate kind: " << cert.kind << "\n";
    print_report(rep);
    return rep.overall() ? 0 : 1;
}

int cmd_sweep(int d, const std::vector<std::int64_t>& qs, std::uint64_t seed,
              const std::optional<double>& tol_flag, const std::string& out_csv) {
    std::ofstream csv(out_csv);
    if (!csv) throw Error(ErrorCode::FormatError, "cannot write " + out_csv);
    csv << "q,D,t,alpha,alpha_q,alpha_u_lower,ratio\n";

    for (std::int64_t q : qs) {
        // factor q = p^f
        std::int64_t p = 0;
        for (std::int64_t c = 2; c * c <= q; ++c)
            if (q % c == 0) {
                p = c;
                break;
            }
        if (p == 0) p = q;
        int f = 0;
        std::int64_t rest = q;
        while (rest % p == 0) {
            rest /= p;
            ++f;
        }
        if (rest != 1 || q < 2) {
            std::cerr << "warning: q=" << q << " skipped: not a prime power\n";
            continue;
        }
        try {
            const FieldCtx ctx = FieldCtx::make(p, f);
            const AssociationScheme s = cyclotomic_scheme(ctx, d);
            const Tolerance tol = resolve_tol(tol_flag, s.n);
            const SpectralData sd = decompose(s, seed, tol);
            const OperatorSystem sys = operator_system(sd);
            const BoundsReport b = bounds_report(sd, sys, tol);
            csv << q << "," << s.n << "," << b.t << "," << b.alpha << "," << b.alpha_q << ","
                << b.alpha_u_lower << ",";
            if (b.ratio.has_value())
                csv << std::setprecision(12) << *b.ratio;
            csv << "\n";
        } catch (const Error& e) {
            std::cerr << "warning: q=" << q << " skipped: " << e.what() << "\n";
        }
    }
    std::cout << "sweep written to " << out_csv << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(asq::kToolVersion) +
                 " - independence-number certificates for quantum channels from association "
                 "schemes"};
    app.require_subcommand(1);

    std::uint64_t seed = 42;
    std::optional<double> tol_flag;

    // generate
    auto* gen = app.add_subcommand("generate", "construct a scheme and write it as JSON");
    gen->require_subcommand(1);
    std::string gen_out;
    std::int64_t gp = 0;
    int gf = 1, gd = 0, ghn = 0, gon = 0;

    auto* gen_cyc = gen->add_subcommand("cyclotomic", "cyclotomic scheme on GF(p^f)");
    gen_cyc->add_option("--p", gp, "prime")->required();
    gen_cyc->add_option("--f", gf, "exponent (default 1)");
    gen_cyc->add_option("--d", gd, "number of classes")->required();
    gen_cyc->add_option("-o,--out", gen_out, "output scheme file")->required();

    auto* gen_ham = gen->add_subcommand("hamming", "binary Hamming scheme H(n,2)");
    gen_ham->add_option("--n", ghn, "word length")->required();
    gen_ham->add_option("-o,--out", gen_out, "output scheme file")->required();

    auto* gen_one = gen->add_subcommand("one-class", "one-class scheme, A_1 = J - I");
    gen_one->add_option("--N", gon, "number of points")->required();
    gen_one->add_option("-o,--out", gen_out, "output scheme file")->required();

    // analyze
    auto* ana = app.add_subcommand("analyze", "decompose a scheme, build and verify certificates");
    std::string ana_scheme, ana_report, ana_certs, ana_spectral;
    ana->add_option("scheme", ana_scheme, "scheme JSON file")->required();
    ana->add_option("--seed", seed, "seed for the spectral decomposition (default 42)");
    ana->add_option("--tol", tol_flag, "absolute tolerance (default 1e-8*max(1,n); env ASQ_TOL)");
    ana->add_option("-o,--report", ana_report, "write the JSON report here");
    ana->add_option("--emit-certs", ana_certs, "directory for certificate JSON files");
    ana->add_option("--emit-spectral", ana_spectral, "write the spectral data JSON here");

    // check-cert
    auto* chk = app.add_subcommand("check-cert", "re-verify a certificate file offline");
    std::string chk_scheme, chk_cert, chk_spectral;
    chk->add_option("scheme", chk_scheme, "scheme JSON file")->required();
    chk->add_option("cert", chk_cert, "certificate JSON file")->required();
    chk->add_option("--seed", seed, "seed for the spectral decomposition (default 42)");
    chk->add_option("--tol", tol_flag, "absolute tolerance (default 1e-8*max(1,n); env ASQ_TOL)");
    chk->add_option("--spectral", chk_spectral, "reuse exported spectral data instead of decomposing");

    // sweep
    auto* swp = app.add_subcommand("sweep", "cyclotomic family sweep at fixed d; CSV output");
    int swp_d = 2;
    std::vector<std::int64_t> swp_q;
    std::string swp_out;
    swp->add_option("--d", swp_d, "number of classes")->required();
    swp->add_option("--q", swp_q, "field sizes to try")->delimiter(',');
    swp->add_option("-o,--out", swp_out, "output CSV path")->required();
    swp->add_option("--seed", seed, "seed for the spectral decomposition (default 42)");
    swp->add_option("--tol", tol_flag, "absolute tolerance (default 1e-8*max(1,n); env ASQ_TOL)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            std::string kind = gen_cyc->parsed() ? "cyclotomic"
                               : gen_ham->parsed() ? "hamming"
                                                   : "one-class";
            return cmd_generate(kind, gp, gf, gd, ghn, gon, gen_out);
        }
        if (ana->parsed())
            return cmd_analyze(ana_scheme, seed, tol_flag, ana_report, ana_certs, ana_spectral);
        if (chk->parsed()) return cmd_check_cert(chk_scheme, chk_cert, seed, tol_flag, chk_spectral);
        if (swp->parsed()) return cmd_sweep(swp_d, swp_q, seed, tol_flag, swp_out);
    } catch (const asq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return asq::is_usage_error(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

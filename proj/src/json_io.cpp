#include "asq/json_io.hpp"

#include <fstream>

#include <json.hpp>

namespace asq {

namespace {

using json = nlohmann::ordered_json;

json mat_to_json(const CMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c)
            row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix mat_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw Error(ErrorCode::FormatError, "expected a matrix as nested arrays");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j[0].size());
    CMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j[r].size()) != cols)
            throw Error(ErrorCode::FormatError, "ragged matrix rows");
        for (int c = 0; c < cols; ++c) {
            const json& e = j[r][c];
            if (!e.is_array() || e.size() != 2)
                throw Error(ErrorCode::FormatError, "complex entries must be [re, im] pairs");
            m(r, c) = cplx(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::FormatError, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(ErrorCode::FormatError, "invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::FormatError, "cannot write " + path);
    out << j.dump(2) << "\n";
}

json cert_header(const char* kind, std::uint64_t scheme_hash) {
    json j;
    j["format"] = "asq-cert";
    j["kind"] = kind;
    j["scheme_hash"] = scheme_hash;
    return j;
}

void expect_format(const json& j, const char* format, const std::string& path) {
    if (!j.is_object() || !j.contains("format") || j["format"] != format)
        throw Error(ErrorCode::FormatError, path + " is not a " + format + " file");
}

}  // namespace

void save_scheme(const AssociationScheme& s, const std::string& path) {
    json j;
    j["format"] = "asq-scheme";
    j["version"] = 1;
    j["n"] = s.n;
    j["d"] = s.d;
    j["relation"] = s.relation;
    write_file(j, path);
}

AssociationScheme load_scheme(const std::string& path) {
    const json j = read_file(path);
    expect_format(j, "asq-scheme", path);
    AssociationScheme s;
    try {
        s.n = j.at("n").get<int>();
        s.d = j.at("d").get<int>();
        s.relation = j.at("relation").get<std::vector<int>>();
    } catch (const std::exception& e) {
        throw Error(ErrorCode::FormatError, "malformed scheme file: " + std::string(e.what()));
    }
    if (s.n < 1 || s.d < 0 || s.relation.size() != static_cast<size_t>(s.n) * s.n)
        throw Error(ErrorCode::FormatError, "scheme dimensions inconsistent with relation data");
    for (int v : s.relation)
        if (v < 0 || v > s.d)
            throw Error(ErrorCode::FormatError, "relation value out of [0, d]");
    return s;
}

void save_alpha_certificate(const AlphaCertificate& cert, std::uint64_t scheme_hash,
                            const std::string& path) {
    json j = cert_header("alpha", scheme_hash);
    j["vectors"] = mat_to_json(cert.vectors);
    write_file(j, path);
}

void save_alpha_q_certificate(const AlphaQCertificate& cert, std::uint64_t scheme_hash,
                              const std::string& path) {
    json j = cert_header("alpha_q", scheme_hash);
    j["projector"] = mat_to_json(cert.projector);
    j["dim"] = cert.dim;
    json scal = json::array();
    for (const cplx& s : cert.scalars) scal.push_back(json::array({s.real(), s.imag()}));
    j["scalars"] = std::move(scal);
    write_file(j, path);
}

void save_alpha_u_certificate(const AlphaUCertificate& cert, std::uint64_t scheme_hash,
                              const std::string& path) {
    json j = cert_header("alpha_u", scheme_hash);
    j["rho"] = mat_to_json(cert.rho.mat);
    json us = json::array();
    for (const CMatrix& u : cert.unitaries) us.push_back(mat_to_json(u));
    j["unitaries"] = std::move(us);
    json bs = json::array();
    for (const CMatrix& b : cert.block_data) bs.push_back(mat_to_json(b));
    j["blocks"] = std::move(bs);
    write_file(j, path);
}

LoadedCertificate load_certificate(const std::string& path) {
    const json j = read_file(path);
    expect_format(j, "asq-cert", path);
    LoadedCertificate lc;
    try {
        lc.kind = j.at("kind").get<std::string>();
        lc.scheme_hash = j.at("scheme_hash").get<std::uint64_t>();
        if (lc.kind == "alpha") {
            lc.alpha.vectors = mat_from_json(j.at("vectors"));
        } else if (lc.kind == "alpha_q") {
            lc.alpha_q.projector = mat_from_json(j.at("projector"));
            lc.alpha_q.dim = j.at("dim").get<int>();
            for (const json& e : j.at("scalars"))
                lc.alpha_q.scalars.emplace_back(e[0].get<double>(), e[1].get<double>());
        } else if (lc.kind == "alpha_u") {
            lc.alpha_u.rho.mat = mat_from_json(j.at("rho"));
            for (const json& u : j.at("unitaries")) lc.alpha_u.unitaries.push_back(mat_from_json(u));
            if (j.contains("blocks"))
                for (const json& b : j.at("blocks")) lc.alpha_u.block_data.push_back(mat_from_json(b));
        } else {
            throw Error(ErrorCode::FormatError, "unknown certificate kind '" + lc.kind + "'");
        }
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(ErrorCode::FormatError, "malformed certificate file: " + std::string(e.what()));
    }
    return lc;
}

void save_spectral(const SpectralData& sd, const std::string& path) {
    json j;
    j["format"] = "asq-spectral";
    j["version"] = 1;
    j["n"] = sd.n;
    j["d"] = sd.d;
    j["multiplicities"] = sd.multiplicities;
    j["eigentable"] = sd.eigentable;
    j["group_offsets"] = sd.group_offsets;
    json idem = json::array();
    for (const CMatrix& e : sd.idempotents) idem.push_back(mat_to_json(e));
    j["idempotents"] = std::move(idem);
    j["eigenbasis"] = mat_to_json(sd.eigenbasis);
    write_file(j, path);
}

SpectralData load_spectral(const std::string& path) {
    const json j = read_file(path);
    expect_format(j, "asq-spectral", path);
    SpectralData sd;
    try {
        sd.n = j.at("n").get<int>();
        sd.d = j.at("d").get<int>();
        sd.multiplicities = j.at("multiplicities").get<std::vector<int>>();
        sd.eigentable = j.at("eigentable").get<std::vector<std::vector<double>>>();
        sd.group_offsets = j.at("group_offsets").get<std::vector<int>>();
        for (const json& e : j.at("idempotents")) sd.idempotents.push_back(mat_from_json(e));
        sd.eigenbasis = mat_from_json(j.at("eigenbasis"));
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(ErrorCode::FormatError, "malformed spectral file: " + std::string(e.what()));
    }
    return sd;
}

std::string report_to_json(const VerificationReport& rep) {
    json j;
    j["format"] = "asq-report";
    json checks = json::array();
    for (const CheckResult& c : rep.checks) {
        json cj;
        cj["name"] = c.name;
        cj["max_residual"] = c.max_residual;
        cj["threshold"] = c.threshold;
        cj["passed"] = c.passed;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["overall"] = rep.overall();
    json meta;
    for (const auto& [k, v] : rep.metadata) meta[k] = v;
    j["metadata"] = std::move(meta);
    return j.dump(2) + "\n";
}

void save_report(const VerificationReport& rep, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::FormatError, "cannot write " + path);
    out << report_to_json(rep);
}

}  // namespace asq

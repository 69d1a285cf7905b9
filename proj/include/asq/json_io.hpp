#pragma once

#include <string>

#include "asq/channel.hpp"
#include "asq/independence.hpp"
#include "asq/report.hpp"
#include "asq/scheme.hpp"
#include "asq/spectral.hpp"

namespace asq {

// File formats (complex numbers serialize as [re, im] everywhere):
//   scheme:   {"format":"asq-scheme","version":1,"n":N,"d":d,
//              "relation":[row-major N*N integers]}
//   cert:     {"format":"asq-cert","kind":"alpha"|"alpha_q"|"alpha_u",
//              "scheme_hash":u64, payload}
//   spectral: {"format":"asq-spectral","version":1, idempotents/eigenbasis/
//              eigentable/multiplicities/group_offsets}
// Readers reject unknown formats and malformed payloads with FormatError.

void save_scheme(const AssociationScheme& s, const std::string& path);
AssociationScheme load_scheme(const std::string& path);

void save_alpha_certificate(const AlphaCertificate& cert, std::uint64_t scheme_hash,
                            const std::string& path);
void save_alpha_q_certificate(const AlphaQCertificate& cert, std::uint64_t scheme_hash,
                              const std::string& path);
void save_alpha_u_certificate(const AlphaUCertificate& cert, std::uint64_t scheme_hash,
                              const std::string& path);

struct LoadedCertificate {
    std::string kind;
    std::uint64_t scheme_hash = 0;
    AlphaCertificate alpha;      // valid when kind == "alpha"
    AlphaQCertificate alpha_q;   // valid when kind == "alpha_q"
    AlphaUCertificate alpha_u;   // valid when kind == "alpha_u"
};

LoadedCertificate load_certificate(const std::string& path);

void save_spectral(const SpectralData& sd, const std::string& path);
SpectralData load_spectral(const std::string& path);

std::string report_to_json(const VerificationReport& rep);
void save_report(const VerificationReport& rep, const std::string& path);

}  // namespace asq

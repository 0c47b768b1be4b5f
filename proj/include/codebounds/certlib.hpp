// SPDX-License-Identifier: Apache-2.0
#ifndef CODEBOUNDS_CERTLIB_HPP
#define CODEBOUNDS_CERTLIB_HPP

#include <string>

#include <json.hpp>

#include "codebounds/delsarte.hpp"

namespace codebounds {

/// Serialized bound certificate. Top-level JSON keys are exactly
/// {"version","space","kind","payload","claimed_bound","metadata"}; all
/// rationals are "p/q" strings, never floats.
struct CertificateDocument {
  std::string version = "1";
  nlohmann::json space;
  std::string kind;  // "lp-polynomial" | "sdp-dual"
  nlohmann::json payload;
  std::string claimed_bound;
  nlohmann::json metadata = nlohmann::json::object();

  static CertificateDocument parse(const std::string& text);   // throws std::invalid_argument
  static CertificateDocument from_lp(const LpCertificate& c);  // lp-polynomial document
  std::string serialize() const;                               // canonical form
};

struct DocVerdict {
  bool valid = false;
  Rational bound;
  std::string reason;
};

/// Exact verification: lp-polynomial documents go through
/// delsarte::verify_certificate; sdp-dual documents are checked with exact
/// rational arithmetic (PSD tests and weak-duality margins).
DocVerdict verify_document(const CertificateDocument& doc);

}  // namespace codebounds

#endif

// SPDX-License-Identifier: Apache-2.0
#ifndef CODEBOUNDS_REPORT_HPP
#define CODEBOUNDS_REPORT_HPP

#include <string>

#include <json.hpp>

namespace codebounds {

/// Run report emitted by the CLI bound commands. Every bound entry names the
/// method and the tolerance that produced it.
nlohmann::json make_run_report(const std::string& command, const nlohmann::json& parameters,
                               const nlohmann::json& bounds, double timing_ms,
                               const nlohmann::json& solver, const nlohmann::json& cert_path);

/// Minimal structural JSON-schema validator covering the subset used by
/// schemas/run_report.schema.json: type, required, properties, items.
/// Returns an empty string on success, else a description of the violation.
std::string validate_against_schema(const nlohmann::json& doc, const nlohmann::json& schema);

}  // namespace codebounds

#endif

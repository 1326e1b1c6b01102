#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "picknorm/gleason.hpp"
#include "picknorm/problem.hpp"

namespace picknorm::cli {

struct ResultConfig {
  std::string format = "json";
  bool tolerance_overridden = false;
  /// Wall-clock time; emitted only when set, otherwise null so that output is
  /// byte-identical across runs.
  std::optional<double> timing_ms;
};

struct ResultDocument {
  double norm_lower = 0.0;
  double norm_upper = 0.0;
  double sup_floor = 0.0;
  double tolerance = 0.0;
  nlohmann::json certificate;
  nlohmann::json backend_echo;
  nlohmann::json config_echo;
  std::optional<double> timing_ms;
};

[[nodiscard]] nlohmann::json certificate_to_json(const Certificate& cert);

[[nodiscard]] nlohmann::json result_to_json(const InterpolationProblem& problem,
                                            const NormResult& result, const ResultConfig& config);

/// Throws ParseError with a field path on structural problems.
[[nodiscard]] ResultDocument parse_result_document(const nlohmann::json& doc);

/// Throws ParseError when norm_lower < sup_floor - tolerance or
/// norm_upper < norm_lower.
void validate_result_document(const ResultDocument& doc);

[[nodiscard]] std::string result_csv_header();
[[nodiscard]] std::string result_to_csv_row(const InterpolationProblem& problem,
                                            const NormResult& result);

[[nodiscard]] nlohmann::json gleason_to_json(const gleason::GleasonReport& report,
                                             const gleason::Theorem4Report* theorem4);

/// Non-finite doubles become null.
[[nodiscard]] nlohmann::json number_or_null(double v);

}  // namespace picknorm::cli

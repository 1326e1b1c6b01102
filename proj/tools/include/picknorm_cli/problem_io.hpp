#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "picknorm/problem.hpp"

namespace picknorm::cli {

/// Malformed document; the message starts with the offending field path.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The file could not be read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Complex numbers are [re, im]; a bare number is read as real.
[[nodiscard]] Complex parse_complex(const nlohmann::json& v, const std::string& path);
[[nodiscard]] nlohmann::json complex_to_json(Complex z);

/// Reads a problem document. With require_targets = false a missing
/// "targets" field yields zeros (Gleason files only list sites).
[[nodiscard]] InterpolationProblem parse_problem(const nlohmann::json& doc,
                                                 bool require_targets = true);

[[nodiscard]] nlohmann::json read_json_file(const std::string& path);

[[nodiscard]] InterpolationProblem load_problem_file(const std::string& path,
                                                     bool require_targets = true);

[[nodiscard]] nlohmann::json site_to_json(const Site& site);
[[nodiscard]] nlohmann::json problem_to_json(const InterpolationProblem& problem);

}  // namespace picknorm::cli

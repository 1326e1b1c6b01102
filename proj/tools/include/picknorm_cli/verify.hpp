#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace picknorm::cli {

struct PropertyReport {
  std::string suite;
  std::string property;
  long checked = 0;
  long failures = 0;
  /// Smallest margin by which the property held; negative means violated.
  double worst_slack = std::numeric_limits<double>::infinity();
  std::string note;  ///< first failure, if any

  [[nodiscard]] bool passed() const noexcept { return checked > 0 && failures == 0; }
  void record(double slack, const std::string& what);
  void fail(const std::string& what);
};

struct VerifyReport {
  std::vector<PropertyReport> properties;
  [[nodiscard]] bool passed() const noexcept;
};

[[nodiscard]] const std::vector<std::string>& suite_names();
[[nodiscard]] bool is_suite(const std::string& name);

/// Deterministic given the seed. "all" runs every suite in order.
[[nodiscard]] VerifyReport run_suite(const std::string& name, std::uint64_t seed);

/// One line per property, then a summary line.
[[nodiscard]] std::string format_report(const std::string& name, const VerifyReport& report);

}  // namespace picknorm::cli

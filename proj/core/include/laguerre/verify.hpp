#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace laguerre::verify {

/// One invariant check: the measured deviation against its allowed bound.
/// Counting checks report the number of violations with allowed = 0.
struct Check {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double allowed = 0.0;
  bool passed = false;
  std::string note;
};

/// core, quadrature, transform, operator, analysis.
std::vector<std::string> suite_names();

/// Runs one suite, or every suite for "all". All random inputs come from
/// fixed seeds, so the report is identical across runs and thread counts.
/// Throws DomainError for an unknown suite name.
std::vector<Check> run_suite(std::string_view suite);

/// Fixed-width table with one row per check and a summary line.
std::string format_report(std::span<const Check> checks);

bool all_passed(std::span<const Check> checks);

}  // namespace laguerre::verify

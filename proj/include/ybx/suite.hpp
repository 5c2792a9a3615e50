#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ybx/permutation.hpp"
#include "ybx/scalar.hpp"
#include "ybx/trig_solution.hpp"

namespace ybx {

enum class OutputFormat { json, text };
OutputFormat parse_format(const std::string& s);

/// Check names understood by run_suite, in execution order.
const std::vector<std::string>& suite_check_names();

struct SuiteConfig {
  /// Checks to run; an empty list gives an empty report.
  std::vector<std::string> checks;
  /// Structures to check; the built-in catalog is used when empty and use_catalog is set.
  std::vector<ABDStructure> structures;
  bool use_catalog = true;
  std::size_t catalog_max_n = 4;
  Field field = Field::prime_field(kDefaultPrime);
  Sampling sampling;
  int jet_order = 4;
  /// Corrupt one coefficient of r (and of r̄_0 for the CYBE check).
  bool mutate = false;
};

struct Report {
  std::vector<CheckReport> checks;
  std::size_t structures = 0;
  bool pass() const;
};

/// Every valid structure with 1 <= n <= max_n, ordered by n then enumeration order.
std::vector<ABDStructure> builtin_catalog(std::size_t max_n);

/// Throws std::invalid_argument for unknown check names or a jet order the backend cannot support.
Report run_suite(const SuiteConfig& cfg);

/// JSON is {"checks":[...],"pass":...}; with include_timing each check carries "seconds".
std::string report_emit(const Report& r, OutputFormat format, bool include_timing = true);
std::string check_emit(const CheckReport& c, OutputFormat format, bool include_timing = false);

}  // namespace ybx

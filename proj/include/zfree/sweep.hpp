#pragma once

// Prime-range verification campaigns.
//
// sweep() distributes primes over OpenMP threads; sweep_serial() is the plain
// loop kept as the reference the parallel path is tested against. Both call
// evaluate_prime() per prime and produce identical reports apart from timing.

#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zfree/core.hpp"
#include "zfree/oracle.hpp"

namespace zfree {

/// Primes in [lo, hi] by a segmented sieve. Values of lo below 2 are clamped.
std::vector<Int> primes_in_range(Int lo, Int hi);

struct SweepOptions {
  Int lo = 7;
  Int hi = 1000;
  /// Run the exhaustive oracle for p <= oracle_cutoff (0 disables it).
  Int oracle_cutoff = 47;
  std::uint64_t oracle_node_budget = kDefaultOracleBudget;
  /// DP-verify the constructions for p <= verify_cutoff.
  Int verify_cutoff = std::numeric_limits<Int>::max();
  int workers = 1;
};

struct SweepRecord {
  Int p = 0;
  Int k_formula = 0;
  int delta = 0;
  Int s_triangular = 0;
  bool special = false;
  /// construct_extremal(p) zero-free with the formula cardinality; empty when
  /// p is above the verification cutoff.
  std::optional<bool> extremal_verified;
  std::optional<bool> interval_verified;
  std::optional<Int> oracle_card;
  std::optional<bool> oracle_agrees;
  std::optional<int> classify_row;
  double elapsed_ms = 0.0;
  /// Non-empty when evaluating this prime threw.
  std::string error;
};

struct SweepReport {
  Int lo = 0;
  Int hi = 0;
  std::vector<SweepRecord> records;
  double delta_zero_fraction = 0.0;
  Int special_count = 0;
  /// special_count / sqrt(hi)
  double special_count_over_sqrt = 0.0;

  std::size_t failure_count() const;
};

/// Never throws: failures are captured in SweepRecord::error.
SweepRecord evaluate_prime(Int p, const SweepOptions& options);

/// Requires lo >= 7.
SweepReport sweep(const SweepOptions& options);
SweepReport sweep_serial(const SweepOptions& options);

enum class ReportFormat { csv, json };
ReportFormat parse_report_format(std::string_view name);

std::string format_report(const SweepReport& report, ReportFormat format);
/// Throws std::runtime_error naming the path on I/O failure.
void write_report(const SweepReport& report, ReportFormat format, const std::filesystem::path& path);

/// Blanks the elapsed_ms column of a CSV report so runs can be compared.
std::string mask_elapsed_column(std::string_view csv);

}  // namespace zfree

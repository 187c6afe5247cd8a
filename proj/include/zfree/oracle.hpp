#pragma once

#include <cstdint>

#include "zfree/core.hpp"

namespace zfree {

enum class OracleStatus { complete, inconclusive };

struct OracleResult {
  PrimeModulus p;
  OracleStatus status;
  /// Exact maximum when complete; best cardinality found so far otherwise.
  Int max_card;
  /// Reported up to dilation: the search fixes 1 in the set.
  ResidueSet witness;
  std::uint64_t nodes_explored;
  Int formula_value;
  /// Only true for a complete search that reproduces the formula value.
  bool agrees;
};

inline constexpr std::uint64_t kDefaultOracleBudget = 200'000'000;

/// Exact maximum cardinality of a zero-free subset of Z/pZ by depth-first
/// branch and bound. Exceeding node_budget yields OracleStatus::inconclusive.
OracleResult oracle_max_zero_free(PrimeModulus p, std::uint64_t node_budget = kDefaultOracleBudget);

}  // namespace zfree

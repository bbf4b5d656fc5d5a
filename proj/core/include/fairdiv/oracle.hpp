#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "fairdiv/model.hpp"

namespace fairdiv {

class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  std::uint64_t cap = std::uint64_t{1} << 20;  // max feasible roundings
  /// Worker threads; 0 reads SUBSIDY_FAIRDIV_THREADS (default 1).
  unsigned threads = 0;
};

struct OracleResult {
  IntegralAllocation allocation;
  SubsidyVector subsidies;
  std::uint64_t combinations = 0;
};

/// Number of feasible roundings: the product of |N(e)| over items, or
/// UINT64_MAX on overflow.
[[nodiscard]] std::uint64_t rounding_count(const FractionalAllocation& x);

/// Minimum-total-subsidy rounding of `x` (each fractional item to one of its
/// holders, integral items fixed). Ties go to the lexicographically smallest
/// owner vector. Throws OracleCapExceeded above options.cap.
[[nodiscard]] OracleResult brute_force_rounding(const Instance& inst, const FractionalAllocation& x,
                                                const OracleOptions& options = {});

enum class CostDist { uniform, correlated, ido };
enum class WeightDist { uniform, equal };

[[nodiscard]] const char* to_string(CostDist dist);
/// Throws std::invalid_argument for unknown names.
[[nodiscard]] CostDist parse_cost_dist(const std::string& name);

struct GenParams {
  std::size_t agents = 2;
  std::size_t items = 2;
  Kind kind = Kind::chores;
  CostDist costs = CostDist::uniform;
  WeightDist weights = WeightDist::uniform;
  std::int64_t denominator = 10;  // costs are q/D
  std::uint64_t seed = 0;
};

/// Deterministic for a given parameter set on every platform: draws come
/// straight from mt19937_64 output words. Throws std::invalid_argument for
/// agents == 0 or denominator < 1.
[[nodiscard]] Instance gen_random_instance(const GenParams& params);

/// The six-agent, six-item chores example used throughout the tests.
[[nodiscard]] Instance six_agent_instance();

}  // namespace fairdiv

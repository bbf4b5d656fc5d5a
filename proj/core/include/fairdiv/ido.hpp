#pragma once

#include <vector>

#include "fairdiv/model.hpp"

namespace fairdiv {

/// sigma[i][k] is agent i's k-th most costly item (most valuable for goods),
/// ties broken by the smaller item index.
struct RankProfile {
  std::vector<std::vector<ItemId>> sigma;

  friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

/// True iff every agent's row is non-decreasing in the given item order.
[[nodiscard]] bool is_ido(const Instance& inst);

struct IdoReduction {
  Instance instance;  // canonical ascending order; item names dropped
  RankProfile profile;
};

/// Builds the identical-ordering instance c'_i(e_p) = c_i(sigma_i(m-1-p)),
/// i.e. each row sorted ascending. Agent names and the kind are kept.
[[nodiscard]] IdoReduction reduce_to_ido(const Instance& inst);

/// Maps an integral allocation of the IDO instance back to the original
/// items with the picking sequence: positions are visited from cheapest to
/// most costly (chores) or most to least valuable (goods), and the owner of
/// each position picks her favourite remaining item. Guarantees
/// c_i(X_i) <= c'_i(X'_i) (chores) and v_i(X_i) >= v'_i(X'_i) (goods).
/// Throws std::invalid_argument if `ido_alloc` is incomplete.
[[nodiscard]] IntegralAllocation lift_allocation(const Instance& inst, const RankProfile& profile,
                                                 const IntegralAllocation& ido_alloc);

}  // namespace fairdiv

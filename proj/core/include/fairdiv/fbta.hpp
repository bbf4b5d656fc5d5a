#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairdiv/model.hpp"

namespace fairdiv {

struct TraceEvent {
  ItemId item = 0;
  AgentId agent = 0;
  Rational fraction;
  bool inactivated = false;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct Successor {
  AgentId agent = 0;
  ItemId item = 0;  // e^i, the item the predecessor was eating when it stopped

  friend bool operator==(const Successor&, const Successor&) = default;
};

/// Ordered record of a bid-and-take run.
struct AllocationTrace {
  std::vector<TraceEvent> events;
  std::vector<std::optional<Successor>> successor;  // one slot per agent
  std::vector<std::optional<ItemId>> last_item;     // e^i for inactivated agents

  friend bool operator==(const AllocationTrace&, const AllocationTrace&) = default;
};

struct FbtaResult {
  FractionalAllocation allocation;
  AllocationTrace trace;
};

/// Fractional bid-and-take for chores. The instance must be IDO in ascending
/// order with kind chores and every c_i(M) > 0; otherwise
/// std::invalid_argument is thrown.
[[nodiscard]] FbtaResult fbta_chores(const Instance& inst);

/// Goods counterpart: argmax selection, and once a single agent is still
/// active it receives everything that is left.
[[nodiscard]] FbtaResult fbta_goods(const Instance& inst);

/// Dispatches on inst.kind.
[[nodiscard]] FbtaResult run_fbta(const Instance& inst);

struct FractionalItem {
  ItemId item = 0;
  std::vector<AgentId> sharers;

  friend bool operator==(const FractionalItem&, const FractionalItem&) = default;
};

/// Items with at least two holders, sharers in agent-index order.
[[nodiscard]] std::vector<FractionalItem> fractional_items(const FractionalAllocation& alloc);
/// Same, but sharers listed in the order they took the item.
[[nodiscard]] std::vector<FractionalItem> fractional_items(const FractionalAllocation& alloc,
                                                           const AllocationTrace& trace);

/// One event per line: "item agent fraction inactivated", 0-based indices.
[[nodiscard]] std::string export_trace(const AllocationTrace& trace);

}  // namespace fairdiv

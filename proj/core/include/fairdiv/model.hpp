#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fairdiv/rational.hpp"

namespace fairdiv {

using AgentId = std::size_t;
using ItemId = std::size_t;

enum class Kind { chores, goods };

[[nodiscard]] std::string_view to_string(Kind kind);
/// Accepts "chores" or "goods"; throws std::invalid_argument otherwise.
[[nodiscard]] Kind parse_kind(std::string_view text);

/// A weighted fair-division instance with additive costs (chores) or
/// values (goods). `costs[i][e]` is agent i's cost (or value) for item e.
struct Instance {
  Kind kind = Kind::chores;
  std::vector<Rational> weights;
  std::vector<std::vector<Rational>> costs;
  std::vector<std::string> agent_names;  // optional, empty or one per agent
  std::vector<std::string> item_names;   // optional, empty or one per item

  [[nodiscard]] std::size_t agents() const { return weights.size(); }
  [[nodiscard]] std::size_t items() const { return costs.empty() ? 0 : costs.front().size(); }
  [[nodiscard]] const Rational& cost(AgentId i, ItemId e) const { return costs[i][e]; }

  /// c_i(M) (or v_i(M)).
  [[nodiscard]] Rational total_cost(AgentId i) const;
  [[nodiscard]] std::string agent_label(AgentId i) const;
  [[nodiscard]] std::string item_label(ItemId e) const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// x_i(e) for every agent and item.
class FractionalAllocation {
 public:
  FractionalAllocation() = default;
  FractionalAllocation(std::size_t agents, std::size_t items);

  [[nodiscard]] std::size_t agents() const { return share_.size(); }
  [[nodiscard]] std::size_t items() const { return items_; }
  [[nodiscard]] const Rational& at(AgentId i, ItemId e) const { return share_[i][e]; }
  Rational& at(AgentId i, ItemId e) { return share_[i][e]; }

  /// Every column sums to exactly one.
  [[nodiscard]] bool is_complete() const;
  /// Agents holding a positive fraction of `e`, in index order.
  [[nodiscard]] std::vector<AgentId> holders(ItemId e) const;

  friend bool operator==(const FractionalAllocation&, const FractionalAllocation&) = default;

 private:
  std::vector<std::vector<Rational>> share_;
  std::size_t items_ = 0;
};

/// owner[e] is the agent receiving item e; kUnassigned marks a gap.
struct IntegralAllocation {
  static constexpr AgentId kUnassigned = static_cast<AgentId>(-1);

  std::vector<AgentId> owner;

  [[nodiscard]] std::size_t items() const { return owner.size(); }
  [[nodiscard]] bool is_complete(std::size_t agents) const;
  [[nodiscard]] std::vector<ItemId> bundle(AgentId i) const;

  friend bool operator==(const IntegralAllocation&, const IntegralAllocation&) = default;
};

struct SubsidyVector {
  std::vector<Rational> per_agent;
  Rational total;

  friend bool operator==(const SubsidyVector&, const SubsidyVector&) = default;
};

/// WPROP_i = w_i * c_i(M). Throws std::out_of_range for a bad index.
[[nodiscard]] Rational wprop_share(const Instance& inst, AgentId i);

/// c_i(X_i) for an integral bundle.
[[nodiscard]] Rational bundle_cost(const Instance& inst, const IntegralAllocation& alloc, AgentId i);
/// c_i(x_i) for a fractional bundle.
[[nodiscard]] Rational bundle_cost(const Instance& inst, const FractionalAllocation& alloc, AgentId i);

/// Minimum subsidies making `alloc` weighted-proportional:
/// chores s_i = max(c_i(X_i) - WPROP_i, 0), goods s_i = max(WPROP_i - v_i(X_i), 0).
/// Throws std::invalid_argument if the allocation is not a complete partition.
[[nodiscard]] SubsidyVector compute_subsidies(const Instance& inst, const IntegralAllocation& alloc);

/// True iff (alloc, subsidies) satisfies the WPROPS inequality for every agent.
[[nodiscard]] bool satisfies_wprops(const Instance& inst, const IntegralAllocation& alloc,
                                    const std::vector<Rational>& subsidies);

struct ValidationReport {
  std::vector<std::string> violations;
  /// Agents with c_i(M) = 0 (v_i(M) = 0 for goods).
  std::vector<AgentId> degenerate_agents;

  [[nodiscard]] bool ok() const { return violations.empty(); }
};

[[nodiscard]] ValidationReport validate_instance(const Instance& inst);

/// Thrown when an instance or allocation document cannot be read.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line = 0)
      : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads the JSON instance format:
///   {"kind": "chores"|"goods", "weights": [...], "costs": [[...], ...],
///    "agent_names": [...], "item_names": [...]}
/// Numbers are strings ("p/q", integers, or decimals); plain JSON numbers
/// are accepted when they are integers or written as decimals.
/// Structural checks only; use validate_instance for the model invariants.
[[nodiscard]] Instance parse_instance(std::string_view text);

/// Canonical rendering: fixed key order, lowest-terms rationals, one cost row
/// per line, LF line endings, trailing newline.
[[nodiscard]] std::string serialize_instance(const Instance& inst);

[[nodiscard]] Instance load_instance(const std::string& path);
void save_text(const std::string& path, std::string_view text);
[[nodiscard]] std::string read_text(const std::string& path);

}  // namespace fairdiv

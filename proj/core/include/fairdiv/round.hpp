#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairdiv/graph.hpp"
#include "fairdiv/model.hpp"
#include "fairdiv/split.hpp"

namespace fairdiv {

/// item -> receiving agent, for the fractional items of one component.
using Assignment = std::vector<std::pair<ItemId, AgentId>>;

/// Per-agent change c_i(rounded) - c_i(fractional) over the assigned items,
/// summed as positive parts: sum max(D_i, 0) for chores, sum max(-D_i, 0)
/// for goods. Throws std::invalid_argument if an item goes to an agent
/// holding none of it.
[[nodiscard]] Rational local_subsidy(const Instance& inst, const FractionalAllocation& x,
                                     const Assignment& assignment);

enum class PairScheme { LL, RR, LR, RL };
[[nodiscard]] const char* to_string(PairScheme scheme);

struct PairDetails {
  ItemId e1 = 0;  // smaller item index, shared by `left` and `middle`
  ItemId e2 = 0;  // shared by `middle` and `right`
  AgentId left = 0;
  AgentId middle = 0;
  AgentId right = 0;
  std::array<Rational, 4> scheme_subsidy;  // indexed by PairScheme
  PairScheme chosen = PairScheme::LL;
  /// Chores: a2/a1 with a1 >= a2 after orienting by the middle agent's
  /// costs (1 when both are zero). Goods: v_mid(e1)/v_mid(e2), unset when
  /// the denominator is zero.
  std::optional<Rational> alpha;
  /// Chores only: the closed-form per-scheme upper bounds, indexed by
  /// PairScheme in the labelling above.
  std::optional<std::array<Rational, 4>> table_bound;
};

struct EapDetails {
  std::size_t k = 0;
  std::size_t h = 0;
  std::string case_label;
  AgentId e0_owner = 0;
  std::vector<Rational> placement_subsidy;  // one per path agent, path order
};

struct ComponentRounding {
  Component component;
  Assignment assignment;
  Rational local_subsidy;
  Rational bound;
  std::string scheme;
  std::optional<PairDetails> pair;
  std::optional<EapDetails> eap;
};

/// Threshold rounding of one two-sharer item; ties go to the smaller index.
[[nodiscard]] ComponentRounding round_single_edge(const Instance& inst, const FractionalAllocation& x,
                                                  const Component& component);

/// Closed-form chores bounds for LL, RR, LR, RL given y1 = x_mid(e1),
/// y2 = x_mid(e2) and alpha in [0, 1], in that labelling.
[[nodiscard]] std::array<Rational, 4> pair_table_bounds(const Rational& y1, const Rational& y2,
                                                        const Rational& alpha);

/// Exact minimum over LL, RR, LR, RL; ties go to the lexicographically
/// smallest (owner(e1), owner(e2)). Bound 2/3.
[[nodiscard]] ComponentRounding round_pair(const Instance& inst, const FractionalAllocation& x,
                                           const Component& component);

/// Case label for an expanded atom-path with the given k and h.
[[nodiscard]] std::string eap_case_label(std::size_t k, std::size_t h);

/// For every placement of e0 on a path agent, each attached edge is rounded
/// by its own exact minimum (the options touch disjoint agent pairs); the
/// best placement wins, ties to the smaller agent index. Bound (k+h)/3.
[[nodiscard]] ComponentRounding round_expanded_atom_path(const Instance& inst, const FractionalAllocation& x,
                                                         const ExpandedAtomPath& eap);

/// Biased threshold rounding of the attached edge at path position t while
/// e0 goes elsewhere: the decision, the exact subsidy it adds for the path
/// agent and the attached agent, and the closed-form bound for that step.
struct BiasedOutcome {
  bool to_path_agent = false;
  Rational incurred;
  Rational bound;
};
[[nodiscard]] BiasedOutcome biased_threshold_rounding(const Instance& inst, const FractionalAllocation& x,
                                                      const ExpandedAtomPath& eap, std::size_t t);

struct TreeRecord {
  AgentId root = 0;
  std::size_t size = 0;
  bool has_atom_path = false;
  bool nested = false;  // good subtree re-split inside a larger tree
  Rational bound;
  Rational local_sum;
  Rational component_bound_sum;
};

/// z/3 with an atom-path or even z, z/3 + 1/6 otherwise.
[[nodiscard]] Rational tree_bound(std::size_t size, bool has_atom_path);

struct TreeRounding {
  std::vector<ComponentRounding> components;
  std::vector<TreeRecord> records;  // the tree first, then nested subtrees
};

[[nodiscard]] TreeRounding round_tree(const Instance& inst, const FractionalAllocation& x, const Tree& tree);

struct BaselineRounding {
  IntegralAllocation allocation;
  SubsidyVector subsidies;
  std::vector<ComponentRounding> items;  // one shared_item entry per fractional item
};

/// Every item goes to its largest holder, ties to the smaller index.
[[nodiscard]] BaselineRounding round_baseline(const Instance& inst, const FractionalAllocation& x);

}  // namespace fairdiv

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairdiv/fbta.hpp"
#include "fairdiv/graph.hpp"
#include "fairdiv/ido.hpp"
#include "fairdiv/model.hpp"
#include "fairdiv/round.hpp"

namespace fairdiv {

/// Machine-checkable record of one pipeline run. The chain
///   final_total <= ido_total <= local_sum <= bound_sum <= global_bound
/// holds when the run is correct; `holds()` checks it with every component
/// and tree bound.
struct RoundingCertificate {
  Kind kind = Kind::chores;
  std::size_t agents = 0;
  std::string method;  // "tree-splitting", "baseline", or "degenerate"
  std::vector<ComponentRounding> components;
  std::vector<TreeRecord> trees;
  std::size_t edge_count = 0;
  std::size_t shattered_items = 0;
  Rational final_total;
  Rational ido_total;
  Rational local_sum;
  Rational bound_sum;
  Rational global_bound;
  /// Chores tree-splitting only: (n-1)/3 when the forest has fewer than
  /// n-1 edges or a shattered item.
  std::optional<Rational> strong_bound;

  [[nodiscard]] bool holds() const;
  /// Human-readable reasons `holds()` fails; empty when it holds.
  [[nodiscard]] std::vector<std::string> failures() const;
};

struct PipelineOptions {
  bool baseline = false;  // argmax rounding of every fractional item instead of tree splitting
};

struct PipelineResult {
  IntegralAllocation allocation;
  SubsidyVector subsidies;
  RoundingCertificate certificate;

  /// Original indices of the agents that took part in bid-and-take. The
  /// fields below are expressed over these agents (sub-index t is agent
  /// fbta_agents[t]); they are empty when nobody took part.
  std::vector<AgentId> fbta_agents;
  Instance ido_instance;
  RankProfile profile;
  FbtaResult fbta;
  ItemSharingGraph graph;
  IntegralAllocation ido_allocation;
  SubsidyVector ido_subsidies;
};

/// Full pipeline: IDO reduction, bid-and-take, item-sharing forest, tree
/// splitting and rounding, lifting, and subsidies. Throws
/// std::invalid_argument for an invalid instance.
[[nodiscard]] PipelineResult allocate_with_subsidy(const Instance& inst, const PipelineOptions& options = {});

/// Structured-text (JSON) certificate with exact "p/q" values.
[[nodiscard]] std::string export_certificate(const RoundingCertificate& cert);

/// Allocation document: {"kind", "owner": [agent per item], "subsidies",
/// "total_subsidy"}; agents are 0-based. `decimal_digits` adds a decimal
/// view of every number.
[[nodiscard]] std::string serialize_allocation(const Instance& inst, const IntegralAllocation& alloc,
                                               const SubsidyVector& subsidies,
                                               std::optional<int> decimal_digits = std::nullopt);

struct AllocationDocument {
  IntegralAllocation allocation;  // null owners become kUnassigned
  std::optional<std::vector<Rational>> subsidies;
};

/// Throws ParseError on malformed documents.
[[nodiscard]] AllocationDocument parse_allocation(std::string_view text);

}  // namespace fairdiv

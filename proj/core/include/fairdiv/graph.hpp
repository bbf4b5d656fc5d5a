#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairdiv/fbta.hpp"
#include "fairdiv/model.hpp"

namespace fairdiv {

/// Directed edge i -> successor(i) labelled with the shared item e^i.
/// Out-degree is at most one, so `from` identifies the edge.
struct SharingEdge {
  AgentId from = 0;
  AgentId to = 0;
  ItemId item = 0;

  friend bool operator==(const SharingEdge&, const SharingEdge&) = default;
  friend auto operator<=>(const SharingEdge&, const SharingEdge&) = default;
};

class ItemSharingGraph {
 public:
  ItemSharingGraph() = default;
  /// Throws std::logic_error if the edges do not form a forest with
  /// out-degree at most one.
  ItemSharingGraph(std::size_t agents, std::vector<SharingEdge> edges);

  [[nodiscard]] std::size_t agents() const { return out_.size(); }
  /// Sorted by source agent.
  [[nodiscard]] const std::vector<SharingEdge>& edges() const { return edges_; }
  [[nodiscard]] std::optional<SharingEdge> out_edge(AgentId i) const;
  /// Sources of the edges entering `j`, in index order.
  [[nodiscard]] const std::vector<AgentId>& children(AgentId j) const { return in_[j]; }
  [[nodiscard]] AgentId root_of(AgentId i) const;

 private:
  std::vector<SharingEdge> edges_;
  std::vector<std::optional<std::size_t>> out_;
  std::vector<std::vector<AgentId>> in_;
};

[[nodiscard]] ItemSharingGraph build_graph(const AllocationTrace& trace);

/// A rooted tree given by its edge set; nodes are the root plus every edge
/// endpoint. Size is the edge count.
struct Tree {
  AgentId root = 0;
  std::vector<SharingEdge> edges;  // sorted by source agent

  [[nodiscard]] std::size_t size() const { return edges.size(); }
  [[nodiscard]] std::vector<AgentId> nodes() const;

  friend bool operator==(const Tree&, const Tree&) = default;
};

/// Connected components, isolated agents included as size-0 trees, ordered
/// by root.
[[nodiscard]] std::vector<Tree> trees(const ItemSharingGraph& g);

/// Maximal same-item path; agents[t + 1] is the successor of agents[t].
struct AtomPath {
  ItemId item = 0;
  std::vector<AgentId> agents;

  [[nodiscard]] std::size_t k() const { return agents.empty() ? 0 : agents.size() - 1; }

  friend bool operator==(const AtomPath&, const AtomPath&) = default;
};

/// One path per item carried by two or more edges of `edges`, ordered by
/// item. Throws std::logic_error if same-item edges do not chain.
[[nodiscard]] std::vector<AtomPath> find_atom_paths(const std::vector<SharingEdge>& edges);
[[nodiscard]] inline std::vector<AtomPath> find_atom_paths(const Tree& tree) {
  return find_atom_paths(tree.edges);
}

/// Graphviz rendering; edges of shattered items are drawn red and bold.
[[nodiscard]] std::string to_dot(const ItemSharingGraph& g, const Instance* labels = nullptr);

}  // namespace fairdiv

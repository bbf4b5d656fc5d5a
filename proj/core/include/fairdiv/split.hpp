#pragma once

#include <optional>
#include <vector>

#include "fairdiv/graph.hpp"

namespace fairdiv {

/// An atom-path plus at most one attached edge per path agent.
/// attached[t] belongs to base.agents[t].
struct ExpandedAtomPath {
  AtomPath base;
  std::vector<std::optional<SharingEdge>> attached;

  [[nodiscard]] std::size_t k() const { return base.k(); }
  [[nodiscard]] std::size_t h() const;
  /// Path edges followed by the attached edges.
  [[nodiscard]] std::vector<SharingEdge> edges() const;

  friend bool operator==(const ExpandedAtomPath&, const ExpandedAtomPath&) = default;
};

enum class ComponentKind { single_edge, pair, expanded_atom_path, recursive_tree, shared_item };

[[nodiscard]] const char* to_string(ComponentKind kind);

struct Component {
  ComponentKind kind = ComponentKind::single_edge;
  std::vector<SharingEdge> edges;
  /// Pairs only: the agent sharing both items.
  AgentId middle = 0;
  std::optional<ExpandedAtomPath> eap;

  friend bool operator==(const Component&, const Component&) = default;
};

/// The unique node of a connected edge set without an outgoing edge.
/// Throws std::invalid_argument if the set is empty or disconnected.
[[nodiscard]] AgentId root_of(const std::vector<SharingEdge>& edges);

/// Repeatedly takes the deepest node i (ties: smallest index) with parent j
/// and pairs e^i with a sibling edge (smallest index), or with e^j, or leaves
/// it alone when j is the root without other children. Returns floor(z/2)
/// pairs and z mod 2 single edges. Throws std::invalid_argument when the
/// edges contain an atom-path.
[[nodiscard]] std::vector<Component> simple_split(const std::vector<SharingEdge>& edges);

struct AtomPathSplit {
  ExpandedAtomPath eap;
  /// Each either contains an atom-path or has even size.
  std::vector<std::vector<SharingEdge>> good_subtrees;
};

/// Removes the atom-path of the smallest item; odd atom-path-free leftovers
/// donate one edge at their path agent. Throws std::invalid_argument when
/// the edges contain no atom-path.
[[nodiscard]] AtomPathSplit atom_path_split(const std::vector<SharingEdge>& edges);

/// Edge (i, j) incident to `agent` such that the j side has even size after
/// removing it; smallest item index among valid edges. Throws
/// std::invalid_argument when `component` is even, contains an atom-path,
/// or does not touch `agent`.
[[nodiscard]] SharingEdge choose_attachment(const std::vector<SharingEdge>& component, AgentId agent);

}  // namespace fairdiv

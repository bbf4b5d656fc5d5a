#include "fairdiv/split.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fairdiv {

namespace {

using EdgeList = std::vector<SharingEdge>;

// Edges reachable from `start` without crossing `banned` (an edge source).
EdgeList reachable(const EdgeList& edges, AgentId start, std::optional<AgentId> banned = std::nullopt) {
  std::set<AgentId> seen{start};
  std::vector<AgentId> stack{start};
  std::set<AgentId> taken;
  EdgeList out;
  while (!stack.empty()) {
    const AgentId cur = stack.back();
    stack.pop_back();
    for (const auto& e : edges) {
      if (banned && e.from == *banned) continue;
      if (e.from != cur && e.to != cur) continue;
      if (!taken.insert(e.from).second) continue;
      out.push_back(e);
      const AgentId other = e.from == cur ? e.to : e.from;
      if (seen.insert(other).second) stack.push_back(other);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<AgentId> node_set(const EdgeList& edges) {
  std::set<AgentId> out;
  for (const auto& e : edges) {
    out.insert(e.from);
    out.insert(e.to);
  }
  return out;
}

}  // namespace

std::size_t ExpandedAtomPath::h() const {
  return static_cast<std::size_t>(std::count_if(attached.begin(), attached.end(),
                                                [](const auto& a) { return a.has_value(); }));
}

std::vector<SharingEdge> ExpandedAtomPath::edges() const {
  std::vector<SharingEdge> out;
  for (std::size_t t = 0; t + 1 < base.agents.size(); ++t) {
    out.push_back({base.agents[t], base.agents[t + 1], base.item});
  }
  for (const auto& a : attached) {
    if (a) out.push_back(*a);
  }
  return out;
}

const char* to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::single_edge: return "single_edge";
    case ComponentKind::pair: return "pair";
    case ComponentKind::expanded_atom_path: return "expanded_atom_path";
    case ComponentKind::recursive_tree: return "recursive_tree";
    case ComponentKind::shared_item: return "shared_item";
  }
  return "unknown";
}

AgentId root_of(const std::vector<SharingEdge>& edges) {
  if (edges.empty()) throw std::invalid_argument("root_of needs a non-empty edge set");
  std::set<AgentId> sources;
  for (const auto& e : edges) sources.insert(e.from);
  std::optional<AgentId> root;
  for (AgentId v : node_set(edges)) {
    if (sources.count(v)) continue;
    if (root) throw std::invalid_argument("edge set is not a single tree");
    root = v;
  }
  if (!root || reachable(edges, *root).size() != edges.size()) {
    throw std::invalid_argument("edge set is not a single tree");
  }
  return *root;
}

std::vector<Component> simple_split(const std::vector<SharingEdge>& edges) {
  if (!find_atom_paths(edges).empty()) throw std::invalid_argument("simple_split on a tree with an atom-path");
  std::vector<Component> out;
  if (edges.empty()) return out;

  std::map<AgentId, SharingEdge> out_edge;
  for (const auto& e : edges) out_edge[e.from] = e;
  const AgentId root = root_of(edges);

  auto depth = [&](AgentId v) {
    std::size_t d = 0;
    for (auto it = out_edge.find(v); it != out_edge.end(); it = out_edge.find(it->second.to)) ++d;
    return d;
  };
  auto children = [&](AgentId v) {
    std::vector<AgentId> kids;
    for (const auto& [from, e] : out_edge) {
      if (e.to == v) kids.push_back(from);
    }
    return kids;  // map order keeps them sorted
  };

  while (!out_edge.empty()) {
    AgentId deepest = 0;
    std::size_t best = 0;
    for (const auto& [from, e] : out_edge) {
      const std::size_t d = depth(from);
      if (d > best) {
        best = d;
        deepest = from;
      }
    }
    const SharingEdge ei = out_edge.at(deepest);
    const AgentId j = ei.to;
    std::optional<AgentId> sibling;
    for (AgentId c : children(j)) {
      if (c != deepest) {
        sibling = c;
        break;
      }
    }
    Component comp;
    if (sibling) {
      comp = {ComponentKind::pair, {ei, out_edge.at(*sibling)}, j, std::nullopt};
      out_edge.erase(*sibling);
    } else if (j == root) {
      comp = {ComponentKind::single_edge, {ei}, j, std::nullopt};
    } else {
      comp = {ComponentKind::pair, {ei, out_edge.at(j)}, j, std::nullopt};
      out_edge.erase(j);
    }
    out_edge.erase(deepest);
    std::sort(comp.edges.begin(), comp.edges.end());
    out.push_back(std::move(comp));
  }
  return out;
}

SharingEdge choose_attachment(const std::vector<SharingEdge>& component, AgentId agent) {
  if (component.size() % 2 == 0) throw std::invalid_argument("choose_attachment needs an odd-size component");
  if (!find_atom_paths(component).empty()) {
    throw std::invalid_argument("choose_attachment on a component with an atom-path");
  }
  std::optional<SharingEdge> best;
  for (const auto& e : component) {
    if (e.from != agent && e.to != agent) continue;
    const AgentId other = e.from == agent ? e.to : e.from;
    if (reachable(component, other, e.from).size() % 2 != 0) continue;
    if (!best || e.item < best->item) best = e;
  }
  if (!best) throw std::invalid_argument("component does not touch agent " + std::to_string(agent));
  return *best;
}

AtomPathSplit atom_path_split(const std::vector<SharingEdge>& edges) {
  const auto paths = find_atom_paths(edges);
  if (paths.empty()) throw std::invalid_argument("atom_path_split on a tree without an atom-path");
  const AtomPath& path = paths.front();  // smallest item

  EdgeList rest;
  for (const auto& e : edges) {
    if (e.item != path.item) rest.push_back(e);
  }

  AtomPathSplit out;
  out.eap.base = path;
  out.eap.attached.assign(path.agents.size(), std::nullopt);
  for (std::size_t t = 0; t < path.agents.size(); ++t) {
    const AgentId a = path.agents[t];
    EdgeList comp = reachable(rest, a);
    if (comp.empty()) continue;
    if (comp.size() % 2 == 0 || !find_atom_paths(comp).empty()) {
      out.good_subtrees.push_back(std::move(comp));
      continue;
    }
    const SharingEdge donated = choose_attachment(comp, a);
    out.eap.attached[t] = donated;
    const AgentId other = donated.from == a ? donated.to : donated.from;
    for (AgentId side : {other, a}) {
      EdgeList piece = reachable(comp, side, donated.from);
      if (!piece.empty()) out.good_subtrees.push_back(std::move(piece));
    }
  }
  return out;
}

}  // namespace fairdiv

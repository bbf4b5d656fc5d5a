#include "fairdiv/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fairdiv {

ItemSharingGraph::ItemSharingGraph(std::size_t agents, std::vector<SharingEdge> edges)
    : edges_(std::move(edges)), out_(agents), in_(agents) {
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto& e = edges_[k];
    if (e.from >= agents || e.to >= agents || e.from == e.to) {
      throw std::logic_error("sharing edge with an invalid endpoint");
    }
    if (out_[e.from]) throw std::logic_error("agent " + std::to_string(e.from) + " has two outgoing edges");
    out_[e.from] = k;
    in_[e.to].push_back(e.from);
  }
  for (auto& list : in_) std::sort(list.begin(), list.end());

  // Following out-edges must never revisit a node.
  for (AgentId start = 0; start < agents; ++start) {
    AgentId cur = start;
    for (std::size_t steps = 0; out_[cur]; ++steps) {
      if (steps > agents) throw std::logic_error("item-sharing graph contains a cycle");
      cur = edges_[*out_[cur]].to;
    }
  }
}

std::optional<SharingEdge> ItemSharingGraph::out_edge(AgentId i) const {
  if (!out_[i]) return std::nullopt;
  return edges_[*out_[i]];
}

AgentId ItemSharingGraph::root_of(AgentId i) const {
  while (out_[i]) i = edges_[*out_[i]].to;
  return i;
}

ItemSharingGraph build_graph(const AllocationTrace& trace) {
  std::vector<SharingEdge> edges;
  for (AgentId i = 0; i < trace.successor.size(); ++i) {
    if (const auto& s = trace.successor[i]) edges.push_back({i, s->agent, s->item});
  }
  return ItemSharingGraph(trace.successor.size(), std::move(edges));
}

std::vector<AgentId> Tree::nodes() const {
  std::set<AgentId> all{root};
  for (const auto& e : edges) {
    all.insert(e.from);
    all.insert(e.to);
  }
  return {all.begin(), all.end()};
}

std::vector<Tree> trees(const ItemSharingGraph& g) {
  std::vector<Tree> out;
  std::map<AgentId, std::size_t> index_of_root;
  for (AgentId i = 0; i < g.agents(); ++i) {
    if (!g.out_edge(i)) {
      index_of_root[i] = out.size();
      out.push_back(Tree{i, {}});
    }
  }
  for (const auto& e : g.edges()) out[index_of_root.at(g.root_of(e.from))].edges.push_back(e);
  return out;
}

std::vector<AtomPath> find_atom_paths(const std::vector<SharingEdge>& edges) {
  std::map<ItemId, std::vector<SharingEdge>> by_item;
  for (const auto& e : edges) by_item[e.item].push_back(e);

  std::vector<AtomPath> out;
  for (const auto& [item, group] : by_item) {
    if (group.size() < 2) continue;
    std::map<AgentId, AgentId> next;
    std::set<AgentId> heads;
    for (const auto& e : group) {
      next[e.from] = e.to;
      heads.insert(e.to);
    }
    std::vector<AgentId> starts;
    for (const auto& e : group) {
      if (!heads.count(e.from)) starts.push_back(e.from);
    }
    if (starts.size() != 1) throw std::logic_error("edges of item " + std::to_string(item) + " do not form a path");
    AtomPath path{item, {starts.front()}};
    for (auto it = next.find(starts.front()); it != next.end(); it = next.find(it->second)) {
      path.agents.push_back(it->second);
    }
    if (path.k() != group.size()) {
      throw std::logic_error("edges of item " + std::to_string(item) + " do not form a path");
    }
    out.push_back(std::move(path));
  }
  return out;
}

std::string to_dot(const ItemSharingGraph& g, const Instance* labels) {
  std::map<ItemId, int> multiplicity;
  for (const auto& e : g.edges()) ++multiplicity[e.item];
  auto escape = [](std::string text) {
    std::string out;
    for (char ch : text) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out;
  };
  auto agent = [&](AgentId i) { return escape(labels ? labels->agent_label(i) : "agent" + std::to_string(i + 1)); };
  auto item = [&](ItemId e) { return escape(labels ? labels->item_label(e) : "e" + std::to_string(e + 1)); };

  std::ostringstream out;
  out << "digraph item_sharing {\n";
  for (AgentId i = 0; i < g.agents(); ++i) out << "  a" << i << " [label=\"" << agent(i) << "\"];\n";
  for (const auto& e : g.edges()) {
    out << "  a" << e.from << " -> a" << e.to << " [label=\"" << item(e.item) << "\"";
    if (multiplicity[e.item] > 1) out << ", color=red, style=bold";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace fairdiv

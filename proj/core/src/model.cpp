#include "fairdiv/model.hpp"

#include <sstream>
#include <stdexcept>

namespace fairdiv {

std::string_view to_string(Kind kind) { return kind == Kind::chores ? "chores" : "goods"; }

Kind parse_kind(std::string_view text) {
  if (text == "chores") return Kind::chores;
  if (text == "goods") return Kind::goods;
  throw std::invalid_argument("kind must be \"chores\" or \"goods\", got \"" + std::string(text) + "\"");
}

Rational Instance::total_cost(AgentId i) const {
  Rational sum;
  for (const auto& c : costs.at(i)) sum += c;
  return sum;
}

std::string Instance::agent_label(AgentId i) const {
  if (i < agent_names.size()) return agent_names[i];
  return "agent" + std::to_string(i + 1);
}

std::string Instance::item_label(ItemId e) const {
  if (e < item_names.size()) return item_names[e];
  return "e" + std::to_string(e + 1);
}

FractionalAllocation::FractionalAllocation(std::size_t agents, std::size_t items)
    : share_(agents, std::vector<Rational>(items)), items_(items) {}

bool FractionalAllocation::is_complete() const {
  for (ItemId e = 0; e < items_; ++e) {
    Rational column;
    for (const auto& row : share_) {
      if (row[e].sign() < 0 || row[e] > Rational(1)) return false;
      column += row[e];
    }
    if (column != Rational(1)) return false;
  }
  return true;
}

std::vector<AgentId> FractionalAllocation::holders(ItemId e) const {
  std::vector<AgentId> out;
  for (AgentId i = 0; i < share_.size(); ++i) {
    if (share_[i][e].sign() > 0) out.push_back(i);
  }
  return out;
}

bool IntegralAllocation::is_complete(std::size_t agents) const {
  for (AgentId a : owner) {
    if (a == kUnassigned || a >= agents) return false;
  }
  return true;
}

std::vector<ItemId> IntegralAllocation::bundle(AgentId i) const {
  std::vector<ItemId> out;
  for (ItemId e = 0; e < owner.size(); ++e) {
    if (owner[e] == i) out.push_back(e);
  }
  return out;
}

Rational wprop_share(const Instance& inst, AgentId i) {
  if (i >= inst.agents()) {
    throw std::out_of_range("agent index " + std::to_string(i) + " out of range (n = " +
                            std::to_string(inst.agents()) + ")");
  }
  return inst.weights[i] * inst.total_cost(i);
}

Rational bundle_cost(const Instance& inst, const IntegralAllocation& alloc, AgentId i) {
  Rational sum;
  for (ItemId e = 0; e < alloc.owner.size(); ++e) {
    if (alloc.owner[e] == i) sum += inst.cost(i, e);
  }
  return sum;
}

Rational bundle_cost(const Instance& inst, const FractionalAllocation& alloc, AgentId i) {
  Rational sum;
  for (ItemId e = 0; e < alloc.items(); ++e) {
    if (!alloc.at(i, e).is_zero()) sum += alloc.at(i, e) * inst.cost(i, e);
  }
  return sum;
}

SubsidyVector compute_subsidies(const Instance& inst, const IntegralAllocation& alloc) {
  if (alloc.items() != inst.items()) {
    throw std::invalid_argument("allocation covers " + std::to_string(alloc.items()) +
                                " items, instance has " + std::to_string(inst.items()));
  }
  if (!alloc.is_complete(inst.agents())) {
    throw std::invalid_argument("allocation leaves an item unassigned or names an unknown agent");
  }
  SubsidyVector out;
  out.per_agent.reserve(inst.agents());
  for (AgentId i = 0; i < inst.agents(); ++i) {
    const Rational share = wprop_share(inst, i);
    const Rational held = bundle_cost(inst, alloc, i);
    Rational s = inst.kind == Kind::chores ? positive_part(held - share) : positive_part(share - held);
    out.total += s;
    out.per_agent.push_back(std::move(s));
  }
  return out;
}

bool satisfies_wprops(const Instance& inst, const IntegralAllocation& alloc,
                      const std::vector<Rational>& subsidies) {
  if (subsidies.size() != inst.agents() || !alloc.is_complete(inst.agents())) return false;
  for (AgentId i = 0; i < inst.agents(); ++i) {
    if (subsidies[i].sign() < 0) return false;
    const Rational share = wprop_share(inst, i);
    const Rational held = bundle_cost(inst, alloc, i);
    const bool ok = inst.kind == Kind::chores ? held - subsidies[i] <= share
                                              : held + subsidies[i] >= share;
    if (!ok) return false;
  }
  return true;
}

ValidationReport validate_instance(const Instance& inst) {
  ValidationReport report;
  const std::size_t n = inst.agents();
  if (n == 0) report.violations.emplace_back("instance has no agents");
  if (inst.costs.size() != n) {
    report.violations.push_back("costs has " + std::to_string(inst.costs.size()) + " rows for " +
                                std::to_string(n) + " agents");
  }
  const std::size_t m = inst.items();
  for (std::size_t i = 0; i < inst.costs.size(); ++i) {
    if (inst.costs[i].size() != m) {
      report.violations.push_back("cost row " + std::to_string(i) + " has " +
                                  std::to_string(inst.costs[i].size()) + " entries, expected " +
                                  std::to_string(m));
    }
  }
  if (!inst.agent_names.empty() && inst.agent_names.size() != n) {
    report.violations.emplace_back("agent_names length does not match the number of agents");
  }
  if (!inst.item_names.empty() && inst.item_names.size() != m) {
    report.violations.emplace_back("item_names length does not match the number of items");
  }

  Rational weight_sum;
  for (std::size_t i = 0; i < n; ++i) {
    if (inst.weights[i].sign() <= 0) {
      report.violations.push_back("weight of agent " + std::to_string(i) + " is not positive");
    }
    weight_sum += inst.weights[i];
  }
  if (n > 0 && weight_sum != Rational(1)) {
    report.violations.push_back("weights sum to " + weight_sum.str() + ", not 1");
  }

  if (!report.ok()) return report;  // cost checks below need a rectangular matrix

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t e = 0; e < m; ++e) {
      const Rational& c = inst.costs[i][e];
      if (c.sign() < 0) {
        report.violations.push_back("cost of item " + std::to_string(e) + " for agent " +
                                    std::to_string(i) + " is negative");
      } else if (c > Rational(1)) {
        report.violations.push_back("cost of item " + std::to_string(e) + " for agent " +
                                    std::to_string(i) + " exceeds 1 (" + c.str() + ")");
      }
    }
    if (inst.total_cost(i).is_zero()) report.degenerate_agents.push_back(i);
  }
  return report;
}

}  // namespace fairdiv

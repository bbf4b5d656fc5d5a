#include "fairdiv/round.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fairdiv {

namespace {

// Per-agent rounding change over the assigned items.
std::map<AgentId, Rational> deltas(const Instance& inst, const FractionalAllocation& x,
                                   const Assignment& assignment) {
  std::map<AgentId, Rational> delta;
  for (const auto& [e, owner] : assignment) {
    if (owner >= x.agents() || x.at(owner, e).sign() <= 0) {
      throw std::invalid_argument("item " + std::to_string(e) + " assigned to agent " + std::to_string(owner) +
                                  ", who holds none of it");
    }
    for (AgentId i : x.holders(e)) {
      const Rational got = i == owner ? Rational(1) : Rational(0);
      delta[i] += (got - x.at(i, e)) * inst.cost(i, e);
    }
  }
  return delta;
}

Rational loss(Kind kind, const Rational& delta) {
  return kind == Kind::chores ? positive_part(delta) : positive_part(-delta);
}

AgentId other_end(const SharingEdge& e, AgentId v) { return e.from == v ? e.to : e.from; }

void require_two_sharers(const FractionalAllocation& x, const SharingEdge& e) {
  const auto holders = x.holders(e.item);
  if (holders.size() != 2 || x.at(e.from, e.item).sign() <= 0 || x.at(e.to, e.item).sign() <= 0) {
    throw std::invalid_argument("item " + std::to_string(e.item) + " is not shared by exactly its two endpoints");
  }
}

}  // namespace

Rational local_subsidy(const Instance& inst, const FractionalAllocation& x, const Assignment& assignment) {
  Rational total;
  for (const auto& [agent, d] : deltas(inst, x, assignment)) total += loss(inst.kind, d);
  return total;
}

const char* to_string(PairScheme scheme) {
  switch (scheme) {
    case PairScheme::LL: return "LL";
    case PairScheme::RR: return "RR";
    case PairScheme::LR: return "LR";
    case PairScheme::RL: return "RL";
  }
  return "?";
}

ComponentRounding round_single_edge(const Instance& inst, const FractionalAllocation& x,
                                    const Component& component) {
  if (component.kind != ComponentKind::single_edge || component.edges.size() != 1) {
    throw std::invalid_argument("round_single_edge needs a single-edge component");
  }
  const SharingEdge& e = component.edges.front();
  require_two_sharers(x, e);
  const AgentId lo = std::min(e.from, e.to);
  const AgentId hi = std::max(e.from, e.to);
  const AgentId owner = x.at(hi, e.item) > x.at(lo, e.item) ? hi : lo;

  ComponentRounding out;
  out.component = component;
  out.assignment = {{e.item, owner}};
  out.local_subsidy = local_subsidy(inst, x, out.assignment);
  out.bound = Rational(1, 2);
  out.scheme = "threshold";
  return out;
}

std::array<Rational, 4> pair_table_bounds(const Rational& y1, const Rational& y2, const Rational& alpha) {
  const Rational one(1);
  return {y1 + positive_part((one - y2) * alpha - y1), y2 + positive_part((one - y1) - y2 * alpha), y1 + y2,
          (one - y1) + (one - y2) * alpha};
}

ComponentRounding round_pair(const Instance& inst, const FractionalAllocation& x, const Component& component) {
  if (component.kind != ComponentKind::pair || component.edges.size() != 2) {
    throw std::invalid_argument("round_pair needs a two-edge component");
  }
  SharingEdge first = component.edges[0];
  SharingEdge second = component.edges[1];
  if (first.item == second.item) throw std::invalid_argument("pair component with a repeated item");
  if (second.item < first.item) std::swap(first, second);
  const AgentId mid = component.middle;
  const bool touches = (first.from == mid || first.to == mid) && (second.from == mid || second.to == mid);
  if (!touches) throw std::invalid_argument("pair edges do not meet at the middle agent");
  require_two_sharers(x, first);
  require_two_sharers(x, second);

  PairDetails d;
  d.e1 = first.item;
  d.e2 = second.item;
  d.left = other_end(first, mid);
  d.middle = mid;
  d.right = other_end(second, mid);

  const std::array<std::pair<AgentId, AgentId>, 4> owners = {
      std::pair{d.left, mid}, std::pair{mid, d.right}, std::pair{d.left, d.right}, std::pair{mid, mid}};
  std::size_t best = 0;
  for (std::size_t s = 0; s < 4; ++s) {
    d.scheme_subsidy[s] = local_subsidy(inst, x, {{d.e1, owners[s].first}, {d.e2, owners[s].second}});
    if (s == 0) continue;
    if (d.scheme_subsidy[s] < d.scheme_subsidy[best] ||
        (d.scheme_subsidy[s] == d.scheme_subsidy[best] && owners[s] < owners[best])) {
      best = s;
    }
  }
  d.chosen = static_cast<PairScheme>(best);

  const Rational& a1 = inst.cost(mid, d.e1);
  const Rational& a2 = inst.cost(mid, d.e2);
  if (inst.kind == Kind::chores) {
    // Orient so that the first item is the costlier one for the middle agent.
    const bool swapped = a1 < a2;
    const Rational& big = swapped ? a2 : a1;
    const Rational& small = swapped ? a1 : a2;
    d.alpha = big.is_zero() ? Rational(1) : small / big;
    const Rational y1 = x.at(mid, swapped ? d.e2 : d.e1);
    const Rational y2 = x.at(mid, swapped ? d.e1 : d.e2);
    auto b = pair_table_bounds(y1, y2, *d.alpha);
    if (swapped) std::swap(b[0], b[1]);  // LL and RR trade places under the relabelling
    d.table_bound = b;
  } else if (!a2.is_zero()) {
    d.alpha = a1 / a2;
  }

  ComponentRounding out;
  out.component = component;
  out.assignment = {{d.e1, owners[best].first}, {d.e2, owners[best].second}};
  out.local_subsidy = d.scheme_subsidy[best];
  out.bound = Rational(2, 3);
  out.scheme = to_string(d.chosen);
  out.pair = std::move(d);
  return out;
}

std::string eap_case_label(std::size_t k, std::size_t h) {
  if (h == k + 1) return "h=k+1";
  if (h == k) return "h=k";
  // h <= k(2 - 6/(k+1))  <=>  h(k+1) <= 2k(k-2)
  if (k >= 2 && h * (k + 1) <= 2 * k * (k - 2)) return "h<=k(2-6/(k+1))";
  return "h=k-1,k<=3";
}

ComponentRounding round_expanded_atom_path(const Instance& inst, const FractionalAllocation& x,
                                           const ExpandedAtomPath& eap) {
  const std::size_t k = eap.k();
  const std::size_t h = eap.h();
  if (k < 2) throw std::invalid_argument("expanded atom-path needs k >= 2");
  if (eap.attached.size() != k + 1) throw std::invalid_argument("attachment list does not match the path");
  const ItemId e0 = eap.base.item;
  const auto& path = eap.base.agents;
  std::vector<AgentId> attached_agent(k + 1, 0);
  std::vector<ItemId> seen_items;
  for (std::size_t t = 0; t <= k; ++t) {
    const auto& a = eap.attached[t];
    if (!a) continue;
    if (a->from != path[t] && a->to != path[t]) throw std::invalid_argument("attached edge misses its path agent");
    if (a->item == e0 || std::find(seen_items.begin(), seen_items.end(), a->item) != seen_items.end()) {
      throw std::invalid_argument("duplicate attachment");
    }
    seen_items.push_back(a->item);
    require_two_sharers(x, *a);
    attached_agent[t] = other_end(*a, path[t]);
  }

  const Kind kind = inst.kind;
  EapDetails details;
  details.k = k;
  details.h = h;
  details.case_label = eap_case_label(k, h);

  std::optional<std::size_t> best;
  std::vector<AgentId> choice(k + 1);
  std::vector<AgentId> chosen_best;
  for (std::size_t p = 0; p <= k; ++p) {
    Rational total;
    for (std::size_t t = 0; t <= k; ++t) {
      const AgentId a = path[t];
      const Rational base = ((t == p ? Rational(1) : Rational(0)) - x.at(a, e0)) * inst.cost(a, e0);
      if (!eap.attached[t]) {
        total += loss(kind, base);
        continue;
      }
      const ItemId f = eap.attached[t]->item;
      const AgentId b = attached_agent[t];
      const Rational to_a = loss(kind, base + (Rational(1) - x.at(a, f)) * inst.cost(a, f)) +
                            loss(kind, -x.at(b, f) * inst.cost(b, f));
      const Rational to_b = loss(kind, base - x.at(a, f) * inst.cost(a, f)) +
                            loss(kind, (Rational(1) - x.at(b, f)) * inst.cost(b, f));
      const bool pick_a = to_a < to_b || (to_a == to_b && a < b);
      choice[t] = pick_a ? a : b;
      total += pick_a ? to_a : to_b;
    }
    details.placement_subsidy.push_back(total);
    if (!best || total < details.placement_subsidy[*best] ||
        (total == details.placement_subsidy[*best] && path[p] < path[*best])) {
      best = p;
      chosen_best = choice;
    }
  }
  details.e0_owner = path[*best];

  ComponentRounding out;
  out.component.kind = ComponentKind::expanded_atom_path;
  out.component.edges = eap.edges();
  out.component.eap = eap;
  out.assignment.push_back({e0, details.e0_owner});
  for (std::size_t t = 0; t <= k; ++t) {
    if (eap.attached[t]) out.assignment.push_back({eap.attached[t]->item, chosen_best[t]});
  }
  out.local_subsidy = local_subsidy(inst, x, out.assignment);
  if (out.local_subsidy != details.placement_subsidy[*best]) {
    throw std::logic_error("expanded atom-path accounting mismatch");
  }
  out.bound = Rational(static_cast<std::int64_t>(k + h), 3);
  out.scheme = "e0->" + std::to_string(details.e0_owner);
  out.eap = std::move(details);
  return out;
}

BiasedOutcome biased_threshold_rounding(const Instance& inst, const FractionalAllocation& x,
                                        const ExpandedAtomPath& eap, std::size_t t) {
  if (t >= eap.attached.size() || !eap.attached[t]) throw std::invalid_argument("no attached edge at position");
  const ItemId e0 = eap.base.item;
  const AgentId a = eap.base.agents[t];
  const ItemId f = eap.attached[t]->item;
  const AgentId b = other_end(*eap.attached[t], a);
  const Rational& xi = x.at(a, e0);
  const Rational y = Rational(1) - x.at(a, f);
  const Rational one(1);

  BiasedOutcome out;
  if (inst.kind == Kind::chores) {
    out.to_path_agent = y - xi <= one - y;
    out.bound = (one - xi) / Rational(2);
  } else {
    const Rational xa = xi * inst.cost(a, e0);
    const Rational& v = inst.cost(a, f);
    out.to_path_agent = !(xa + (one - y) * v < positive_part(xa - y * v) + y);
    out.bound = xa <= Rational(1, 2) ? (one + xa) / Rational(2) : xa + Rational(1, 4);
  }
  const Rational base = -xi * inst.cost(a, e0);
  if (out.to_path_agent) {
    out.incurred = loss(inst.kind, base + y * inst.cost(a, f)) + loss(inst.kind, -x.at(b, f) * inst.cost(b, f));
  } else {
    out.incurred = loss(inst.kind, base - x.at(a, f) * inst.cost(a, f)) +
                   loss(inst.kind, (one - x.at(b, f)) * inst.cost(b, f));
  }
  return out;
}

Rational tree_bound(std::size_t size, bool has_atom_path) {
  const Rational third(static_cast<std::int64_t>(size), 3);
  if (has_atom_path || size % 2 == 0) return third;
  return third + Rational(1, 6);
}

namespace {

void round_edges(const Instance& inst, const FractionalAllocation& x, const std::vector<SharingEdge>& edges,
                 bool nested, TreeRounding& out) {
  if (edges.empty()) return;
  const bool has_path = !find_atom_paths(edges).empty();
  const std::size_t record_index = out.records.size();
  out.records.push_back({root_of(edges), edges.size(), has_path, nested, tree_bound(edges.size(), has_path), {}, {}});
  const std::size_t first = out.components.size();

  if (has_path) {
    const AtomPathSplit split = atom_path_split(edges);
    out.components.push_back(round_expanded_atom_path(inst, x, split.eap));
    for (const auto& sub : split.good_subtrees) round_edges(inst, x, sub, true, out);
  } else {
    for (const auto& comp : simple_split(edges)) {
      out.components.push_back(comp.kind == ComponentKind::pair ? round_pair(inst, x, comp)
                                                                : round_single_edge(inst, x, comp));
    }
  }

  TreeRecord& rec = out.records[record_index];
  for (std::size_t c = first; c < out.components.size(); ++c) {
    rec.local_sum += out.components[c].local_subsidy;
    rec.component_bound_sum += out.components[c].bound;
  }
}

}  // namespace

TreeRounding round_tree(const Instance& inst, const FractionalAllocation& x, const Tree& tree) {
  TreeRounding out;
  round_edges(inst, x, tree.edges, false, out);
  if (!out.records.empty()) out.records.front().root = tree.root;
  return out;
}

BaselineRounding round_baseline(const Instance& inst, const FractionalAllocation& x) {
  BaselineRounding out;
  out.allocation.owner.assign(x.items(), IntegralAllocation::kUnassigned);
  for (ItemId e = 0; e < x.items(); ++e) {
    const auto holders = x.holders(e);
    if (holders.empty()) throw std::invalid_argument("item " + std::to_string(e) + " has no holder");
    AgentId owner = holders.front();
    for (AgentId i : holders) {
      if (x.at(i, e) > x.at(owner, e)) owner = i;
    }
    out.allocation.owner[e] = owner;
    if (holders.size() < 2) continue;

    ComponentRounding rec;
    rec.component.kind = ComponentKind::shared_item;
    rec.assignment = {{e, owner}};
    rec.local_subsidy = local_subsidy(inst, x, rec.assignment);
    rec.bound = Rational(static_cast<std::int64_t>(holders.size() - 1), 2);
    rec.scheme = "argmax";
    out.items.push_back(std::move(rec));
  }
  out.subsidies = compute_subsidies(inst, out.allocation);
  return out;
}

}  // namespace fairdiv

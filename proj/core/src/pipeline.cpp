#include "fairdiv/pipeline.hpp"

#include <sstream>
#include <stdexcept>

#include "json_util.hpp"

namespace fairdiv {

namespace {

Rational global_bound_for(Kind kind, std::size_t n, bool baseline) {
  const auto nn = static_cast<std::int64_t>(n);
  if (baseline) return Rational(nn - 1, 2);
  if (kind == Kind::chores) return Rational(nn, 3) - Rational(1, 6);
  return Rational(nn, 3);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

PipelineResult trivial_result(const Instance& inst, AgentId receiver) {
  PipelineResult out;
  out.allocation.owner.assign(inst.items(), receiver);
  out.subsidies = compute_subsidies(inst, out.allocation);
  auto& cert = out.certificate;
  cert.kind = inst.kind;
  cert.agents = inst.agents();
  cert.method = "degenerate";
  cert.final_total = out.subsidies.total;
  cert.global_bound = global_bound_for(inst.kind, inst.agents(), false);
  return out;
}

Instance restrict_agents(const Instance& inst, const std::vector<AgentId>& keep) {
  Instance sub;
  sub.kind = inst.kind;
  Rational weight_sum;
  for (AgentId i : keep) weight_sum += inst.weights[i];
  for (AgentId i : keep) {
    sub.weights.push_back(inst.weights[i] / weight_sum);
    sub.costs.push_back(inst.costs[i]);
    if (!inst.agent_names.empty()) sub.agent_names.push_back(inst.agent_names[i]);
  }
  sub.item_names = inst.item_names;
  return sub;
}

}  // namespace

std::vector<std::string> RoundingCertificate::failures() const {
  std::vector<std::string> out;
  auto check = [&out](bool ok, const std::string& what) {
    if (!ok) out.push_back(what);
  };
  check(final_total <= ido_total || method == "degenerate", "final total exceeds the IDO-level total");
  check(ido_total <= local_sum || method == "degenerate", "IDO-level total exceeds the sum of local subsidies");
  check(local_sum <= bound_sum, "local subsidies exceed their bounds in sum");
  check(bound_sum <= global_bound, "component bounds exceed the global bound");
  check(final_total <= global_bound, "final total exceeds the global bound");
  if (strong_bound) {
    check(bound_sum <= *strong_bound, "component bounds exceed (n-1)/3");
    check(final_total <= *strong_bound, "final total exceeds (n-1)/3");
  }
  for (std::size_t c = 0; c < components.size(); ++c) {
    check(components[c].local_subsidy <= components[c].bound,
          "component " + std::to_string(c) + " exceeds its bound");
  }
  for (std::size_t t = 0; t < trees.size(); ++t) {
    check(trees[t].local_sum <= trees[t].bound, "tree " + std::to_string(t) + " exceeds its bound");
    check(trees[t].component_bound_sum <= trees[t].bound,
          "tree " + std::to_string(t) + " component bounds exceed the tree bound");
  }
  return out;
}

bool RoundingCertificate::holds() const { return failures().empty(); }

PipelineResult allocate_with_subsidy(const Instance& inst, const PipelineOptions& options) {
  const ValidationReport report = validate_instance(inst);
  if (!report.ok()) throw std::invalid_argument("invalid instance: " + join(report.violations));
  const std::size_t n = inst.agents();
  const std::size_t m = inst.items();

  std::vector<AgentId> keep;
  if (!report.degenerate_agents.empty()) {
    // A zero-cost agent absorbs every chore at no cost to anyone.
    if (inst.kind == Kind::chores) return trivial_result(inst, report.degenerate_agents.front());
    for (AgentId i = 0; i < n; ++i) {
      if (!inst.total_cost(i).is_zero()) keep.push_back(i);
    }
    if (keep.empty()) return trivial_result(inst, 0);
  } else {
    for (AgentId i = 0; i < n; ++i) keep.push_back(i);
  }
  const Instance sub = keep.size() == n ? inst : restrict_agents(inst, keep);

  PipelineResult out;
  out.fbta_agents = keep;
  IdoReduction reduction = reduce_to_ido(sub);
  out.ido_instance = std::move(reduction.instance);
  out.profile = std::move(reduction.profile);
  out.fbta = run_fbta(out.ido_instance);
  out.graph = build_graph(out.fbta.trace);
  const FractionalAllocation& x = out.fbta.allocation;

  auto& cert = out.certificate;
  cert.kind = inst.kind;
  cert.agents = n;
  cert.edge_count = out.graph.edges().size();
  for (const auto& fi : fractional_items(x)) cert.shattered_items += fi.sharers.size() >= 3 ? 1 : 0;

  out.ido_allocation.owner.assign(m, IntegralAllocation::kUnassigned);
  for (ItemId e = 0; e < m; ++e) {
    const auto holders = x.holders(e);
    if (holders.size() == 1) out.ido_allocation.owner[e] = holders.front();
  }

  if (options.baseline) {
    cert.method = "baseline";
    BaselineRounding base = round_baseline(out.ido_instance, x);
    out.ido_allocation = std::move(base.allocation);
    cert.components = std::move(base.items);
  } else {
    cert.method = "tree-splitting";
    for (const Tree& tree : trees(out.graph)) {
      TreeRounding tr = round_tree(out.ido_instance, x, tree);
      for (auto& comp : tr.components) {
        for (const auto& [e, owner] : comp.assignment) out.ido_allocation.owner[e] = owner;
        cert.components.push_back(std::move(comp));
      }
      for (auto& rec : tr.records) cert.trees.push_back(std::move(rec));
    }
  }
  if (!out.ido_allocation.is_complete(keep.size())) throw std::logic_error("rounding left an item unassigned");

  out.ido_subsidies = compute_subsidies(out.ido_instance, out.ido_allocation);
  const IntegralAllocation lifted = lift_allocation(sub, out.profile, out.ido_allocation);
  out.allocation.owner.resize(m);
  for (ItemId e = 0; e < m; ++e) out.allocation.owner[e] = keep[lifted.owner[e]];
  out.subsidies = compute_subsidies(inst, out.allocation);

  cert.final_total = out.subsidies.total;
  cert.ido_total = out.ido_subsidies.total;
  for (const auto& comp : cert.components) {
    cert.local_sum += comp.local_subsidy;
    cert.bound_sum += comp.bound;
  }
  cert.global_bound = global_bound_for(inst.kind, n, options.baseline);
  if (!options.baseline && inst.kind == Kind::chores && n >= 2 &&
      (cert.edge_count + 1 < n || cert.shattered_items > 0)) {
    cert.strong_bound = Rational(static_cast<std::int64_t>(n) - 1, 3);
  }
  return out;
}

namespace {

std::string opt_rational(const std::optional<Rational>& value) {
  return value ? detail::quote(value->str()) : "null";
}

std::string assignment_json(const Assignment& assignment) {
  std::string out = "[";
  for (std::size_t k = 0; k < assignment.size(); ++k) {
    out += (k ? ", [" : "[") + std::to_string(assignment[k].first) + ", " + std::to_string(assignment[k].second) + "]";
  }
  return out + "]";
}

std::string edges_json(const std::vector<SharingEdge>& edges) {
  std::string out = "[";
  for (std::size_t k = 0; k < edges.size(); ++k) {
    out += (k ? ", [" : "[") + std::to_string(edges[k].from) + ", " + std::to_string(edges[k].to) + ", " +
           std::to_string(edges[k].item) + "]";
  }
  return out + "]";
}

}  // namespace

std::string export_certificate(const RoundingCertificate& cert) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"kind\": " << detail::quote(to_string(cert.kind)) << ",\n";
  out << "  \"agents\": " << cert.agents << ",\n";
  out << "  \"method\": " << detail::quote(cert.method) << ",\n";
  out << "  \"indexing\": \"bid-and-take agents and canonical ascending item positions, 0-based\",\n";
  out << "  \"alpha_convention\": "
      << detail::quote(cert.kind == Kind::chores ? "a2/a1 with a1 >= a2 (middle agent costs)"
                                                 : "a1/a2 (middle agent values of e1, e2)")
      << ",\n";
  out << "  \"edges\": " << cert.edge_count << ",\n";
  out << "  \"shattered_items\": " << cert.shattered_items << ",\n";
  out << "  \"components\": [";
  for (std::size_t c = 0; c < cert.components.size(); ++c) {
    const auto& comp = cert.components[c];
    out << (c ? ",\n" : "\n") << "    {\"kind\": " << detail::quote(to_string(comp.component.kind))
        << ", \"edges\": " << edges_json(comp.component.edges) << ", \"scheme\": " << detail::quote(comp.scheme)
        << ", \"assignment\": " << assignment_json(comp.assignment)
        << ", \"local_subsidy\": " << detail::quote(comp.local_subsidy.str())
        << ", \"bound\": " << detail::quote(comp.bound.str());
    if (comp.pair) {
      const auto& p = *comp.pair;
      out << ", \"alpha\": " << opt_rational(p.alpha) << ", \"schemes\": {";
      for (std::size_t s = 0; s < 4; ++s) {
        out << (s ? ", " : "") << '"' << to_string(static_cast<PairScheme>(s))
            << "\": " << detail::quote(p.scheme_subsidy[s].str());
      }
      out << "}";
      if (p.table_bound) {
        out << ", \"table_bounds\": {";
        for (std::size_t s = 0; s < 4; ++s) {
          out << (s ? ", " : "") << '"' << to_string(static_cast<PairScheme>(s))
              << "\": " << detail::quote((*p.table_bound)[s].str());
        }
        out << "}";
      }
    }
    if (comp.eap) {
      const auto& d = *comp.eap;
      out << ", \"k\": " << d.k << ", \"h\": " << d.h << ", \"case\": " << detail::quote(d.case_label)
          << ", \"placements\": " << detail::rational_array(d.placement_subsidy);
    }
    out << "}";
  }
  out << (cert.components.empty() ? "],\n" : "\n  ],\n");
  out << "  \"trees\": [";
  for (std::size_t t = 0; t < cert.trees.size(); ++t) {
    const auto& r = cert.trees[t];
    out << (t ? ",\n" : "\n") << "    {\"root\": " << r.root << ", \"size\": " << r.size
        << ", \"atom_path\": " << (r.has_atom_path ? "true" : "false")
        << ", \"nested\": " << (r.nested ? "true" : "false") << ", \"local_sum\": " << detail::quote(r.local_sum.str())
        << ", \"bound\": " << detail::quote(r.bound.str()) << "}";
  }
  out << (cert.trees.empty() ? "],\n" : "\n  ],\n");
  out << "  \"final_total\": " << detail::quote(cert.final_total.str()) << ",\n";
  out << "  \"ido_total\": " << detail::quote(cert.ido_total.str()) << ",\n";
  out << "  \"local_sum\": " << detail::quote(cert.local_sum.str()) << ",\n";
  out << "  \"bound_sum\": " << detail::quote(cert.bound_sum.str()) << ",\n";
  out << "  \"global_bound\": " << detail::quote(cert.global_bound.str()) << ",\n";
  out << "  \"strong_bound\": " << opt_rational(cert.strong_bound) << ",\n";
  out << "  \"holds\": " << (cert.holds() ? "true" : "false") << "\n";
  out << "}\n";
  return out.str();
}

std::string serialize_allocation(const Instance& inst, const IntegralAllocation& alloc,
                                 const SubsidyVector& subsidies, std::optional<int> decimal_digits) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"kind\": " << detail::quote(to_string(inst.kind)) << ",\n";
  out << "  \"owner\": [";
  for (std::size_t e = 0; e < alloc.owner.size(); ++e) {
    out << (e ? ", " : "");
    if (alloc.owner[e] == IntegralAllocation::kUnassigned) {
      out << "null";
    } else {
      out << alloc.owner[e];
    }
  }
  out << "],\n";
  out << "  \"subsidies\": " << detail::rational_array(subsidies.per_agent) << ",\n";
  out << "  \"total_subsidy\": " << detail::quote(subsidies.total.str());
  if (decimal_digits) {
    std::vector<std::string> dec;
    for (const auto& s : subsidies.per_agent) dec.push_back(s.decimal(*decimal_digits));
    out << ",\n  \"subsidies_decimal\": " << detail::string_array(dec);
    out << ",\n  \"total_subsidy_decimal\": " << detail::quote(subsidies.total.decimal(*decimal_digits));
  }
  out << "\n}\n";
  return out.str();
}

AllocationDocument parse_allocation(std::string_view text) {
  const nlohmann::json doc = detail::parse_exact_json(text);
  if (!doc.is_object()) throw ParseError("allocation document must be a JSON object", 1);
  if (!doc.contains("owner") || !doc.at("owner").is_array()) throw ParseError("missing array field \"owner\"");

  AllocationDocument out;
  const auto& owner = doc.at("owner");
  for (std::size_t e = 0; e < owner.size(); ++e) {
    const auto& v = owner[e];
    if (v.is_null()) {
      out.allocation.owner.push_back(IntegralAllocation::kUnassigned);
    } else if (v.is_number_unsigned()) {
      out.allocation.owner.push_back(v.get<AgentId>());
    } else {
      throw ParseError("owner[" + std::to_string(e) + "] must be a non-negative agent index or null");
    }
  }
  if (doc.contains("subsidies")) {
    const auto& subs = doc.at("subsidies");
    if (!subs.is_array()) throw ParseError("\"subsidies\" must be an array");
    std::vector<Rational> values;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      values.push_back(detail::rational_from_json(subs[i], "subsidies[" + std::to_string(i) + "]"));
    }
    out.subsidies = std::move(values);
  }
  return out;
}

}  // namespace fairdiv

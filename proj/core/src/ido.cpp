#include "fairdiv/ido.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fairdiv {

bool is_ido(const Instance& inst) {
  for (const auto& row : inst.costs) {
    if (!std::is_sorted(row.begin(), row.end())) return false;
  }
  return true;
}

IdoReduction reduce_to_ido(const Instance& inst) {
  const std::size_t n = inst.agents();
  const std::size_t m = inst.items();
  IdoReduction out;
  out.instance.kind = inst.kind;
  out.instance.weights = inst.weights;
  out.instance.agent_names = inst.agent_names;
  out.instance.costs.assign(n, std::vector<Rational>(m));
  out.profile.sigma.assign(n, std::vector<ItemId>(m));

  for (AgentId i = 0; i < n; ++i) {
    auto& sigma = out.profile.sigma[i];
    std::iota(sigma.begin(), sigma.end(), ItemId{0});
    const auto& row = inst.costs[i];
    std::stable_sort(sigma.begin(), sigma.end(),
                     [&row](ItemId a, ItemId b) { return row[a] > row[b]; });
    for (std::size_t p = 0; p < m; ++p) out.instance.costs[i][p] = row[sigma[m - 1 - p]];
  }
  return out;
}

IntegralAllocation lift_allocation(const Instance& inst, const RankProfile& profile,
                                   const IntegralAllocation& ido_alloc) {
  const std::size_t n = inst.agents();
  const std::size_t m = inst.items();
  if (ido_alloc.items() != m || !ido_alloc.is_complete(n)) {
    throw std::invalid_argument("lift_allocation needs a complete allocation of the IDO instance");
  }
  if (profile.sigma.size() != n) throw std::invalid_argument("rank profile does not match the instance");

  IntegralAllocation out;
  out.owner.assign(m, IntegralAllocation::kUnassigned);
  const bool chores = inst.kind == Kind::chores;

  for (std::size_t step = 0; step < m; ++step) {
    const std::size_t p = chores ? step : m - 1 - step;
    const AgentId i = ido_alloc.owner[p];
    const auto& row = inst.costs[i];
    ItemId pick = IntegralAllocation::kUnassigned;
    for (ItemId e = 0; e < m; ++e) {
      if (out.owner[e] != IntegralAllocation::kUnassigned) continue;
      if (pick == IntegralAllocation::kUnassigned || (chores ? row[e] < row[pick] : row[e] > row[pick])) {
        pick = e;
      }
    }
    out.owner[pick] = i;
  }
  return out;
}

}  // namespace fairdiv

#include "fairdiv/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <optional>
#include <random>
#include <thread>

namespace fairdiv {

namespace {

struct Search {
  const Instance& inst;
  std::vector<ItemId> items;                  // fractional items, ascending
  std::vector<std::vector<AgentId>> sharers;  // per fractional item, ascending
  std::vector<Rational> share;

  struct Best {
    std::optional<Rational> total;
    std::vector<AgentId> choice;
  };

  Rational lower_bound(const std::vector<Rational>& held, const std::vector<Rational>& still) const {
    Rational lb;
    for (AgentId i = 0; i < held.size(); ++i) {
      lb += inst.kind == Kind::chores ? positive_part(held[i] - share[i])
                                      : positive_part(share[i] - (held[i] + still[i]));
    }
    return lb;
  }

  // `still[i]` is the value agent i could still gain (goods only).
  void dfs(std::size_t depth, std::vector<Rational>& held, std::vector<Rational>& still,
           std::vector<AgentId>& choice, Best& best) const {
    const Rational lb = lower_bound(held, still);
    if (best.total && lb >= *best.total) return;
    if (depth == items.size()) {
      best.total = lb;  // every item placed, so the bound is the exact total
      best.choice = choice;
      return;
    }
    const ItemId e = items[depth];
    if (inst.kind == Kind::goods) {
      for (AgentId i : sharers[depth]) still[i] -= inst.cost(i, e);
    }
    for (AgentId i : sharers[depth]) {
      held[i] += inst.cost(i, e);
      choice[depth] = i;
      dfs(depth + 1, held, still, choice, best);
      held[i] -= inst.cost(i, e);
    }
    if (inst.kind == Kind::goods) {
      for (AgentId i : sharers[depth]) still[i] += inst.cost(i, e);
    }
  }
};

unsigned thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SUBSIDY_FAIRDIV_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

}  // namespace

std::uint64_t rounding_count(const FractionalAllocation& x) {
  std::uint64_t total = 1;
  for (ItemId e = 0; e < x.items(); ++e) {
    const auto k = static_cast<std::uint64_t>(x.holders(e).size());
    if (k == 0) continue;
    if (total > std::numeric_limits<std::uint64_t>::max() / k) return std::numeric_limits<std::uint64_t>::max();
    total *= k;
  }
  return total;
}

OracleResult brute_force_rounding(const Instance& inst, const FractionalAllocation& x, const OracleOptions& options) {
  const std::uint64_t count = rounding_count(x);
  if (count > options.cap) {
    throw OracleCapExceeded("oracle needs " + std::to_string(count) + " roundings, cap is " +
                            std::to_string(options.cap));
  }
  const std::size_t n = inst.agents();
  Search search{inst, {}, {}, {}};
  std::vector<Rational> held(n);
  std::vector<Rational> still(n);
  IntegralAllocation alloc;
  alloc.owner.assign(x.items(), IntegralAllocation::kUnassigned);
  for (AgentId i = 0; i < n; ++i) search.share.push_back(wprop_share(inst, i));
  for (ItemId e = 0; e < x.items(); ++e) {
    auto holders = x.holders(e);
    if (holders.size() == 1) {
      alloc.owner[e] = holders.front();
      held[holders.front()] += inst.cost(holders.front(), e);
    } else if (holders.size() >= 2) {
      for (AgentId i : holders) still[i] += inst.cost(i, e);
      search.items.push_back(e);
      search.sharers.push_back(std::move(holders));
    }
  }

  Search::Best best;
  const unsigned threads = thread_count(options.threads);
  if (threads <= 1 || search.items.empty()) {
    std::vector<AgentId> choice(search.items.size());
    search.dfs(0, held, still, choice, best);
  } else {
    // Branches of the first fractional item are searched independently and
    // merged in branch order, which keeps the lexicographic tie-break.
    const auto& first = search.sharers.front();
    std::vector<Search::Best> results(first.size());
    std::vector<std::thread> pool;
    std::size_t next = 0;
    while (next < first.size()) {
      pool.clear();
      for (unsigned t = 0; t < threads && next < first.size(); ++t, ++next) {
        pool.emplace_back([&, b = next] {
          std::vector<Rational> h = held;
          std::vector<Rational> s = still;
          for (AgentId i : first) s[i] -= inst.cost(i, search.items[0]);
          h[first[b]] += inst.cost(first[b], search.items[0]);
          std::vector<AgentId> choice(search.items.size());
          choice[0] = first[b];
          search.dfs(1, h, s, choice, results[b]);
        });
      }
      for (auto& th : pool) th.join();
    }
    for (auto& r : results) {
      if (r.total && (!best.total || *r.total < *best.total)) best = std::move(r);
    }
  }

  for (std::size_t d = 0; d < search.items.size(); ++d) alloc.owner[search.items[d]] = best.choice[d];
  OracleResult out;
  out.subsidies = compute_subsidies(inst, alloc);
  out.allocation = std::move(alloc);
  out.combinations = count;
  return out;
}

const char* to_string(CostDist dist) {
  switch (dist) {
    case CostDist::uniform: return "uniform";
    case CostDist::correlated: return "correlated";
    case CostDist::ido: return "ido";
  }
  return "?";
}

CostDist parse_cost_dist(const std::string& name) {
  if (name == "uniform") return CostDist::uniform;
  if (name == "correlated") return CostDist::correlated;
  if (name == "ido") return CostDist::ido;
  throw std::invalid_argument("unknown cost distribution \"" + name + "\" (uniform, correlated, ido)");
}

namespace {

// Uniform integer in [lo, hi] by rejection on raw 64-bit words, so the
// sequence does not depend on the standard library's distributions.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t reject_below = (0 - range) % range;  // 2^64 mod range
  std::uint64_t v = rng();
  while (v < reject_below) v = rng();
  return lo + static_cast<std::int64_t>(v % range);
}

}  // namespace

Instance gen_random_instance(const GenParams& params) {
  if (params.agents == 0) throw std::invalid_argument("need at least one agent");
  if (params.denominator < 1) throw std::invalid_argument("denominator must be positive");
  const std::size_t n = params.agents;
  const std::size_t m = params.items;
  const std::int64_t d = params.denominator;
  std::mt19937_64 rng(params.seed);

  Instance inst;
  inst.kind = params.kind;
  if (params.weights == WeightDist::equal) {
    inst.weights.assign(n, Rational(1, static_cast<std::int64_t>(n)));
  } else {
    std::vector<std::int64_t> raw(n);
    std::int64_t sum = 0;
    for (auto& r : raw) sum += (r = draw(rng, 1, d));
    for (auto r : raw) inst.weights.emplace_back(r, sum);
  }

  inst.costs.assign(n, std::vector<Rational>(m));
  if (params.costs == CostDist::correlated) {
    std::vector<std::int64_t> base(m);
    for (auto& b : base) b = draw(rng, 0, d);
    const std::int64_t spread = std::max<std::int64_t>(1, d / 5);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t e = 0; e < m; ++e) {
        const std::int64_t q = std::clamp<std::int64_t>(base[e] + draw(rng, -spread, spread), 0, d);
        inst.costs[i][e] = Rational(q, d);
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t e = 0; e < m; ++e) inst.costs[i][e] = Rational(draw(rng, 0, d), d);
    }
    if (params.costs == CostDist::ido) {
      for (auto& row : inst.costs) std::sort(row.begin(), row.end());
    }
  }
  return inst;
}

Instance six_agent_instance() {
  Instance inst;
  inst.kind = Kind::chores;
  inst.weights = {Rational(1, 12), Rational(1, 12), Rational(1, 12), Rational(1, 6), Rational(1, 4), Rational(1, 3)};
  const std::vector<std::vector<int>> tenths = {
      {7, 7, 7, 7, 10, 10}, {8, 8, 8, 8, 8, 8},       {7, 8, 8, 8, 8, 9},
      {8, 8, 8, 10, 10, 10}, {10, 10, 10, 10, 10, 10}, {8, 8, 8, 10, 10, 10},
  };
  for (const auto& row : tenths) {
    std::vector<Rational> r;
    for (int t : row) r.emplace_back(t, 10);
    inst.costs.push_back(std::move(r));
  }
  return inst;
}

}  // namespace fairdiv

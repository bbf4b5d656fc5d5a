#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "fairdiv/fairdiv.hpp"

namespace fairdiv {

// gtest printers
inline void PrintTo(Kind kind, std::ostream* os) { *os << to_string(kind); }
inline void PrintTo(const FractionalAllocation& x, std::ostream* os) {
  for (AgentId i = 0; i < x.agents(); ++i) {
    *os << "\n ";
    for (ItemId e = 0; e < x.items(); ++e) *os << ' ' << x.at(i, e);
  }
}
inline void PrintTo(const Successor& s, std::ostream* os) { *os << "->" << s.agent << " on " << s.item; }
inline void PrintTo(const SharingEdge& e, std::ostream* os) { *os << e.from << "->" << e.to << ":" << e.item; }
inline void PrintTo(const FractionalItem& f, std::ostream* os) {
  *os << f.item << ":{";
  for (std::size_t t = 0; t < f.sharers.size(); ++t) *os << (t ? "," : "") << f.sharers[t];
  *os << "}";
}
inline void PrintTo(const TraceEvent& ev, std::ostream* os) {
  *os << ev.item << ' ' << ev.agent << ' ' << ev.fraction << (ev.inactivated ? " stop" : "");
}

}  // namespace fairdiv

namespace fairdiv::testing {

inline Rational R(const std::string& text) { return Rational::parse(text); }

inline std::vector<Rational> row(const std::vector<std::string>& cells) {
  std::vector<Rational> out;
  for (const auto& c : cells) out.push_back(R(c));
  return out;
}

inline Instance make_instance(Kind kind, const std::vector<std::string>& weights,
                              const std::vector<std::vector<std::string>>& costs) {
  Instance inst;
  inst.kind = kind;
  inst.weights = row(weights);
  for (const auto& r : costs) inst.costs.push_back(row(r));
  return inst;
}

/// Fractional allocation from a dense matrix of "p/q" strings.
inline FractionalAllocation make_x(const std::vector<std::vector<std::string>>& rows) {
  FractionalAllocation x(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t e = 0; e < rows[i].size(); ++e) x.at(i, e) = R(rows[i][e]);
  }
  return x;
}

/// Random suite instance: n in [2, 10], m in [n, 20], mixed distributions.
inline Instance suite_instance(std::uint64_t seed, Kind kind) {
  std::mt19937_64 pick(seed * 7919 + (kind == Kind::goods ? 1 : 0));
  GenParams p;
  p.agents = 2 + pick() % 9;
  p.items = p.agents + pick() % (21 - p.agents);
  p.kind = kind;
  p.costs = static_cast<CostDist>(pick() % 3);
  p.weights = pick() % 4 == 0 ? WeightDist::equal : WeightDist::uniform;
  p.denominator = pick() % 2 == 0 ? 10 : 24;
  p.seed = seed;
  return gen_random_instance(p);
}

/// Direct evaluation of the subsidy total, independent of compute_subsidies.
inline Rational total_subsidy_direct(const Instance& inst, const std::vector<AgentId>& owner) {
  Rational total;
  for (AgentId i = 0; i < inst.agents(); ++i) {
    Rational all;
    Rational mine;
    for (ItemId e = 0; e < inst.items(); ++e) {
      all += inst.costs[i][e];
      if (owner[e] == i) mine += inst.costs[i][e];
    }
    const Rational share = inst.weights[i] * all;
    const Rational gap = inst.kind == Kind::chores ? mine - share : share - mine;
    if (gap.sign() > 0) total += gap;
  }
  return total;
}

enum class ReplayKey { ratio, raw_cost };

/// Straight transcription of chores bid-and-take, used as an oracle. The
/// raw_cost key picks the smallest c_i(e) instead of c_i(e)/c_i(M).
inline FractionalAllocation replay_chores(const Instance& inst, ReplayKey key) {
  const std::size_t n = inst.agents();
  FractionalAllocation x(n, inst.items());
  std::vector<bool> active(n, true);
  std::vector<Rational> held(n);
  std::vector<Rational> share(n);
  std::vector<Rational> total(n);
  for (AgentId i = 0; i < n; ++i) {
    total[i] = inst.total_cost(i);
    share[i] = inst.weights[i] * total[i];
  }
  for (ItemId e = 0; e < inst.items(); ++e) {
    Rational z(1);
    while (z.sign() > 0) {
      std::optional<AgentId> pick;
      Rational best;
      for (AgentId i = 0; i < n; ++i) {
        if (!active[i]) continue;
        const Rational k = key == ReplayKey::ratio ? inst.costs[i][e] / total[i] : inst.costs[i][e];
        if (!pick || k < best) {
          pick = i;
          best = k;
        }
      }
      if (!pick) throw std::logic_error("ran out of active agents");
      const AgentId i = *pick;
      const Rational& c = inst.costs[i][e];
      if (held[i] + z * c > share[i]) {
        const Rational f = (share[i] - held[i]) / c;
        x.at(i, e) += f;
        z -= f;
        held[i] = share[i];
        active[i] = false;
      } else {
        x.at(i, e) += z;
        held[i] += z * c;
        z = Rational(0);
        if (held[i] == share[i]) active[i] = false;
      }
    }
  }
  return x;
}

/// The published six-agent fractional allocation, agents and items 0-based.
inline FractionalAllocation published_six_agent_allocation() {
  return make_x({
      {"4/7", "0", "0", "0", "0", "0"},
      {"0", "1/2", "0", "0", "0", "0"},
      {"3/7", "1/8", "0", "0", "0", "0"},
      {"0", "3/8", "3/4", "0", "0", "0"},
      {"0", "0", "0", "1", "1/2", "0"},
      {"0", "0", "1/4", "0", "1/2", "1"},
  });
}

}  // namespace fairdiv::testing

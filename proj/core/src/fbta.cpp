#include "fairdiv/fbta.hpp"

#include <sstream>
#include <stdexcept>

#include "fairdiv/ido.hpp"

namespace fairdiv {

namespace {

void check_input(const Instance& inst, Kind expected) {
  if (inst.kind != expected) {
    throw std::invalid_argument("bid-and-take for " + std::string(to_string(expected)) +
                                " called on a " + std::string(to_string(inst.kind)) + " instance");
  }
  if (!is_ido(inst)) throw std::invalid_argument("bid-and-take needs an IDO instance in ascending order");
  for (AgentId i = 0; i < inst.agents(); ++i) {
    if (inst.total_cost(i).is_zero()) {
      throw std::invalid_argument("agent " + std::to_string(i) + " is degenerate (total is zero)");
    }
  }
}

// Shared state of one run. `better(a, b)` says agent a's key c_a(e)/c_a(M)
// beats agent b's; keys are compared by cross-multiplication.
class Run {
 public:
  explicit Run(const Instance& inst)
      : inst_(inst),
        result_{FractionalAllocation(inst.agents(), inst.items()), {}},
        total_(inst.agents()),
        share_(inst.agents()),
        held_(inst.agents()),
        active_(inst.agents(), true),
        active_count_(inst.agents()) {
    result_.trace.successor.assign(inst.agents(), std::nullopt);
    result_.trace.last_item.assign(inst.agents(), std::nullopt);
    for (AgentId i = 0; i < inst.agents(); ++i) {
      total_[i] = inst.total_cost(i);
      share_[i] = wprop_share(inst, i);
    }
  }

  AgentId select(ItemId e, bool maximize) const {
    AgentId best = inst_.agents();
    for (AgentId i = 0; i < inst_.agents(); ++i) {
      if (!active_[i]) continue;
      if (best == inst_.agents()) {
        best = i;
        continue;
      }
      const Rational lhs = inst_.cost(i, e) * total_[best];
      const Rational rhs = inst_.cost(best, e) * total_[i];
      if (maximize ? lhs > rhs : lhs < rhs) best = i;
    }
    return best;
  }

  void take(ItemId e, AgentId i, const Rational& fraction, bool inactivate) {
    result_.allocation.at(i, e) += fraction;
    held_[i] += fraction * inst_.cost(i, e);
    result_.trace.events.push_back({e, i, fraction, inactivate});
    if (inactivate) {
      active_[i] = false;
      --active_count_;
      result_.trace.last_item[i] = e;
    }
  }

  void link(AgentId from, AgentId to, ItemId e) {
    if (result_.trace.successor[from]) throw std::logic_error("agent received two successors");
    result_.trace.successor[from] = Successor{to, e};
  }

  const Instance& inst_;
  FbtaResult result_;
  std::vector<Rational> total_;
  std::vector<Rational> share_;
  std::vector<Rational> held_;
  std::vector<bool> active_;
  std::size_t active_count_;
};

}  // namespace

FbtaResult fbta_chores(const Instance& inst) {
  check_input(inst, Kind::chores);
  Run run(inst);
  for (ItemId e = 0; e < inst.items(); ++e) {
    Rational z(1);
    std::optional<AgentId> pending;  // agent that stopped part-way through e
    while (z.sign() > 0) {
      if (run.active_count_ == 0) throw std::logic_error("no active agent left while items remain");
      const AgentId i = run.select(e, false);
      if (pending) run.link(*pending, i, e);
      pending.reset();
      const Rational& c = inst.cost(i, e);
      const Rational room = run.share_[i] - run.held_[i];
      if (run.held_[i] + z * c > run.share_[i]) {
        const Rational part = room / c;
        run.take(e, i, part, true);
        z -= part;
        pending = i;
      } else {
        run.take(e, i, z, z * c == room);
        z = Rational(0);
      }
    }
  }
  return std::move(run.result_);
}

FbtaResult fbta_goods(const Instance& inst) {
  check_input(inst, Kind::goods);
  Run run(inst);
  const std::size_t m = inst.items();

  auto give_rest = [&](ItemId from, const Rational& first_fraction, std::optional<AgentId> pending) {
    const AgentId last = run.select(from, true);
    for (ItemId e = from; e < m; ++e) {
      const Rational f = e == from ? first_fraction : Rational(1);
      if (f.sign() == 0) continue;
      if (pending && e == from) run.link(*pending, last, e);
      run.take(e, last, f, false);
    }
  };

  if (run.active_count_ == 1) {
    give_rest(0, Rational(1), std::nullopt);
    return std::move(run.result_);
  }
  for (ItemId e = 0; e < m; ++e) {
    Rational z(1);
    std::optional<AgentId> pending;
    while (z.sign() > 0) {
      const AgentId i = run.select(e, true);
      if (pending) run.link(*pending, i, e);
      pending.reset();
      const Rational& v = inst.cost(i, e);
      const Rational room = run.share_[i] - run.held_[i];
      bool stopped = false;
      if (run.held_[i] + z * v > run.share_[i]) {
        const Rational part = room / v;
        run.take(e, i, part, true);
        z -= part;
        pending = i;
        stopped = true;
      } else {
        stopped = z * v == room;
        run.take(e, i, z, stopped);
        z = Rational(0);
      }
      if (stopped && run.active_count_ == 1) {
        if (z.sign() > 0) {
          give_rest(e, z, pending);
        } else if (e + 1 < m) {
          give_rest(e + 1, Rational(1), std::nullopt);
        }
        return std::move(run.result_);
      }
    }
  }
  return std::move(run.result_);
}

FbtaResult run_fbta(const Instance& inst) {
  return inst.kind == Kind::chores ? fbta_chores(inst) : fbta_goods(inst);
}

std::vector<FractionalItem> fractional_items(const FractionalAllocation& alloc) {
  std::vector<FractionalItem> out;
  for (ItemId e = 0; e < alloc.items(); ++e) {
    auto holders = alloc.holders(e);
    if (holders.size() >= 2) out.push_back({e, std::move(holders)});
  }
  return out;
}

std::vector<FractionalItem> fractional_items(const FractionalAllocation& alloc,
                                             const AllocationTrace& trace) {
  std::vector<FractionalItem> out = fractional_items(alloc);
  for (auto& fi : out) {
    std::vector<AgentId> ordered;
    for (const auto& ev : trace.events) {
      if (ev.item != fi.item || ev.fraction.sign() == 0) continue;
      bool seen = false;
      for (AgentId a : ordered) seen = seen || a == ev.agent;
      if (!seen) ordered.push_back(ev.agent);
    }
    fi.sharers = std::move(ordered);
  }
  return out;
}

std::string export_trace(const AllocationTrace& trace) {
  std::ostringstream out;
  out << "# item agent fraction inactivated\n";
  for (const auto& ev : trace.events) {
    out << ev.item << ' ' << ev.agent << ' ' << ev.fraction.str() << ' ' << (ev.inactivated ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace fairdiv

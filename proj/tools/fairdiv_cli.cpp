// fairdiv command-line front end.
//
// Exit codes: 0 ok, 1 certificate failure or WPROPS violation, 2 bad input
// or bad arguments, 3 oracle cap exceeded.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "fairdiv/fairdiv.hpp"

namespace {

using namespace fairdiv;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;
constexpr int kCapExceeded = 3;

// Raised for input problems that map to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Instance load_valid_instance(const std::string& path) {
  Instance inst;
  try {
    inst = load_instance(path);
  } catch (const ParseError& err) {
    throw InputError(path + ": " + err.what());
  } catch (const std::runtime_error& err) {
    throw InputError(err.what());
  }
  const ValidationReport report = validate_instance(inst);
  if (!report.ok()) {
    std::string msg = path + ": invalid instance";
    for (const auto& v : report.violations) msg += "\n  " + v;
    throw InputError(msg);
  }
  return inst;
}

void write_or_print(const std::optional<std::string>& path, const std::string& text) {
  if (path) {
    save_text(*path, text);
  } else {
    std::cout << text;
  }
}

std::string render(const Rational& r, const std::optional<int>& digits) {
  return digits ? r.str() + " (" + r.decimal(*digits) + ")" : r.str();
}

struct AllocateArgs {
  std::string input;
  std::optional<std::string> out;
  std::optional<std::string> certificate;
  std::optional<std::string> graph;
  bool baseline = false;
  std::optional<int> decimal;
};

int cmd_allocate(const AllocateArgs& a) {
  const Instance inst = load_valid_instance(a.input);
  PipelineOptions opts;
  opts.baseline = a.baseline;
  const PipelineResult r = allocate_with_subsidy(inst, opts);

  write_or_print(a.out, serialize_allocation(inst, r.allocation, r.subsidies, a.decimal));
  if (a.certificate) save_text(*a.certificate, export_certificate(r.certificate));
  if (a.graph) {
    // The forest lives on the bid-and-take agents; relabel with their names.
    Instance labels;
    for (AgentId i : r.fbta_agents) labels.agent_names.push_back(inst.agent_label(i));
    for (ItemId e = 0; e < r.ido_instance.items(); ++e) labels.item_names.push_back("e" + std::to_string(e + 1));
    labels.weights.resize(r.fbta_agents.size());
    save_text(*a.graph, to_dot(r.graph, &labels));
  }

  if (!r.certificate.holds()) {
    std::cerr << "certificate check failed:\n";
    for (const auto& f : r.certificate.failures()) std::cerr << "  " << f << "\n";
    return kFailed;
  }
  if (a.out) {
    std::cout << "total_subsidy " << render(r.subsidies.total, a.decimal) << " bound "
              << render(r.certificate.strong_bound.value_or(r.certificate.global_bound), a.decimal) << "\n";
  }
  return kOk;
}

int cmd_verify(const std::string& input, const std::string& allocation_path, const std::optional<int>& decimal) {
  const Instance inst = load_valid_instance(input);
  AllocationDocument doc;
  try {
    doc = parse_allocation(read_text(allocation_path));
  } catch (const ParseError& err) {
    throw InputError(allocation_path + ": " + err.what());
  } catch (const std::runtime_error& err) {
    throw InputError(err.what());
  }
  if (doc.allocation.items() != inst.items()) {
    throw InputError("allocation lists " + std::to_string(doc.allocation.items()) + " items, instance has " +
                     std::to_string(inst.items()));
  }
  for (ItemId e = 0; e < doc.allocation.items(); ++e) {
    const AgentId owner = doc.allocation.owner[e];
    if (owner == IntegralAllocation::kUnassigned) throw InputError("item " + inst.item_label(e) + " is unassigned");
    if (owner >= inst.agents()) throw InputError("item " + inst.item_label(e) + " goes to unknown agent " +
                                                 std::to_string(owner));
  }
  if (doc.subsidies && doc.subsidies->size() != inst.agents()) {
    throw InputError("allocation lists " + std::to_string(doc.subsidies->size()) + " subsidies, instance has " +
                     std::to_string(inst.agents()) + " agents");
  }

  const SubsidyVector minimum = compute_subsidies(inst, doc.allocation);
  const std::vector<Rational>& given = doc.subsidies ? *doc.subsidies : minimum.per_agent;
  bool ok = true;
  std::cout << "agent share bundle subsidy slack\n";
  for (AgentId i = 0; i < inst.agents(); ++i) {
    const Rational share = wprop_share(inst, i);
    const Rational bundle = bundle_cost(inst, doc.allocation, i);
    // slack >= 0 iff the WPROPS inequality holds for agent i
    const Rational slack = inst.kind == Kind::chores ? share + given[i] - bundle : bundle + given[i] - share;
    std::cout << inst.agent_label(i) << ' ' << render(share, decimal) << ' ' << render(bundle, decimal) << ' '
              << render(given[i], decimal) << ' ' << render(slack, decimal) << "\n";
    if (slack.sign() < 0 || given[i].sign() < 0) {
      ok = false;
      std::cerr << "violation: agent " << inst.agent_label(i) << " needs subsidy " << minimum.per_agent[i].str()
                << ", has " << given[i].str() << "\n";
    }
  }
  Rational total;
  for (const auto& s : given) total += s;
  std::cout << "total_subsidy " << render(total, decimal) << "\n";
  std::cout << "minimum_total_subsidy " << render(minimum.total, decimal) << "\n";
  return ok ? kOk : kFailed;
}

int cmd_oracle(const std::string& input, std::uint64_t cap, const std::optional<int>& decimal) {
  const Instance inst = load_valid_instance(input);
  const PipelineResult p = allocate_with_subsidy(inst);
  OracleOptions opts;
  opts.cap = cap;
  Rational optimum;
  std::uint64_t combinations = 1;
  if (!p.fbta_agents.empty()) {
    try {
      const OracleResult o = brute_force_rounding(p.ido_instance, p.fbta.allocation, opts);
      optimum = o.subsidies.total;
      combinations = o.combinations;
    } catch (const OracleCapExceeded& err) {
      std::cerr << "error: " << err.what() << "\n";
      return kCapExceeded;
    }
  }
  // Both values are over the bid-and-take agents on the sorted instance.
  const Rational pipeline = p.fbta_agents.empty() ? p.subsidies.total : p.ido_subsidies.total;
  std::cout << "combinations " << combinations << "\n";
  std::cout << "optimum " << render(optimum, decimal) << "\n";
  std::cout << "pipeline " << render(pipeline, decimal) << "\n";
  std::cout << "gap " << render(pipeline - optimum, decimal) << "\n";
  return kOk;
}

struct GenArgs {
  std::int64_t agents = 2;
  std::int64_t items = 2;
  std::string kind = "chores";
  std::uint64_t seed = 0;
  std::string dist = "uniform";
  std::string weights = "uniform";
  std::int64_t denominator = 10;
  std::optional<std::string> out;
};

int cmd_gen(const GenArgs& a) {
  if (a.agents <= 0) throw InputError("--agents must be positive");
  if (a.items < 0) throw InputError("--items must be non-negative");
  if (a.denominator <= 0) throw InputError("--denominator must be positive");
  GenParams p;
  p.agents = static_cast<std::size_t>(a.agents);
  p.items = static_cast<std::size_t>(a.items);
  try {
    p.kind = parse_kind(a.kind);
    p.costs = parse_cost_dist(a.dist);
  } catch (const std::invalid_argument& err) {
    throw InputError(err.what());
  }
  if (a.weights != "uniform" && a.weights != "equal") throw InputError("--weights must be uniform or equal");
  p.weights = a.weights == "equal" ? WeightDist::equal : WeightDist::uniform;
  p.denominator = a.denominator;
  p.seed = a.seed;
  write_or_print(a.out, serialize_instance(gen_random_instance(p)));
  return kOk;
}

struct BenchArgs {
  std::int64_t min_agents = 2;
  std::int64_t max_agents = 10;
  std::int64_t per_n = 20;
  std::string kind = "chores";
  std::string dist = "uniform";
  std::uint64_t seed = 0;
  bool baseline = false;
};

int cmd_bench(const BenchArgs& a) {
  if (a.min_agents <= 0 || a.max_agents < a.min_agents || a.per_n <= 0) {
    throw InputError("need 0 < --min-agents <= --max-agents and --per-n > 0");
  }
  GenParams p;
  try {
    p.kind = parse_kind(a.kind);
    p.costs = parse_cost_dist(a.dist);
  } catch (const std::invalid_argument& err) {
    throw InputError(err.what());
  }
  PipelineOptions opts;
  opts.baseline = a.baseline;
  std::cout << "n,m,seed,subsidy,bound\n";
  for (std::int64_t n = a.min_agents; n <= a.max_agents; ++n) {
    for (std::int64_t t = 0; t < a.per_n; ++t) {
      p.agents = static_cast<std::size_t>(n);
      p.items = static_cast<std::size_t>(2 * n);
      p.seed = a.seed + static_cast<std::uint64_t>(t);
      const Instance inst = gen_random_instance(p);
      const PipelineResult r = allocate_with_subsidy(inst, opts);
      std::cout << n << ',' << p.items << ',' << p.seed << ',' << r.subsidies.total.str() << ','
                << r.certificate.global_bound.str() << "\n";
      if (!r.certificate.holds()) return kFailed;
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted proportional allocations with subsidy"};
  app.require_subcommand(1);

  AllocateArgs alloc;
  auto* allocate = app.add_subcommand("allocate", "Run the pipeline on an instance");
  allocate->add_option("--input", alloc.input, "Instance file")->required();
  allocate->add_option("--out", alloc.out, "Allocation output (default stdout)");
  allocate->add_option("--certificate", alloc.certificate, "Write the rounding certificate");
  allocate->add_option("--emit-graph", alloc.graph, "Write the item-sharing forest as DOT");
  allocate->add_flag("--baseline", alloc.baseline, "Round every shared item to its largest holder");
  allocate->add_option("--decimal", alloc.decimal, "Also print decimals with this many digits")
      ->check(CLI::Range(0, 100));

  std::string verify_input;
  std::string verify_alloc;
  std::optional<int> verify_decimal;
  auto* verify = app.add_subcommand("verify", "Check an allocation against an instance");
  verify->add_option("--input", verify_input, "Instance file")->required();
  verify->add_option("--allocation", verify_alloc, "Allocation file")->required();
  verify->add_option("--decimal", verify_decimal, "Also print decimals")->check(CLI::Range(0, 100));

  std::string oracle_input;
  std::uint64_t oracle_cap = std::uint64_t{1} << 20;
  std::optional<int> oracle_decimal;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum over roundings of the fractional allocation");
  oracle->add_option("--input", oracle_input, "Instance file")->required();
  oracle->add_option("--cap", oracle_cap, "Maximum number of roundings")->capture_default_str();
  oracle->add_option("--decimal", oracle_decimal, "Also print decimals")->check(CLI::Range(0, 100));

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--agents", gen_args.agents, "Agent count")->required();
  gen->add_option("--items", gen_args.items, "Item count")->required();
  gen->add_option("--kind", gen_args.kind, "chores or goods")->capture_default_str();
  gen->add_option("--seed", gen_args.seed, "Random seed")->capture_default_str();
  gen->add_option("--dist", gen_args.dist, "uniform, correlated or ido")->capture_default_str();
  gen->add_option("--weights", gen_args.weights, "uniform or equal")->capture_default_str();
  gen->add_option("--denominator", gen_args.denominator, "Costs are multiples of 1/D")->capture_default_str();
  gen->add_option("--out", gen_args.out, "Output file (default stdout)");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "CSV of subsidy and bound over random instances");
  bench->add_option("--min-agents", bench_args.min_agents, "Smallest n")->capture_default_str();
  bench->add_option("--max-agents", bench_args.max_agents, "Largest n")->capture_default_str();
  bench->add_option("--per-n", bench_args.per_n, "Instances per n")->capture_default_str();
  bench->add_option("--kind", bench_args.kind, "chores or goods")->capture_default_str();
  bench->add_option("--dist", bench_args.dist, "Cost distribution")->capture_default_str();
  bench->add_option("--seed", bench_args.seed, "First seed")->capture_default_str();
  bench->add_flag("--baseline", bench_args.baseline, "Use argmax rounding");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*allocate) return cmd_allocate(alloc);
    if (*verify) return cmd_verify(verify_input, verify_alloc, verify_decimal);
    if (*oracle) return cmd_oracle(oracle_input, oracle_cap, oracle_decimal);
    if (*gen) return cmd_gen(gen_args);
    if (*bench) return cmd_bench(bench_args);
  } catch (const InputError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kBadInput;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kFailed;
  }
  return kOk;
}

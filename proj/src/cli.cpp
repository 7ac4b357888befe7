#include "cycleflow/cli.hpp"

#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cycleflow/dominance.hpp"
#include "cycleflow/errors.hpp"
#include "cycleflow/explorer.hpp"
#include "cycleflow/model.hpp"
#include "cycleflow/sampling.hpp"

namespace cycleflow::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot read file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void print_witness(std::ostream& out, const DominanceWitness& witness) {
  out << "witness " << witness.commodity << " " << witness.path.start() << " "
      << witness.path.end() << "\n";
}

int cmd_check(const std::string& instance_path, const std::string& flow_path,
              const std::string& prime_path, const std::string& method, std::ostream& out,
              std::ostream& err) {
  const CycleInstance instance = parse_instance(read_file(instance_path));
  const FlowAssignment flow = parse_flow(read_file(flow_path), instance);
  const FlowAssignment flow_prime = parse_flow(read_file(prime_path), instance);

  if (method == "constructive") {
    if (instance.commodity_count() > 2) {
      err << "check: --method constructive covers one or two commodities only; with three "
             "or more no dominating path is guaranteed (the paper-k3 subcommand shows a "
             "three-commodity pair without one)\n";
      return 2;
    }
    print_witness(out, witness_constructive(instance, flow, flow_prime));
    return 0;
  }

  const std::vector<DominanceWitness> witnesses =
      witnesses_bruteforce(instance, flow, flow_prime);
  if (!witnesses.empty()) {
    for (const DominanceWitness& witness : witnesses) print_witness(out, witness);
    return 0;
  }
  const auto certificate = check_violation(instance, flow, flow_prime);
  out << "violation\n";
  for (const ViolationEntry& entry : certificate->entries) {
    out << "cert " << entry.commodity << " " << entry.path.start() << " " << entry.path.end()
        << " " << entry.edge << " " << format_rational(entry.flow_on_edge) << " "
        << format_rational(entry.flow_prime_on_edge) << "\n";
  }
  return 1;
}

int cmd_search(const std::string& instance_path, bool use_grid, const std::string& step_text,
               std::uint64_t trials, std::uint64_t seed, int denominator_bound, int threads,
               std::ostream& out) {
  const CycleInstance instance = parse_instance(read_file(instance_path));
  const SearchReport report =
      use_grid ? search_grid(instance, parse_rational(step_text), threads)
               : search_random(instance, trials, seed, denominator_bound, threads);
  out << serialize_report(report);
  return report.violations.empty() ? 0 : 1;
}

int cmd_paper_k3(std::ostream& out, std::ostream& err) {
  const CounterexampleK3 cex = counterexample_k3();
  const EdgeFlowProfile f = edge_flows(cex.instance, cex.flow);
  const EdgeFlowProfile f_prime = edge_flows(cex.instance, cex.flow_prime);

  bool verified = true;
  for (int j = 0; j < 6; ++j) {
    verified = verified && f[static_cast<std::size_t>(j)] == Rational(j % 2 == 0 ? 5 : 4);
    verified = verified && f_prime[static_cast<std::size_t>(j)] == Rational(j % 2 == 0 ? 4 : 5);
  }
  verified = verified && witnesses_bruteforce(cex.instance, cex.flow, cex.flow_prime).empty();
  verified = verified && witnesses_bruteforce(cex.instance, cex.flow_prime, cex.flow).empty();
  verified = verified && check_violation(cex.instance, cex.flow, cex.flow_prime).has_value();
  verified = verified && check_violation(cex.instance, cex.flow_prime, cex.flow).has_value();

  const auto row = [&out](const std::string& name, const std::vector<std::string>& cells) {
    std::string line = name;
    line.append(8 - name.size(), ' ');
    for (std::size_t c = 0; c < cells.size(); ++c) {
      line += cells[c];
      if (c + 1 < cells.size()) line += ' ';
    }
    out << line << "\n";
  };

  std::vector<std::string> labels, row_f, row_f_prime;
  for (int j = 0; j < 6; ++j) {
    labels.push_back(std::to_string(j + 1));
    row_f.push_back(format_rational(f[static_cast<std::size_t>(j)]));
    row_f_prime.push_back(format_rational(f_prime[static_cast<std::size_t>(j)]));
  }
  row("j", labels);
  row("f(e_j)", row_f);
  row("f'(e_j)", row_f_prime);
  if (!verified) {
    err << "paper-k3: internal verification failed\n";
    return 1;
  }
  out << "no dominating path in either direction\n";
  return 0;
}

int cmd_verify(int k, std::uint64_t trials, std::uint64_t seed, int max_n,
               int denominator_bound, std::ostream& out) {
  const auto failure = verification_campaign(k, trials, seed, max_n, denominator_bound);
  if (!failure) {
    out << "verified k=" << k << " trials=" << trials << " seed=" << seed << " max-n=" << max_n
        << ": every sampled pair admits a dominating path; constructed witnesses contained\n";
    return 0;
  }
  out << "failure at trial " << failure->trial << ": " << failure->reason << "\n";
  out << serialize_instance(failure->instance);
  out << serialize_flow(failure->flow);
  out << serialize_flow(failure->flow_prime);
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact two-path flows on an undirected cycle: dominance witnesses, "
               "violation search, and reproduction of the three-commodity pair"};
  app.name("cycleflow");
  app.footer("Edge labels: tables print 1-based e_1..e_n; files and reports use 0-based "
             "edges, edge j joining vertices j and (j+1) mod n, so e_j is edge j-1.");
  app.require_subcommand(1);

  std::string instance_path;
  std::string flow_path;
  std::string prime_path;
  std::string method = "brute";
  std::string step_text;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  int denominator_bound = kDefaultDenominatorBound;
  int threads = 1;
  int k = 0;
  int max_n = 12;

  CLI::App* check = app.add_subcommand(
      "check", "Decide whether flow dominates flow-prime along some used path");
  check->add_option("--instance", instance_path, "instance file")->required();
  check->add_option("--flow", flow_path, "flow file for f")->required();
  check->add_option("--flow-prime", prime_path, "flow file for f'")->required();
  check->add_option("--method", method, "brute or constructive")
      ->check(CLI::IsMember({"brute", "constructive"}));

  CLI::App* search = app.add_subcommand(
      "search", "Hunt for flow pairs admitting no dominating path");
  search->add_option("--instance", instance_path, "instance file")->required();
  CLI::Option* grid_opt =
      search->add_option("--grid-step", step_text, "enumerate amounts spaced by this rational");
  CLI::Option* random_opt = search->add_flag("--random", "sample flow pairs instead");
  CLI::Option* trials_opt = search->add_option("--trials", trials, "number of sampled pairs");
  CLI::Option* seed_opt = search->add_option("--seed", seed, "sampling seed");
  search->add_option("--denominator-bound", denominator_bound,
                     "amounts are demand * j / bound in random mode");
  search->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  grid_opt->excludes(random_opt);
  random_opt->needs(trials_opt);
  random_opt->needs(seed_opt);
  trials_opt->needs(random_opt);
  seed_opt->needs(random_opt);

  app.add_subcommand("paper-k3",
                     "Print the published three-commodity table and confirm that neither "
                     "direction has a dominating path");

  CLI::App* verify = app.add_subcommand(
      "verify", "Randomized verification that every flow pair admits a dominating path");
  verify->add_option("--k", k, "number of commodities (1 or 2)")->required();
  verify->add_option("--trials", trials, "number of sampled pairs");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--max-n", max_n, "largest cycle size sampled");
  verify->add_option("--denominator-bound", denominator_bound,
                     "demand and flow denominators stay within this bound");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("cycleflow");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_storage.size());
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& parse_error) {
    const int code = app.exit(parse_error, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("check")) {
      return cmd_check(instance_path, flow_path, prime_path, method, out, err);
    }
    if (app.got_subcommand("search")) {
      const bool use_grid = grid_opt->count() > 0;
      if (!use_grid && random_opt->count() == 0) {
        err << "search: one of --grid-step or --random is required\n";
        return 2;
      }
      return cmd_search(instance_path, use_grid, step_text, trials, seed, denominator_bound,
                        threads, out);
    }
    if (app.got_subcommand("paper-k3")) {
      return cmd_paper_k3(out, err);
    }
    // verify
    if (k != 1 && k != 2) {
      err << "verify: the dominance guarantee covers --k 1 and --k 2 only\n";
      return 2;
    }
    if (max_n < 3) {
      err << "verify: --max-n must be at least 3\n";
      return 2;
    }
    return cmd_verify(k, trials, seed, max_n, denominator_bound, out);
  } catch (const Error& error) {
    err << "error: " << error.what() << "\n";
    return 2;
  } catch (const std::exception& error) {
    err << "internal error: " << error.what() << "\n";
    return 2;
  }
}

}  // namespace cycleflow::cli

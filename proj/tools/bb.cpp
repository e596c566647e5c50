// bb: experiment and simulation front end.
#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bubbleblue/analysis.hpp"
#include "bubbleblue/crypto.hpp"
#include "bubbleblue/sim.hpp"

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kRuntime = 1;
constexpr int kInvalid = 2;

struct Invalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t seed_or_env(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("BB_SEED")) {
    try {
      std::size_t pos = 0;
      auto v = std::stoull(env, &pos);
      if (pos == std::string(env).size()) return v;
    } catch (const std::logic_error&) {
    }
    throw Invalid(fmt::format("BB_SEED is not an unsigned integer: '{}'", env));
  }
  return 1;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> parse_lambdas(const std::string& list) {
  std::vector<double> out;
  for (const auto& item : split(list, ',')) {
    try {
      std::size_t pos = 0;
      double v = std::stod(item, &pos);
      if (pos != item.size() || !(v > 0.0)) throw Invalid("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw Invalid(fmt::format("bad density '{}'", item));
    }
  }
  if (out.empty()) throw Invalid("--lambda needs at least one value");
  return out;
}

bb::Placement parse_placement(const std::string& s) {
  if (s == "fixed-n") return bb::Placement::fixed_n;
  if (s == "poisson") return bb::Placement::poisson;
  throw Invalid("placement must be fixed-n or poisson");
}

bb::DeploymentSpec parse_deployment(const std::string& text, std::uint64_t seed) {
  bb::DeploymentSpec d;
  d.seed = seed;
  for (const auto& kv : split(text, ',')) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw Invalid("--spec expects key=value pairs, got " + kv);
    const std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
    try {
      if (k == "dim") d.dimension = std::stoi(v);
      else if (k == "ell") d.length = std::stod(v);
      else if (k == "lambda") d.density = std::stod(v);
      else if (k == "seed") d.seed = std::stoull(v);
      else if (k == "placement") d.placement = parse_placement(v);
      else throw Invalid("unknown --spec key " + k);
    } catch (const std::logic_error&) {
      throw Invalid(fmt::format("bad value for {}: {}", k, v));
    }
  }
  return d;
}

bb::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Invalid("cannot open graph file " + path);
  return bb::read_graph(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bluetooth bubble protocol simulator and CDS experiments"};
  app.require_subcommand(1);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Monte-Carlo sweep; CSV on stdout");
  int dim = 1;
  double ell = 10.0;
  std::string lambdas = "5,10,20";
  std::size_t trials = 100;
  std::string algos = "wu-li,mpr-cds";
  std::optional<std::uint64_t> seed;
  bool valve = false;
  std::size_t cap = 18;
  unsigned jobs = 0;
  std::string placement = "fixed-n";
  bool slopes = false;
  std::string out_path;
  sweep_cmd->add_option("--dim", dim, "Dimension, 1 or 2")->capture_default_str();
  sweep_cmd->add_option("--ell", ell, "Region length")->capture_default_str();
  sweep_cmd->add_option("--lambda", lambdas, "Comma-separated node densities")->capture_default_str();
  sweep_cmd->add_option("--trials", trials, "Trials per density")->capture_default_str();
  sweep_cmd->add_option("--algos", algos, "Comma-separated: wu-li, mpr-cds, optimal")->capture_default_str();
  sweep_cmd->add_option("--seed", seed, "Seed base (falls back to BB_SEED, then 1)");
  sweep_cmd->add_flag("--valve", valve, "Measure flooding with the check valve");
  sweep_cmd->add_option("--cap", cap, "Largest lambda*ell given to the exact solver")->capture_default_str();
  sweep_cmd->add_option("--jobs", jobs, "Worker threads, 0 = available parallelism")->capture_default_str();
  sweep_cmd->add_option("--placement", placement, "fixed-n or poisson")->capture_default_str();
  sweep_cmd->add_flag("--slopes", slopes, "Also report degree-sum slopes on stderr (1D)");
  sweep_cmd->add_option("--out", out_path, "Write the CSV here instead of stdout");

  // scenario
  auto* scenario_cmd = app.add_subcommand("scenario", "Run a scripted scenario and print its trace");
  std::string scenario_path;
  bool summary_only = false;
  scenario_cmd->add_option("file", scenario_path, "Scenario file")->required();
  scenario_cmd->add_flag("--summary", summary_only, "Print only metrics and the trace hash");

  // keygen
  auto* keygen_cmd = app.add_subcommand("keygen", "Generate a key matrix and write one column file per member");
  std::size_t members = 0;
  std::string out_dir;
  keygen_cmd->add_option("--n", members, "Number of members (1..50); member 0 is the leader")->required();
  keygen_cmd->add_option("--seed", seed, "Seed (falls back to BB_SEED, then 1)");
  keygen_cmd->add_option("--out-dir", out_dir, "Output directory")->required();

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "Sample a connected unit disk graph");
  std::string spec_text = "dim=1,ell=10,lambda=3";
  std::string graph_out;
  graph_cmd->add_option("--spec", spec_text, "dim=,ell=,lambda=[,seed=][,placement=]")->capture_default_str();
  graph_cmd->add_option("--seed", seed, "Seed when --spec has none (falls back to BB_SEED, then 1)");
  graph_cmd->add_option("--out", graph_out, "Output file (default stdout)");

  // flood
  auto* flood_cmd = app.add_subcommand("flood", "Elect a CDS on a graph file and report flooding cost");
  std::string graph_path;
  std::string cds_algo = "wu-li";
  flood_cmd->add_option("--graph", graph_path, "Graph file")->required();
  flood_cmd->add_option("--cds-algo", cds_algo, "wu-li, mpr-cds or optimal")->capture_default_str();
  flood_cmd->add_flag("--valve", valve, "Enable the check valve");

  // valve
  auto* valve_cmd = app.add_subcommand("valve", "Check-valve saving ratio sweep; CSV on stdout");
  valve_cmd->add_option("--dim", dim, "Dimension, 1 or 2")->capture_default_str();
  valve_cmd->add_option("--ell", ell, "Region length")->capture_default_str();
  valve_cmd->add_option("--lambda", lambdas, "Comma-separated node densities")->capture_default_str();
  valve_cmd->add_option("--trials", trials, "Trials per density")->capture_default_str();
  valve_cmd->add_option("--algos", algos, "Comma-separated algorithms")->capture_default_str();
  valve_cmd->add_option("--seed", seed, "Seed base (falls back to BB_SEED, then 1)");
  valve_cmd->add_option("--jobs", jobs, "Worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  auto make_sweep_spec = [&] {
    bb::SweepSpec s;
    s.dimension = dim;
    s.length = ell;
    s.densities = parse_lambdas(lambdas);
    s.trials = trials;
    s.algorithms.clear();
    for (const auto& a : split(algos, ',')) s.algorithms.push_back(bb::parse_cds_algorithm(a));
    s.check_valve = valve;
    s.solver_cap = cap;
    s.seed = seed_or_env(seed);
    s.placement = parse_placement(placement);
    s.jobs = jobs;
    if (s.dimension != 1 && s.dimension != 2) throw Invalid("--dim must be 1 or 2");
    if (!(s.length > 0.0)) throw Invalid("--ell must be positive");
    if (s.trials == 0) throw Invalid("--trials must be positive");
    if (s.algorithms.empty()) throw Invalid("--algos is empty");
    return s;
  };

  try {
    if (*sweep_cmd) {
      auto spec = make_sweep_spec();
      auto result = bb::sweep(spec);
      if (out_path.empty()) {
        bb::write_csv(std::cout, result.rows);
      } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        bb::write_csv(out, result.rows);
      }
      if (slopes) {
        std::vector<bb::SweepRow> heuristic;
        for (const auto& r : result.rows) {
          if (r.algorithm != bb::CdsAlgorithm::optimal) heuristic.push_back(r);
        }
        for (const auto& fit : bb::degree_sum_slopes(heuristic)) {
          std::cerr << fmt::format("{}: slope {:.4f} = {:.4f} ell", bb::to_string(fit.algorithm), fit.slope,
                                   fit.per_length);
          if (fit.expected_per_length) {
            std::cerr << fmt::format(" (expected {:.1f} ell, off by {:.2f}%)", *fit.expected_per_length,
                                     100.0 * *fit.relative_error);
          }
          std::cerr << '\n';
        }
      }
    } else if (*scenario_cmd) {
      bb::Simulator sim(bb::load_scenario(scenario_path));
      sim.run();
      if (!summary_only) std::cout << sim.trace_text();
      const auto& m = sim.metrics();
      std::cout << fmt::format(
          "# unicasts={} received={} lost={} deliveries={} duplicates={} arq_sent={} arq_answered={} conserved={}\n",
          m.unicasts, m.receptions, m.losses, m.deliveries, m.duplicates, m.arq_sent, m.arq_answered,
          m.conserved() ? "yes" : "no");
      std::cout << "# trace-sha256 " << sim.trace_hash() << '\n';
    } else if (*keygen_cmd) {
      if (members == 0 || members > bb::kMaxMembers) throw Invalid(fmt::format("--n must be in 1..{}", bb::kMaxMembers));
      bb::Drbg rng(seed_or_env(seed));
      auto matrix = bb::generate_matrix(members, rng);
      std::filesystem::create_directories(out_dir);
      for (std::size_t j = 0; j < members; ++j) {
        auto path = std::filesystem::path(out_dir) / fmt::format("member-{:02}.bbk", j);
        bb::write_column_file(path.string(), bb::column_for(matrix, j));
        std::cout << path.string() << (j == 0 ? " leader" : "") << '\n';
      }
    } else if (*graph_cmd) {
      auto d = parse_deployment(spec_text, seed_or_env(seed));
      auto sample = bb::generate_connected(d);
      if (graph_out.empty()) {
        bb::write_graph(std::cout, sample.graph);
      } else {
        std::ofstream out(graph_out);
        if (!out) throw std::runtime_error("cannot write " + graph_out);
        bb::write_graph(out, sample.graph);
      }
      std::cerr << fmt::format("n={} edges={} resamples={}\n", sample.graph.size(), sample.graph.edge_count(),
                               sample.resamples);
    } else if (*flood_cmd) {
      auto g = load_graph(graph_path);
      auto r = bb::elect(g, bb::parse_cds_algorithm(cds_algo));
      auto formula = bb::flooding_cost_formula(g, r.members);
      auto measured = bb::average_flood_cost(g, r.members, valve);
      std::cout << bb::to_line(r) << '\n';
      std::cout << fmt::format("formula {}/{} = {:.6f}\n", formula.numerator(), formula.denominator(),
                               bb::to_double(formula));
      std::cout << fmt::format("measured{} {}/{} = {:.6f}\n", valve ? " (valve)" : "", measured.numerator(),
                               measured.denominator(), bb::to_double(measured));
    } else if (*valve_cmd) {
      auto spec = make_sweep_spec();
      std::cout << "dim,ell,lambda,algorithm,trials,mean_ratio,ci95\n";
      for (const auto& r : bb::check_valve_ratio(spec)) {
        std::cout << fmt::format("{},{:g},{:g},{},{},{:.6f},{:.6f}\n", dim, ell, r.lambda, bb::to_string(r.algorithm),
                                 r.trials, r.mean_ratio, r.ci95);
      }
    }
  } catch (const Invalid& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const bb::GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const bb::CdsError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const bb::ScenarioError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const bb::AnalysisError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kOk;
}

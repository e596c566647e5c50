#include "bubbleblue/analysis.hpp"

#include <fmt/format.h>

#include <atomic>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <thread>

namespace bb {

namespace {

void validate_spec(const SweepSpec& spec) {
  if (spec.dimension != 1 && spec.dimension != 2) throw AnalysisError("dimension must be 1 or 2");
  if (!(spec.length > 0.0)) throw AnalysisError("length must be positive");
  if (spec.densities.empty()) throw AnalysisError("no densities given");
  for (double l : spec.densities) {
    if (!(l > 0.0)) throw AnalysisError("densities must be positive");
  }
  if (spec.trials == 0) throw AnalysisError("need at least one trial");
  if (spec.algorithms.empty()) throw AnalysisError("no algorithms given");
}

/// Runs task(i) for i in [0, count) on a small worker pool.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

DeploymentSpec deployment_for(const SweepSpec& spec, std::size_t lambda_index, std::size_t trial) {
  DeploymentSpec d;
  d.dimension = spec.dimension;
  d.length = spec.length;
  d.density = spec.densities[lambda_index];
  d.placement = spec.placement;
  d.seed = spec.seed * 0x100000001B3ULL + lambda_index * 1000003ULL + trial;
  return d;
}

bool optimal_allowed(const SweepSpec& spec, double lambda) {
  return lambda * spec.length <= static_cast<double>(spec.solver_cap) + 1e-9;
}

Rational non_member_degree_share(const Graph& g, const NodeSet& cds) {
  long long sum = 0;
  for (NodeId u = 0; u < g.size(); ++u) {
    if (!cds.count(u)) sum += static_cast<long long>(degree(g, u));
  }
  return Rational(sum, static_cast<long long>(g.size()));
}

}  // namespace

double mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double ci95_half_width(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  const double sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  return 1.96 * sd / std::sqrt(static_cast<double>(xs.size()));
}

double cds_density(const Graph& g, const NodeSet& cds) {
  if (g.dimension() == 1) {
    const double ell = g.length();
    if (ell <= 2.0) return static_cast<double>(cds.size()) / ell;
    std::size_t inside = 0;
    for (NodeId u : cds) {
      const double x = g.position(u).x;
      if (x >= 1.0 && x <= ell - 1.0) ++inside;
    }
    return static_cast<double>(inside) / (ell - 2.0);
  }
  return static_cast<double>(cds.size()) / g.length();
}

SweepResult sweep(const SweepSpec& spec) {
  validate_spec(spec);
  const std::size_t per_lambda = spec.trials;
  const std::size_t total = spec.densities.size() * per_lambda;
  std::vector<TrialRecord> records(total);

  parallel_for(total, spec.jobs, [&](std::size_t index) {
    const std::size_t li = index / per_lambda;
    const std::size_t trial = index % per_lambda;
    const double lambda = spec.densities[li];
    auto sample = generate_connected(deployment_for(spec, li, trial));
    const Graph& g = sample.graph;
    TrialRecord rec;
    rec.density = lambda;
    rec.trial = trial;
    rec.nodes = g.size();
    rec.edges = g.edge_count();
    rec.resamples = sample.resamples;
    for (auto algo : spec.algorithms) {
      if (algo == CdsAlgorithm::optimal && !optimal_allowed(spec, lambda)) continue;
      SolverOptions options;
      options.max_nodes = spec.solver_cap;
      CdsResult r = elect(g, algo, options);
      TrialStats st;
      st.size = r.size;
      st.degree_sum = r.degree_sum;
      st.density = cds_density(g, r.members);
      st.formula = flooding_cost_formula(g, r.members);
      st.measured = average_flood_cost(g, r.members, spec.check_valve);
      rec.stats.emplace(algo, st);
    }
    records[index] = std::move(rec);
  });

  SweepResult result;
  for (std::size_t li = 0; li < spec.densities.size(); ++li) {
    const double lambda = spec.densities[li];
    for (auto algo : spec.algorithms) {
      if (algo == CdsAlgorithm::optimal && !optimal_allowed(spec, lambda)) continue;
      std::vector<double> sizes, densities, degsums, formula, measured;
      bool matches = true;
      for (std::size_t t = 0; t < per_lambda; ++t) {
        const auto& st = records[li * per_lambda + t].stats.at(algo);
        sizes.push_back(static_cast<double>(st.size));
        densities.push_back(st.density);
        degsums.push_back(static_cast<double>(st.degree_sum));
        formula.push_back(to_double(st.formula));
        measured.push_back(to_double(st.measured));
        if (!spec.check_valve && st.formula != st.measured) matches = false;
      }
      SweepRow row;
      row.dimension = spec.dimension;
      row.length = spec.length;
      row.lambda = lambda;
      row.algorithm = algo;
      row.trials = per_lambda;
      row.mean_size = mean(sizes);
      row.mean_density = mean(densities);
      row.mean_degsum = mean(degsums);
      row.flood_formula = mean(formula);
      row.flood_measured = mean(measured);
      row.ci95 = ci95_half_width(sizes);
      row.formula_matches = matches;
      result.rows.push_back(row);
    }
  }
  result.trials = std::move(records);
  return result;
}

std::string csv_header() {
  return "dim,ell,lambda,algorithm,trials,mean_size,mean_density,mean_degsum,flood_formula,flood_measured,ci95";
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << csv_header() << '\n';
  for (const auto& r : rows) {
    out << fmt::format("{},{:g},{:g},{},{},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f}\n", r.dimension, r.length,
                       r.lambda, to_string(r.algorithm), r.trials, r.mean_size, r.mean_density, r.mean_degsum,
                       r.flood_formula, r.flood_measured, r.ci95);
  }
}

std::vector<SlopeFit> degree_sum_slopes(const std::vector<SweepRow>& rows) {
  std::map<CdsAlgorithm, std::vector<const SweepRow*>> by_algo;
  for (const auto& r : rows) {
    if (r.dimension != 1) throw AnalysisError("slope fit needs one-dimensional rows");
    by_algo[r.algorithm].push_back(&r);
  }
  std::vector<SlopeFit> fits;
  for (const auto& [algo, list] : by_algo) {
    if (list.size() < 3) throw AnalysisError(fmt::format("slope fit for {} needs at least three densities", to_string(algo)));
    const double ell = list.front()->length;
    double mx = 0, my = 0;
    for (auto* r : list) {
      if (r->length != ell) throw AnalysisError("slope fit rows must share one length");
      mx += r->lambda;
      my += r->mean_degsum;
    }
    mx /= static_cast<double>(list.size());
    my /= static_cast<double>(list.size());
    double sxy = 0, sxx = 0;
    for (auto* r : list) {
      sxy += (r->lambda - mx) * (r->mean_degsum - my);
      sxx += (r->lambda - mx) * (r->lambda - mx);
    }
    if (sxx == 0.0) throw AnalysisError("slope fit needs distinct densities");
    SlopeFit fit;
    fit.algorithm = algo;
    fit.slope = sxy / sxx;
    fit.per_length = fit.slope / ell;
    if (algo == CdsAlgorithm::wu_li_1999) fit.expected_per_length = 4.0;
    if (algo == CdsAlgorithm::mpr_cds) fit.expected_per_length = 3.0;
    if (fit.expected_per_length) {
      fit.relative_error = std::abs(fit.per_length - *fit.expected_per_length) / *fit.expected_per_length;
    }
    fits.push_back(fit);
  }
  return fits;
}

std::vector<ValveRow> check_valve_ratio(const SweepSpec& spec) {
  validate_spec(spec);
  const std::size_t total = spec.densities.size() * spec.trials;
  // ratios[index][algorithm position]
  std::vector<std::vector<std::optional<double>>> ratios(total);
  parallel_for(total, spec.jobs, [&](std::size_t index) {
    const std::size_t li = index / spec.trials;
    const std::size_t trial = index % spec.trials;
    const double lambda = spec.densities[li];
    Graph g = generate_connected(deployment_for(spec, li, trial)).graph;
    std::vector<std::optional<double>> out;
    for (auto algo : spec.algorithms) {
      if (algo == CdsAlgorithm::optimal && !optimal_allowed(spec, lambda)) {
        out.emplace_back();
        continue;
      }
      SolverOptions options;
      options.max_nodes = spec.solver_cap;
      CdsResult r = elect(g, algo, options);
      if (r.degree_sum == 0) {
        out.emplace_back();
        continue;
      }
      Rational valve = average_flood_cost(g, r.members, true);
      Rational ratio = (valve - non_member_degree_share(g, r.members)) /
                       Rational(static_cast<long long>(r.degree_sum));
      out.push_back(to_double(ratio));
    }
    ratios[index] = std::move(out);
  });
  std::vector<ValveRow> rows;
  for (std::size_t li = 0; li < spec.densities.size(); ++li) {
    for (std::size_t a = 0; a < spec.algorithms.size(); ++a) {
      std::vector<double> xs;
      for (std::size_t t = 0; t < spec.trials; ++t) {
        if (auto v = ratios[li * spec.trials + t][a]) xs.push_back(*v);
      }
      if (xs.empty()) continue;
      rows.push_back({spec.algorithms[a], spec.densities[li], xs.size(), mean(xs), ci95_half_width(xs)});
    }
  }
  return rows;
}

}  // namespace bb

// Monte-Carlo sweeps over deployments: CDS size, density, degree sum and
// flooding cost per algorithm and node density.
#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bubbleblue/cds.hpp"
#include "bubbleblue/flood.hpp"
#include "bubbleblue/udg.hpp"

namespace bb {

class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepSpec {
  int dimension = 1;
  double length = 10.0;
  std::vector<double> densities;
  std::size_t trials = 100;
  std::vector<CdsAlgorithm> algorithms{CdsAlgorithm::wu_li_1999, CdsAlgorithm::mpr_cds};
  bool check_valve = false;       // measure flooding with the valve on
  std::size_t solver_cap = 18;    // optimal only where lambda * ell <= cap
  std::uint64_t seed = 1;
  Placement placement = Placement::fixed_n;
  unsigned jobs = 0;              // 0 = hardware concurrency
};

/// Per-trial numbers for one algorithm on one graph.
struct TrialStats {
  std::size_t size = 0;
  double density = 0.0;
  std::size_t degree_sum = 0;
  Rational formula;
  Rational measured;
};

struct TrialRecord {
  double density = 0.0;  // lambda
  std::size_t trial = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t resamples = 0;
  std::map<CdsAlgorithm, TrialStats> stats;
};

struct SweepRow {
  int dimension = 1;
  double length = 0.0;
  double lambda = 0.0;
  CdsAlgorithm algorithm = CdsAlgorithm::wu_li_1999;
  std::size_t trials = 0;
  double mean_size = 0.0;
  double mean_density = 0.0;
  double mean_degsum = 0.0;
  double flood_formula = 0.0;
  double flood_measured = 0.0;
  double ci95 = 0.0;  // half-width on mean_size
  bool formula_matches = true;  // exact per-trial agreement (valve off only)
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<TrialRecord> trials;
};

/// Deterministic for a given spec regardless of the worker count.
SweepResult sweep(const SweepSpec& spec);

/// CDS members per unit length (1D: interior [1, ell-1]) or area (2D).
double cds_density(const Graph& g, const NodeSet& cds);

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::string csv_header();

struct SlopeFit {
  CdsAlgorithm algorithm = CdsAlgorithm::wu_li_1999;
  double slope = 0.0;        // d(mean degree sum) / d(lambda)
  double per_length = 0.0;   // slope / ell
  std::optional<double> expected_per_length;
  std::optional<double> relative_error;
};

/// Least-squares slope of mean degree sum against lambda, per algorithm.
/// Requires 1D rows and at least three densities.
std::vector<SlopeFit> degree_sum_slopes(const std::vector<SweepRow>& rows);

struct ValveRow {
  CdsAlgorithm algorithm = CdsAlgorithm::wu_li_1999;
  double lambda = 0.0;
  std::size_t trials = 0;
  double mean_ratio = 0.0;
  double ci95 = 0.0;
};

/// Mean of (valve cost - (1/n) sum of non-member degrees) / deg(V') per row.
std::vector<ValveRow> check_valve_ratio(const SweepSpec& spec);

double mean(const std::vector<double>& xs);
double ci95_half_width(const std::vector<double>& xs);

}  // namespace bb

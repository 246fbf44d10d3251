#include "queens/lp.hpp"

#include "queens/rng.hpp"
#include "queens/simplex.hpp"
#include "queens/solver.hpp"

#include <map>
#include <stdexcept>

namespace queens {

namespace {

using lpcore::BoundedSimplex;
using lpcore::ColStatus;
using lpcore::LpResult;
using lpcore::LpStatus;
using lpcore::Problem;

constexpr std::uint64_t kFloatPivotCap = 4'000'000;
constexpr std::uint64_t kExactPivotCap = 500'000;

void check_limits(const PartialConfig& cfg, const LpLimits& limits) {
  if (cfg.n() < 1) throw std::invalid_argument("LP needs a board of size >= 1");
  if (cfg.n() > limits.max_n)
    throw std::invalid_argument("board size " + std::to_string(cfg.n()) +
                                " exceeds the LP ceiling " + std::to_string(limits.max_n));
}

// Shared index structure for the packing LP and its dual cover LP, so the
// double and rational instances line up column for column.
struct LpShape {
  int n = 0;
  std::vector<Square> lambda;                    // unattacked squares
  std::vector<std::size_t> line_ordinals;        // lines meeting lambda
  std::vector<std::vector<int>> squares_of_line; // per line: indices into lambda
  std::vector<std::vector<int>> lines_of_square; // per square: indices into line_ordinals
};

LpShape make_shape(const PartialConfig& cfg) {
  LpShape shape;
  shape.n = cfg.n();
  shape.lambda = unattacked(cfg);
  std::map<std::size_t, int> line_index;
  shape.lines_of_square.resize(shape.lambda.size());
  for (std::size_t v = 0; v < shape.lambda.size(); ++v) {
    for (LineId line : lines_through(shape.lambda[v], shape.n)) {
      const std::size_t ord = line_ordinal(line, shape.n);
      auto [it, fresh] = line_index.try_emplace(ord, static_cast<int>(shape.line_ordinals.size()));
      if (fresh) {
        shape.line_ordinals.push_back(ord);
        shape.squares_of_line.emplace_back();
      }
      shape.squares_of_line[it->second].push_back(static_cast<int>(v));
      shape.lines_of_square[v].push_back(it->second);
    }
  }
  return shape;
}

// maximize sum x_s  s.t.  per line: sum of its squares <= 1, x >= 0
template <class T>
Problem<T> build_packing(const LpShape& shape) {
  Problem<T> p;
  p.num_vars = static_cast<int>(shape.lambda.size());
  p.objective.assign(p.num_vars, T(1));
  p.upper.assign(p.num_vars, std::nullopt);
  for (const auto& members : shape.squares_of_line) {
    typename Problem<T>::Row row;
    for (int v : members) row.coeffs.emplace_back(v, T(1));
    row.rhs = T(1);
    p.rows.push_back(std::move(row));
  }
  return p;
}

// minimize sum w_L  s.t.  per square: sum of its 4 lines >= 1, 0 <= w <= 1,
// phrased as maximize -sum w with rows negated. Feasible from the all-ones
// start, so the solver begins with every w at its upper bound.
template <class T>
Problem<T> build_cover(const LpShape& shape) {
  Problem<T> p;
  p.num_vars = static_cast<int>(shape.line_ordinals.size());
  p.objective.assign(p.num_vars, T(-1));
  p.upper.assign(p.num_vars, T(1));
  for (const auto& lines : shape.lines_of_square) {
    typename Problem<T>::Row row;
    for (int w : lines) row.coeffs.emplace_back(w, T(-1));
    row.rhs = T(-1);
    p.rows.push_back(std::move(row));
  }
  p.start_at_upper = true;
  return p;
}

// Float search first, exact reconstruction of its basis second, cold exact
// solve as the fallback. The returned result is always the rational one.
LpResult<Rat> solve_exact(const Problem<double>& pd, const Problem<Rat>& pr, LpStats& stats) {
  LpResult<double> rd = BoundedSimplex<double>(pd).solve(kFloatPivotCap);
  stats.float_pivots = rd.pivots;
  if (rd.status == LpStatus::Optimal) {
    try {
      LpResult<Rat> rr = BoundedSimplex<Rat>(pr).solve_from(rd.basis, rd.col_status, kExactPivotCap);
      if (rr.status == LpStatus::Optimal) {
        stats.exact_pivots = rr.pivots;
        return rr;
      }
    } catch (const lpcore::SingularBasis&) {
    } catch (const lpcore::InfeasibleBasis&) {
    }
  }
  stats.warm_reconstruction = false;
  LpResult<Rat> rr = BoundedSimplex<Rat>(pr).solve(kExactPivotCap);
  stats.exact_pivots = rr.pivots;
  if (rr.status != LpStatus::Optimal)
    throw std::runtime_error("LP solve failed to reach optimality");
  return rr;
}

LineWeighting weighting_from(const LpShape& shape, const std::vector<Rat>& per_line,
                             bool clamp_to_one) {
  LineWeighting w(shape.n);
  for (std::size_t i = 0; i < shape.line_ordinals.size(); ++i) {
    Rat v = per_line[i];
    if (v < 0) v = 0;
    if (clamp_to_one && v > 1) v = 1;
    w.set(line_from_ordinal(shape.line_ordinals[i], shape.n), std::move(v));
  }
  return w;
}

FractionalCompletion completion_from(const LpShape& shape, const std::vector<Rat>& per_square) {
  FractionalCompletion fc;
  fc.n = shape.n;
  for (std::size_t i = 0; i < shape.lambda.size(); ++i) {
    if (per_square[i] > 0) fc.mass.emplace_back(shape.lambda[i], per_square[i]);
  }
  return fc;
}

void verify_outcome(const PartialConfig& cfg, const LpShape& shape, const LpOutcome& outcome) {
  const auto feas = fractional_feasible(outcome.primal, cfg);
  if (!feas.feasible)
    throw std::runtime_error("LP verification failed: primal infeasible (" + feas.detail + ")");
  if (outcome.primal.total() != outcome.optimal_value)
    throw std::runtime_error("LP verification failed: primal total != optimal value");
  if (!covers(outcome.dual, shape.lambda).covered)
    throw std::runtime_error("LP verification failed: dual does not cover the unattacked set");
  if (outcome.dual.value() != outcome.optimal_value)
    throw std::runtime_error("LP verification failed: duality gap after reconstruction");
}

LpOutcome trivial_outcome(const PartialConfig& cfg) {
  LpOutcome outcome;
  outcome.optimal_value = 0;
  outcome.primal.n = cfg.n();
  outcome.dual = LineWeighting(cfg.n());
  return outcome;
}

}  // namespace

LpOutcome max_fractional_completion(const PartialConfig& cfg, const LpLimits& limits) {
  check_limits(cfg, limits);
  const LpShape shape = make_shape(cfg);
  if (shape.lambda.empty()) return trivial_outcome(cfg);

  LpOutcome outcome;
  const LpResult<Rat> rr =
      solve_exact(build_packing<double>(shape), build_packing<Rat>(shape), outcome.stats);

  outcome.optimal_value = rr.objective;
  outcome.primal = completion_from(shape, rr.x);
  outcome.dual = weighting_from(shape, rr.duals, /*clamp_to_one=*/true);
  verify_outcome(cfg, shape, outcome);
  return outcome;
}

LpOutcome min_cover_value(const PartialConfig& cfg, const LpLimits& limits) {
  check_limits(cfg, limits);
  const LpShape shape = make_shape(cfg);
  if (shape.lambda.empty()) return trivial_outcome(cfg);

  LpOutcome outcome;
  const LpResult<Rat> rr =
      solve_exact(build_cover<double>(shape), build_cover<Rat>(shape), outcome.stats);

  outcome.optimal_value = -rr.objective;
  outcome.dual = weighting_from(shape, rr.x, /*clamp_to_one=*/false);
  outcome.primal = completion_from(shape, rr.duals);

  // The covering LP's row prices are usually a fractional completion of equal
  // total; degenerate bases can break that, in which case the packing optimum
  // supplies the primal witness.
  const bool primal_ok = fractional_feasible(outcome.primal, cfg).feasible &&
                         outcome.primal.total() == outcome.optimal_value;
  if (!primal_ok) {
    LpStats packing_stats;
    const LpResult<Rat> packing =
        solve_exact(build_packing<double>(shape), build_packing<Rat>(shape), packing_stats);
    if (packing.objective != outcome.optimal_value)
      throw std::runtime_error("LP verification failed: packing and cover optima disagree");
    outcome.primal = completion_from(shape, packing.x);
  }
  verify_outcome(cfg, shape, outcome);
  return outcome;
}

bool fractionally_completable(const PartialConfig& cfg, const LpLimits& limits) {
  const LpOutcome outcome = max_fractional_completion(cfg, limits);
  return outcome.optimal_value >= Rat(cfg.n() - cfg.size());
}

namespace {

// Size-k sample: greedy over a shuffled square order; if the greedy stalls
// (k close to n), fall back to completing a small random seed and taking a
// random k-subset of the full configuration.
PartialConfig sample_partial(int n, int k, Rng& rng) {
  std::vector<Square> all;
  all.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) all.push_back({i, j});

  for (int attempt = 0; attempt < 50; ++attempt) {
    rng.shuffle(all);
    AttackTable table(n);
    std::vector<Square> chosen;
    for (const Square& sq : all) {
      if (static_cast<int>(chosen.size()) == k) break;
      if (table.attacked(sq)) continue;
      table.add(sq);
      chosen.push_back(sq);
    }
    if (static_cast<int>(chosen.size()) == k) return PartialConfig(n, std::move(chosen));
  }
  for (int attempt = 0; attempt < 200; ++attempt) {
    rng.shuffle(all);
    AttackTable table(n);
    std::vector<Square> seed;
    for (const Square& sq : all) {
      if (static_cast<int>(seed.size()) == std::max(1, n / 8)) break;
      if (table.attacked(sq)) continue;
      table.add(sq);
      seed.push_back(sq);
    }
    const auto completed = complete(PartialConfig(n, std::move(seed)));
    if (completed.status != CompletionStatus::Completed) continue;
    std::vector<Square> pool = completed.board->queens();
    rng.shuffle(pool);
    pool.resize(static_cast<std::size_t>(k));
    return PartialConfig(n, std::move(pool));
  }
  throw std::runtime_error("could not sample a valid configuration of size " + std::to_string(k));
}

}  // namespace

QcStarReport qc_star_probe(int n, int k, int trials, std::uint64_t seed, const LpLimits& limits) {
  QcStarReport report;
  report.n = n;
  report.k = k;
  if (k > n || trials <= 0) return report;  // degenerate: empty report
  check_limits(PartialConfig(n), limits);

  Rng rng(seed);
  report.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    const PartialConfig cfg = sample_partial(n, k, rng);
    const bool integral = complete(cfg).status == CompletionStatus::Completed;
    const bool fractional = fractionally_completable(cfg, limits);
    if (integral && !fractional)
      throw std::runtime_error(
          "invariant violation: integrally completable sample without fractional completion");
    report.integral_completable += integral;
    report.fractional_completable += fractional;
    if (!fractional && report.not_fractional.size() < 8) report.not_fractional.push_back(cfg);
    if (fractional && !integral && report.gap_instances.size() < 8)
      report.gap_instances.push_back(cfg);
  }
  return report;
}

}  // namespace queens

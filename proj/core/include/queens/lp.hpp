#pragma once

#include "queens/board.hpp"
#include "queens/rational.hpp"
#include "queens/weighting.hpp"

#include <cstdint>
#include <vector>

namespace queens {

struct LpStats {
  std::uint64_t float_pivots = 0;
  std::uint64_t exact_pivots = 0;
  // False when the float basis failed exact reconstruction and the rational
  // phase had to restart from scratch.
  bool warm_reconstruction = true;
};

// Both optima come back exactly: the primal is a feasible fractional
// completion and the dual a covering weighting, with totals equal to
// optimal_value in rational arithmetic (strong duality, re-verified before
// returning).
struct LpOutcome {
  Rat optimal_value;
  FractionalCompletion primal;
  LineWeighting dual;
  LpStats stats;
};

struct LpLimits {
  int max_n = 64;  // up to n^2 variables and 6n-2 rows; refuse beyond this
};

// maximize sum x_s over s in unattacked(cfg), subject to sum_{s in L} x_s <= 1
// per line L, x >= 0. cfg has a fractional completion iff the value reaches
// n - |cfg|.
LpOutcome max_fractional_completion(const PartialConfig& cfg, const LpLimits& limits = {});

// minimize sum w(L) over line weightings in [0,1] covering unattacked(cfg).
// Equals max_fractional_completion's value (LP duality); the minimiser is the
// best possible non-completability certificate.
LpOutcome min_cover_value(const PartialConfig& cfg, const LpLimits& limits = {});

bool fractionally_completable(const PartialConfig& cfg, const LpLimits& limits = {});

struct QcStarReport {
  int n = 0;
  int k = 0;
  int trials = 0;
  int integral_completable = 0;
  int fractional_completable = 0;
  // samples with no fractional completion (hence no completion at all)
  std::vector<PartialConfig> not_fractional;
  // fractionally completable yet integrally incompletable samples
  std::vector<PartialConfig> gap_instances;
};

// Samples random valid size-k configurations and reports how many complete
// integrally (exact search) vs fractionally (LP). Every integrally
// completable sample is fractionally completable; the probe enforces that.
QcStarReport qc_star_probe(int n, int k, int trials, std::uint64_t seed,
                           const LpLimits& limits = {});

}  // namespace queens

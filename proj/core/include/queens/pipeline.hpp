#pragma once

#include "queens/board.hpp"
#include "queens/constructions.hpp"
#include "queens/rainbow.hpp"
#include "queens/rational.hpp"
#include "queens/rng.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace queens {

struct PipelineParams {
  double alpha = 0.1;    // colour mass reserved for augmentation pools
  double epsilon = 0.01; // concentration slack, surfaced in diagnostics
  int restarts = 50;
  int nibble_restarts = 20;
  double nibble_target = 0.9;
  int augment_depth = 10;  // vertices per augmenting sequence

  // p0 = 1 - alpha/t and p1..p5 = alpha/(5t); sums to one by construction
  std::array<double, 6> split_probabilities(int fold) const;
};

// One structured record per pipeline phase, for the diagnostics stream.
struct PhaseRecord {
  std::string phase;
  std::vector<std::pair<std::string, std::string>> fields;
};

using EdgeWeights = std::vector<Rat>;  // indexed by edge id

// Square weighting restricted to the edges of a board graph.
EdgeWeights restrict_square_weighting(const SquareWeighting& w, const ColouredBipartiteGraph& g);

// Smallest number of common neighbours over same-part vertex pairs; the c of
// the weight-shift precondition. Returns 0 for parts with fewer than 2
// vertices... callers treat that as "no pair to regularize".
long min_common_neighbours(const ColouredBipartiteGraph& g);

struct WeightShiftResult {
  EdgeWeights weights;
  Rat mean;               // the common vertex total afterwards
  Rat initial_deviation;  // d' = max |w0(v) - mean| before shifting
  Rat drift_bound;        // 2 d' / c
  int shifts = 0;
};

// Iterative pair shifts through common neighbours until every vertex total
// equals the mean, exactly, in rational arithmetic. Throws when a needed pair
// has fewer than common_neighbour_floor (or zero) common neighbours. Each
// edge moves by at most 2d'/c.
WeightShiftResult weight_shift_regularize(const ColouredBipartiteGraph& g, const EdgeWeights& w0,
                                          long common_neighbour_floor);

struct SparsifyResult {
  std::vector<int> kept_edges;
  double expected_degree = 0.0;      // mean / (1 + mu)
  double max_degree_deviation = 0.0; // max |deg - expected| over both parts
};

// Keeps edge e with probability w(e) / (1 + mu); rejects the call if any
// probability falls outside [0, 1], which signals an upstream bug.
SparsifyResult sparsify(const ColouredBipartiteGraph& g, const EdgeWeights& w, const Rat& mu,
                        Rng& rng);

struct ColourSplitResult {
  std::vector<std::uint8_t> label_of_colour;       // one label per colour
  std::array<std::vector<int>, 6> edges_by_label;  // uniformly-labelled edges
  int dropped_edges = 0;                           // mixed-label edges
};

// Labels every colour independently (p0, p1..p5); an edge lands in G_i only
// when its whole colour set got label i.
ColourSplitResult colour_split(const ColouredBipartiteGraph& g, std::span<const int> pool,
                               const PipelineParams& params, Rng& rng);

struct PipelineOutcome {
  std::optional<PartialConfig> board;  // empty = heuristic failure
  int restarts_used = 0;
  std::uint64_t augmentations = 0;
  std::vector<PhaseRecord> diagnostics;
};

// The full randomized completion chain: board graph, restricted regularizing
// weighting, pair-shift regularization, sparsification, colour split, greedy
// nibble on G_0, then augmenting sequences over the whole graph until the
// matching is perfect, with restarts. Any returned board is validated.
PipelineOutcome complete_via_pipeline(const PartialConfig& cfg, const PipelineParams& params,
                                      Rng& rng);

}  // namespace queens

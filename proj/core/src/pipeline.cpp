#include "queens/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

namespace queens {

std::array<double, 6> PipelineParams::split_probabilities(int fold) const {
  if (fold < 1) throw std::invalid_argument("fold must be positive");
  if (!(alpha > 0.0) || alpha > static_cast<double>(fold))
    throw std::invalid_argument("alpha must lie in (0, fold]");
  const double p0 = 1.0 - alpha / fold;
  const double pi = alpha / (5.0 * fold);
  return {p0, pi, pi, pi, pi, pi};
}

EdgeWeights restrict_square_weighting(const SquareWeighting& w, const ColouredBipartiteGraph& g) {
  if (g.a_labels.empty() && g.edge_count() > 0)
    throw std::invalid_argument("graph carries no board labels");
  EdgeWeights weights(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e)
    weights[e] = w.at({g.a_labels[g.edge_a(e)], g.b_labels[g.edge_b(e)]});
  return weights;
}

namespace {

long min_common_side(const std::vector<std::vector<int>>& rows, int other_size) {
  const int words = (other_size + 63) / 64;
  std::vector<std::uint64_t> bits(rows.size() * static_cast<std::size_t>(words), 0);
  for (std::size_t v = 0; v < rows.size(); ++v) {
    for (int u : rows[v]) bits[v * words + u / 64] |= 1ULL << (u % 64);
  }
  long best = -1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      long common = 0;
      for (int k = 0; k < words; ++k)
        common += __builtin_popcountll(bits[i * words + k] & bits[j * words + k]);
      if (best < 0 || common < best) best = common;
    }
  }
  return best;
}

}  // namespace

long min_common_neighbours(const ColouredBipartiteGraph& g) {
  std::vector<std::vector<int>> a_adj(g.a_size()), b_adj(g.b_size());
  for (int e = 0; e < g.edge_count(); ++e) {
    a_adj[g.edge_a(e)].push_back(g.edge_b(e));
    b_adj[g.edge_b(e)].push_back(g.edge_a(e));
  }
  const long a_min = min_common_side(a_adj, g.b_size());
  const long b_min = min_common_side(b_adj, g.a_size());
  if (a_min < 0) return b_min;
  if (b_min < 0) return a_min;
  return std::min(a_min, b_min);
}

WeightShiftResult weight_shift_regularize(const ColouredBipartiteGraph& g, const EdgeWeights& w0,
                                          long common_neighbour_floor) {
  if (static_cast<int>(w0.size()) != g.edge_count())
    throw std::invalid_argument("one weight per edge required");
  if (g.a_size() != g.b_size())
    throw std::invalid_argument("weight shift needs parts of equal size");
  const int side = g.a_size();
  if (side == 0) return {{}, Rat(0), Rat(0), Rat(0), 0};

  WeightShiftResult result;
  result.weights = w0;

  std::vector<Rat> a_total(side, Rat(0)), b_total(side, Rat(0));
  Rat sum(0);
  for (int e = 0; e < g.edge_count(); ++e) {
    a_total[g.edge_a(e)] += w0[e];
    b_total[g.edge_b(e)] += w0[e];
    sum += w0[e];
  }
  result.mean = sum / side;

  for (int v = 0; v < side; ++v) {
    Rat da = abs(a_total[v] - result.mean);
    Rat db = abs(b_total[v] - result.mean);
    if (da > result.initial_deviation) result.initial_deviation = da;
    if (db > result.initial_deviation) result.initial_deviation = db;
  }
  const long floor = std::max(1L, common_neighbour_floor);
  result.drift_bound = Rat(2) * result.initial_deviation / static_cast<unsigned long>(floor);

  // one part at a time: pick the first above-mean and first below-mean
  // vertex, spread the shift over their common neighbours
  for (int part = 0; part < 2; ++part) {
    std::vector<Rat>& totals = (part == 0) ? a_total : b_total;
    auto edges_at = [&](int v) -> const std::vector<int>& {
      return (part == 0) ? g.edges_at_a(v) : g.edges_at_b(v);
    };
    auto other_end = [&](int e) { return (part == 0) ? g.edge_b(e) : g.edge_a(e); };

    while (true) {
      int hi = -1, lo = -1;
      for (int v = 0; v < side; ++v) {
        if (hi < 0 && totals[v] > result.mean) hi = v;
        if (lo < 0 && totals[v] < result.mean) lo = v;
        if (hi >= 0 && lo >= 0) break;
      }
      if (hi < 0 && lo < 0) break;
      if (hi < 0 || lo < 0)
        throw std::logic_error("weight shift: one-sided deviation from the mean");

      std::vector<int> to_edge(side, -1);
      for (int e : edges_at(hi)) to_edge[other_end(e)] = e;
      std::vector<std::pair<int, int>> common;  // (edge at hi, edge at lo)
      for (int e : edges_at(lo)) {
        const int x = other_end(e);
        if (to_edge[x] >= 0) common.emplace_back(to_edge[x], e);
      }
      if (static_cast<long>(common.size()) < floor)
        throw std::runtime_error(
            "weight shift: vertices share only " + std::to_string(common.size()) +
            " common neighbours, below the floor " + std::to_string(floor));

      const Rat eta = std::min(Rat(totals[hi] - result.mean), Rat(result.mean - totals[lo]));
      const Rat share = eta / static_cast<unsigned long>(common.size());
      for (const auto& [he, le] : common) {
        result.weights[he] -= share;
        result.weights[le] += share;
      }
      totals[hi] -= eta;
      totals[lo] += eta;
      ++result.shifts;
    }
  }

  for (int e = 0; e < g.edge_count(); ++e) {
    if (abs(result.weights[e] - w0[e]) > result.drift_bound)
      throw std::logic_error("weight shift drifted an edge beyond 2d'/c");
  }
  return result;
}

SparsifyResult sparsify(const ColouredBipartiteGraph& g, const EdgeWeights& w, const Rat& mu,
                        Rng& rng) {
  if (static_cast<int>(w.size()) != g.edge_count())
    throw std::invalid_argument("one weight per edge required");
  const Rat denom = Rat(1) + mu;
  SparsifyResult result;
  std::vector<double> a_expect(g.a_size(), 0.0), b_expect(g.b_size(), 0.0);
  std::vector<int> a_deg(g.a_size(), 0), b_deg(g.b_size(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (w[e] < 0 || w[e] > denom)
      throw std::invalid_argument("sparsify: keep probability outside [0,1] at edge " +
                                  std::to_string(e) + " (w = " + rat_str(w[e]) + ")");
    const Rat p = w[e] / denom;
    const double pd = rat_double(p);
    a_expect[g.edge_a(e)] += pd;
    b_expect[g.edge_b(e)] += pd;
    if (rng.bernoulli(pd)) {
      result.kept_edges.push_back(e);
      ++a_deg[g.edge_a(e)];
      ++b_deg[g.edge_b(e)];
    }
  }
  double expect_sum = 0.0;
  for (int a = 0; a < g.a_size(); ++a) {
    expect_sum += a_expect[a];
    result.max_degree_deviation =
        std::max(result.max_degree_deviation, std::abs(a_deg[a] - a_expect[a]));
  }
  for (int b = 0; b < g.b_size(); ++b) {
    expect_sum += b_expect[b];
    result.max_degree_deviation =
        std::max(result.max_degree_deviation, std::abs(b_deg[b] - b_expect[b]));
  }
  const int vertices = g.a_size() + g.b_size();
  result.expected_degree = vertices > 0 ? expect_sum / vertices : 0.0;
  return result;
}

ColourSplitResult colour_split(const ColouredBipartiteGraph& g, std::span<const int> pool,
                               const PipelineParams& params, Rng& rng) {
  const auto probs = params.split_probabilities(g.fold());
  ColourSplitResult result;
  result.label_of_colour.resize(g.num_colours());
  for (int c = 0; c < g.num_colours(); ++c) {
    const double r = rng.real01();
    double cum = 0.0;
    std::uint8_t label = 5;
    for (int i = 0; i < 6; ++i) {
      cum += probs[i];
      if (r < cum) {
        label = static_cast<std::uint8_t>(i);
        break;
      }
    }
    result.label_of_colour[c] = label;
  }
  for (int e : pool) {
    const auto cs = g.colours(e);
    const std::uint8_t first = result.label_of_colour[cs[0]];
    bool uniform = true;
    for (int c : cs) uniform = uniform && result.label_of_colour[c] == first;
    if (uniform) {
      result.edges_by_label[first].push_back(e);
    } else {
      ++result.dropped_edges;
    }
  }
  return result;
}

namespace {

PhaseRecord record(std::string phase,
                   std::vector<std::pair<std::string, std::string>> fields) {
  return {std::move(phase), std::move(fields)};
}

}  // namespace

PipelineOutcome complete_via_pipeline(const PartialConfig& cfg, const PipelineParams& params,
                                      Rng& rng) {
  PipelineOutcome outcome;
  if (cfg.full()) {
    outcome.board = cfg;
    outcome.diagnostics.push_back(record("done", {{"note", "configuration already full"}}));
    return outcome;
  }

  const ColouredBipartiteGraph g = board_to_graph(cfg);
  const int goal = g.a_size();  // == g.b_size() == n - |cfg|
  outcome.diagnostics.push_back(record(
      "board_to_graph", {{"part_size", std::to_string(goal)},
                         {"edges", std::to_string(g.edge_count())},
                         {"colours", std::to_string(g.num_colours())}}));
  if (g.edge_count() == 0) {
    outcome.diagnostics.push_back(record("done", {{"note", "no unattacked squares"}}));
    return outcome;  // not full and nowhere to place: heuristic failure
  }

  // fractional regularization, deterministic given cfg
  EdgeWeights weights = restrict_square_weighting(regularize_weighting(cfg.n()), g);
  Rat mu(0);
  const long common_floor = min_common_neighbours(g);
  if (common_floor >= 1) {
    try {
      WeightShiftResult shift = weight_shift_regularize(g, weights, common_floor);
      mu = shift.drift_bound;
      weights = std::move(shift.weights);
      outcome.diagnostics.push_back(
          record("weight_shift", {{"mean", rat_str(shift.mean)},
                                  {"initial_deviation", rat_str(shift.initial_deviation)},
                                  {"common_neighbour_floor", std::to_string(common_floor)},
                                  {"mu", rat_str(mu)},
                                  {"shifts", std::to_string(shift.shifts)}}));
    } catch (const std::runtime_error& e) {
      outcome.diagnostics.push_back(record("weight_shift", {{"skipped", e.what()}}));
    }
  } else {
    outcome.diagnostics.push_back(
        record("weight_shift", {{"skipped", "no same-part vertex pairs"}}));
  }

  for (int attempt = 0; attempt < std::max(1, params.restarts); ++attempt) {
    outcome.restarts_used = attempt + 1;

    const SparsifyResult sparse = sparsify(g, weights, mu, rng);
    const ColourSplitResult split = colour_split(g, sparse.kept_edges, params, rng);

    NibbleResult nibble =
        nibble_matching(g, split.edges_by_label[0], params.nibble_target, params.nibble_restarts, rng);
    RainbowMatching matching = std::move(nibble.matching);

    std::uint64_t augmentations = 0;
    std::uint64_t non_g0_edges = 0;
    while (matching.size() < goal) {
      auto grown = augment(g, matching, {}, params.augment_depth, rng);
      if (!grown) break;
      matching = std::move(*grown);
      ++augmentations;
    }
    outcome.augmentations += augmentations;

    if (matching.size() == goal) {
      // ledger: matching edges outside G_0 and the blocked colours they pin
      std::vector<std::uint8_t> in_g0(g.edge_count(), 0);
      for (int e : split.edges_by_label[0]) in_g0[e] = 1;
      std::uint64_t blocked_nonzero = 0;
      for (int e : matching.edges()) {
        if (!in_g0[e]) {
          ++non_g0_edges;
          blocked_nonzero += g.fold();
        }
      }
      PartialConfig board = matching_to_board(cfg, g, matching);
      if (!board.full()) throw std::logic_error("perfect matching produced a partial board");
      outcome.board = std::move(board);
      outcome.diagnostics.push_back(record(
          "success", {{"restart", std::to_string(attempt)},
                      {"sparsified_edges", std::to_string(sparse.kept_edges.size())},
                      {"g0_edges", std::to_string(split.edges_by_label[0].size())},
                      {"nibble_coverage", std::to_string(nibble.coverage)},
                      {"augmentations", std::to_string(augmentations)},
                      {"non_g0_matching_edges", std::to_string(non_g0_edges)},
                      {"blocked_nonzero_label_colours", std::to_string(blocked_nonzero)},
                      {"blocked_budget_5tl",
                       std::to_string(5 * static_cast<std::uint64_t>(g.fold()) * augmentations)}}));
      return outcome;
    }
    outcome.diagnostics.push_back(
        record("restart", {{"attempt", std::to_string(attempt)},
                           {"matched", std::to_string(matching.size())},
                           {"goal", std::to_string(goal)},
                           {"nibble_coverage", std::to_string(nibble.coverage)},
                           {"augmentations", std::to_string(augmentations)}}));
  }

  outcome.diagnostics.push_back(record("failure", {{"restarts", std::to_string(outcome.restarts_used)}}));
  return outcome;
}

}  // namespace queens

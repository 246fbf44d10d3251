#pragma once

#include "queens/board.hpp"
#include "queens/rng.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace queens {

// Bipartite graph whose edges each carry exactly `fold` colours. For board
// graphs part A holds the queenless rows, part B the queenless columns, the
// colours are diagonals and fold = 2; a perfect rainbow matching is a
// completion.
class ColouredBipartiteGraph {
 public:
  ColouredBipartiteGraph(int a_size, int b_size, int num_colours, int fold);

  int a_size() const { return a_size_; }
  int b_size() const { return b_size_; }
  int num_colours() const { return num_colours_; }
  int fold() const { return fold_; }
  int edge_count() const { return static_cast<int>(edge_a_.size()); }

  // colours must hold `fold` distinct ids; returns the new edge id
  int add_edge(int a, int b, std::span<const int> colours);

  int edge_a(int e) const { return edge_a_[e]; }
  int edge_b(int e) const { return edge_b_[e]; }
  std::span<const int> colours(int e) const {
    return {colour_pool_.data() + static_cast<std::size_t>(e) * fold_,
            static_cast<std::size_t>(fold_)};
  }
  const std::vector<int>& edges_at_a(int a) const { return at_a_[a]; }
  const std::vector<int>& edges_at_b(int b) const { return at_b_[b]; }

  // External meaning for board graphs; empty on synthetic graphs.
  std::vector<int> a_labels;        // row numbers
  std::vector<int> b_labels;        // column numbers
  std::vector<LineId> colour_labels;  // diagonal per colour id

 private:
  int a_size_, b_size_, num_colours_, fold_;
  std::vector<int> edge_a_, edge_b_;
  std::vector<int> colour_pool_;  // fold entries per edge
  std::vector<std::vector<int>> at_a_, at_b_;
};

// Rows/columns without a queen; an edge per unattacked square, coloured by
// its two diagonals. A perfect rainbow matching corresponds exactly to a
// completion of cfg.
ColouredBipartiteGraph board_to_graph(const PartialConfig& cfg);

struct ProperLinearReport {
  bool proper = true;  // edges at a common vertex have disjoint colour sets
  bool linear = true;  // each colour pair appears on at most one edge
  std::string detail;
};

ProperLinearReport check_proper_linear(const ColouredBipartiteGraph& g);

// Vertex-disjoint and colour-disjoint edge set. Mutations check both
// invariants and throw std::logic_error on violation.
class RainbowMatching {
 public:
  explicit RainbowMatching(const ColouredBipartiteGraph& g);

  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& edges() const { return edges_; }

  bool can_add(int e) const;
  void add(int e);
  void remove(int e);

  bool covers_a(int a) const { return edge_at_a_[a] >= 0; }
  bool covers_b(int b) const { return edge_at_b_[b] >= 0; }
  int edge_at_a(int a) const { return edge_at_a_[a]; }
  int edge_at_b(int b) const { return edge_at_b_[b]; }
  bool colour_used(int c) const { return colour_used_[c] != 0; }

  // Full recheck of both disjointness invariants from scratch.
  bool verify() const;

 private:
  const ColouredBipartiteGraph* g_;
  std::vector<int> edges_;
  std::vector<int> edge_pos_;   // edge id -> position in edges_, or -1
  std::vector<int> edge_at_a_, edge_at_b_;
  std::vector<std::uint8_t> colour_used_;
};

// Union of cfg with the squares selected by a matching on board_to_graph(cfg).
// Validates the result; a perfect matching yields a full configuration.
PartialConfig matching_to_board(const PartialConfig& cfg, const ColouredBipartiteGraph& g,
                                const RainbowMatching& m);

// (fold+2)-uniform conflict hypergraph: vertices are both parts plus the
// colours, one hyperedge {a, b} + colours per graph edge. Its matchings are
// exactly the rainbow matchings.
struct ConflictHypergraph {
  int uniformity = 0;
  int vertex_count = 0;
  std::vector<std::vector<int>> hyperedges;  // index-aligned with graph edges
};

ConflictHypergraph conflict_hypergraph(const ColouredBipartiteGraph& g);

// any two hyperedges meet in at most one vertex; quadratic, test-sized inputs
bool hypergraph_is_linear(const ConflictHypergraph& h);

struct NibbleResult {
  RainbowMatching matching;
  double coverage = 0.0;  // covered fraction of min(|A|, |B|)
  int restarts_used = 0;
};

// Randomized greedy on the conflict hypergraph, restricted to `pool` (edge
// ids): scan a uniformly random edge order, keep whatever fits. Equivalent to
// repeatedly picking a uniformly random surviving hyperedge. Keeps the best
// matching across restarts, stopping early once target_coverage is reached.
NibbleResult nibble_matching(const ColouredBipartiteGraph& g, std::span<const int> pool,
                             double target_coverage, int restarts, Rng& rng);

// Alternating randomized DFS for an augmenting sequence of at most
// depth_bound vertices: new edges pairwise colour-disjoint, colour-disjoint
// from all of m, and avoiding `blocked`. Returns the augmented matching
// (size exactly |m| + 1) or nothing.
std::optional<RainbowMatching> augment(const ColouredBipartiteGraph& g, const RainbowMatching& m,
                                       std::span<const int> blocked_colours, int depth_bound,
                                       Rng& rng);

}  // namespace queens

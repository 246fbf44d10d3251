#include "queens/rainbow.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace queens {

ColouredBipartiteGraph::ColouredBipartiteGraph(int a_size, int b_size, int num_colours, int fold)
    : a_size_(a_size), b_size_(b_size), num_colours_(num_colours), fold_(fold),
      at_a_(a_size), at_b_(b_size) {
  if (a_size < 0 || b_size < 0 || num_colours < 0 || fold < 1)
    throw std::invalid_argument("bad graph dimensions");
}

int ColouredBipartiteGraph::add_edge(int a, int b, std::span<const int> colours) {
  if (a < 0 || a >= a_size_ || b < 0 || b >= b_size_)
    throw std::invalid_argument("edge endpoint out of range");
  if (static_cast<int>(colours.size()) != fold_)
    throw std::invalid_argument("edge must carry exactly fold colours");
  for (std::size_t i = 0; i < colours.size(); ++i) {
    if (colours[i] < 0 || colours[i] >= num_colours_)
      throw std::invalid_argument("colour id out of range");
    for (std::size_t j = i + 1; j < colours.size(); ++j)
      if (colours[i] == colours[j]) throw std::invalid_argument("repeated colour on edge");
  }
  const int e = edge_count();
  edge_a_.push_back(a);
  edge_b_.push_back(b);
  colour_pool_.insert(colour_pool_.end(), colours.begin(), colours.end());
  at_a_[a].push_back(e);
  at_b_[b].push_back(e);
  return e;
}

ColouredBipartiteGraph board_to_graph(const PartialConfig& cfg) {
  const int n = cfg.n();
  std::vector<int> free_rows, free_cols;
  std::vector<int> row_index(n + 1, -1), col_index(n + 1, -1);
  {
    std::vector<bool> row_used(n + 1, false), col_used(n + 1, false);
    for (const Square& sq : cfg.queens()) {
      row_used[sq.row] = true;
      col_used[sq.col] = true;
    }
    for (int i = 1; i <= n; ++i) {
      if (!row_used[i]) {
        row_index[i] = static_cast<int>(free_rows.size());
        free_rows.push_back(i);
      }
      if (!col_used[i]) {
        col_index[i] = static_cast<int>(free_cols.size());
        free_cols.push_back(i);
      }
    }
  }

  // colour ids: plus diagonals first, then minus diagonals, offsets shifted
  // into [0, 2n-2]
  const int diag_span = 2 * n - 1;
  ColouredBipartiteGraph g(static_cast<int>(free_rows.size()), static_cast<int>(free_cols.size()),
                           2 * diag_span, 2);
  g.a_labels = free_rows;
  g.b_labels = free_cols;
  g.colour_labels.reserve(2 * diag_span);
  for (int k = -(n - 1); k <= n - 1; ++k) g.colour_labels.push_back(diag_plus(k));
  for (int k = -(n - 1); k <= n - 1; ++k) g.colour_labels.push_back(diag_minus(k));

  for (const Square& sq : unattacked(cfg)) {
    const int plus_id = sq.row + sq.col - (n + 1) + (n - 1);
    const int minus_id = diag_span + sq.row - sq.col + (n - 1);
    const int cols[2] = {plus_id, minus_id};
    g.add_edge(row_index[sq.row], col_index[sq.col], cols);
  }
  return g;
}

ProperLinearReport check_proper_linear(const ColouredBipartiteGraph& g) {
  ProperLinearReport report;

  auto check_vertex = [&](const std::vector<int>& incident, const char* side, int v) {
    std::unordered_set<int> seen;
    for (int e : incident) {
      for (int c : g.colours(e)) {
        if (!seen.insert(c).second) {
          report.proper = false;
          if (report.detail.empty())
            report.detail = std::string("colour repeated at ") + side + " vertex " +
                            std::to_string(v);
          return;
        }
      }
    }
  };
  for (int a = 0; a < g.a_size() && report.proper; ++a) check_vertex(g.edges_at_a(a), "A", a);
  for (int b = 0; b < g.b_size() && report.proper; ++b) check_vertex(g.edges_at_b(b), "B", b);

  std::unordered_set<long long> pairs;
  for (int e = 0; e < g.edge_count() && report.linear; ++e) {
    const auto cs = g.colours(e);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        const long long lo = std::min(cs[i], cs[j]);
        const long long hi = std::max(cs[i], cs[j]);
        if (!pairs.insert(lo * g.num_colours() + hi).second) {
          report.linear = false;
          if (report.detail.empty())
            report.detail = "colour pair (" + std::to_string(lo) + "," + std::to_string(hi) +
                            ") appears on two edges";
        }
      }
    }
  }
  return report;
}

RainbowMatching::RainbowMatching(const ColouredBipartiteGraph& g)
    : g_(&g),
      edge_pos_(g.edge_count(), -1),
      edge_at_a_(g.a_size(), -1),
      edge_at_b_(g.b_size(), -1),
      colour_used_(g.num_colours(), 0) {}

bool RainbowMatching::can_add(int e) const {
  if (edge_pos_[e] >= 0) return false;
  if (edge_at_a_[g_->edge_a(e)] >= 0 || edge_at_b_[g_->edge_b(e)] >= 0) return false;
  for (int c : g_->colours(e))
    if (colour_used_[c]) return false;
  return true;
}

void RainbowMatching::add(int e) {
  if (!can_add(e))
    throw std::logic_error("rainbow invariant violation: edge " + std::to_string(e) +
                           " conflicts with the matching");
  edge_pos_[e] = static_cast<int>(edges_.size());
  edges_.push_back(e);
  edge_at_a_[g_->edge_a(e)] = e;
  edge_at_b_[g_->edge_b(e)] = e;
  for (int c : g_->colours(e)) colour_used_[c] = 1;
}

void RainbowMatching::remove(int e) {
  const int pos = edge_pos_[e];
  if (pos < 0) throw std::logic_error("removing an edge not in the matching");
  const int last = edges_.back();
  edges_[pos] = last;
  edge_pos_[last] = pos;
  edges_.pop_back();
  edge_pos_[e] = -1;
  edge_at_a_[g_->edge_a(e)] = -1;
  edge_at_b_[g_->edge_b(e)] = -1;
  for (int c : g_->colours(e)) colour_used_[c] = 0;
}

bool RainbowMatching::verify() const {
  std::vector<bool> a_seen(g_->a_size(), false), b_seen(g_->b_size(), false);
  std::vector<bool> c_seen(g_->num_colours(), false);
  for (int e : edges_) {
    if (a_seen[g_->edge_a(e)] || b_seen[g_->edge_b(e)]) return false;
    a_seen[g_->edge_a(e)] = true;
    b_seen[g_->edge_b(e)] = true;
    for (int c : g_->colours(e)) {
      if (c_seen[c]) return false;
      c_seen[c] = true;
    }
  }
  return true;
}

PartialConfig matching_to_board(const PartialConfig& cfg, const ColouredBipartiteGraph& g,
                                const RainbowMatching& m) {
  std::vector<Square> queens = cfg.queens();
  for (int e : m.edges()) queens.push_back({g.a_labels[g.edge_a(e)], g.b_labels[g.edge_b(e)]});
  return PartialConfig(cfg.n(), std::move(queens));
}

ConflictHypergraph conflict_hypergraph(const ColouredBipartiteGraph& g) {
  const auto pl = check_proper_linear(g);
  if (!pl.proper || !pl.linear)
    throw std::invalid_argument("conflict hypergraph needs a proper linear colouring: " +
                                pl.detail);
  ConflictHypergraph h;
  h.uniformity = g.fold() + 2;
  h.vertex_count = g.a_size() + g.b_size() + g.num_colours();
  h.hyperedges.reserve(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    std::vector<int> f;
    f.reserve(h.uniformity);
    f.push_back(g.edge_a(e));
    f.push_back(g.a_size() + g.edge_b(e));
    for (int c : g.colours(e)) f.push_back(g.a_size() + g.b_size() + c);
    std::sort(f.begin(), f.end());
    h.hyperedges.push_back(std::move(f));
  }
  return h;
}

bool hypergraph_is_linear(const ConflictHypergraph& h) {
  for (std::size_t i = 0; i < h.hyperedges.size(); ++i) {
    for (std::size_t j = i + 1; j < h.hyperedges.size(); ++j) {
      // sorted lists; count the intersection
      int common = 0;
      std::size_t p = 0, q = 0;
      const auto& x = h.hyperedges[i];
      const auto& y = h.hyperedges[j];
      while (p < x.size() && q < y.size()) {
        if (x[p] == y[q]) {
          ++common;
          ++p;
          ++q;
        } else if (x[p] < y[q]) {
          ++p;
        } else {
          ++q;
        }
      }
      if (common > 1) return false;
    }
  }
  return true;
}

NibbleResult nibble_matching(const ColouredBipartiteGraph& g, std::span<const int> pool,
                             double target_coverage, int restarts, Rng& rng) {
  const int goal = std::min(g.a_size(), g.b_size());
  NibbleResult best{RainbowMatching(g), 0.0, 0};
  if (goal == 0 || pool.empty()) return best;  // trivially done

  std::vector<int> order(pool.begin(), pool.end());
  for (int attempt = 0; attempt < std::max(restarts, 1); ++attempt) {
    best.restarts_used = attempt + 1;
    rng.shuffle(order);
    RainbowMatching m(g);
    for (int e : order) {
      if (m.can_add(e)) m.add(e);
    }
    const double coverage = static_cast<double>(m.size()) / goal;
    if (coverage > best.coverage) {
      best.coverage = coverage;
      best.matching = std::move(m);
    }
    if (best.coverage >= target_coverage) break;
  }
  return best;
}

namespace {

struct AugmentSearch {
  const ColouredBipartiteGraph& g;
  const RainbowMatching& m;
  std::vector<std::uint8_t> colour_banned;  // blocked + matching + path colours
  std::vector<std::uint8_t> b_visited;
  std::vector<int> path;  // new edges, in order
  int max_new_edges;
  long nodes = 0;
  long node_budget;
  Rng& rng;

  bool edge_colours_free(int e) const {
    for (int c : g.colours(e))
      if (colour_banned[c]) return false;
    return true;
  }

  void ban(int e, std::uint8_t flag) {
    for (int c : g.colours(e)) colour_banned[c] = flag;
  }

  bool dfs(int a) {
    if (++nodes > node_budget) return false;
    const auto& incident = g.edges_at_a(a);
    if (incident.empty()) return false;
    const std::size_t start = rng.below(incident.size());
    // first pass: can we finish here with an uncovered b?
    for (std::size_t i = 0; i < incident.size(); ++i) {
      const int e = incident[(start + i) % incident.size()];
      const int b = g.edge_b(e);
      if (m.covers_b(b) || b_visited[b]) continue;
      if (!edge_colours_free(e)) continue;
      path.push_back(e);
      return true;
    }
    // recursing adds an intermediate edge and the child needs room to finish
    if (static_cast<int>(path.size()) >= max_new_edges - 1) return false;
    // otherwise walk through matched b vertices
    for (std::size_t i = 0; i < incident.size(); ++i) {
      const int e = incident[(start + i) % incident.size()];
      const int b = g.edge_b(e);
      if (!m.covers_b(b) || b_visited[b]) continue;
      if (!edge_colours_free(e)) continue;
      const int matched = m.edge_at_b(b);
      b_visited[b] = 1;
      ban(e, 1);
      path.push_back(e);
      if (dfs(g.edge_a(matched))) return true;
      path.pop_back();
      ban(e, 0);
      // b stays visited within this start: revisiting cannot help
    }
    return false;
  }
};

}  // namespace

std::optional<RainbowMatching> augment(const ColouredBipartiteGraph& g, const RainbowMatching& m,
                                       std::span<const int> blocked_colours, int depth_bound,
                                       Rng& rng) {
  std::vector<int> free_a;
  for (int a = 0; a < g.a_size(); ++a)
    if (!m.covers_a(a)) free_a.push_back(a);
  bool any_free_b = false;
  for (int b = 0; b < g.b_size() && !any_free_b; ++b) any_free_b = !m.covers_b(b);
  if (free_a.empty() || !any_free_b) return std::nullopt;

  AugmentSearch search{g, m, std::vector<std::uint8_t>(g.num_colours(), 0),
                       std::vector<std::uint8_t>(g.b_size(), 0), {}, std::max(1, depth_bound / 2),
                       0, 200000, rng};
  for (int c : blocked_colours) search.colour_banned[c] = 1;
  for (int c = 0; c < g.num_colours(); ++c)
    if (m.colour_used(c)) search.colour_banned[c] = 1;

  rng.shuffle(free_a);
  for (int a0 : free_a) {
    std::fill(search.b_visited.begin(), search.b_visited.end(), 0);
    search.path.clear();
    if (!search.dfs(a0)) continue;

    RainbowMatching grown = m;
    // drop the matched partner of every intermediate b, then lay the new path
    for (std::size_t i = 0; i + 1 < search.path.size(); ++i)
      grown.remove(m.edge_at_b(g.edge_b(search.path[i])));
    for (int e : search.path) grown.add(e);
    if (grown.size() != m.size() + 1 || !grown.verify())
      throw std::logic_error("augmenting sequence produced a broken matching");
    return grown;
  }
  return std::nullopt;
}

}  // namespace queens

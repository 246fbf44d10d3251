#include "queens/solver.hpp"

#include <functional>
#include <limits>
#include <stdexcept>

namespace queens {

namespace {

// Occupancy indexed as: plus diagonal i+j-2 in [0, 2n-2], minus diagonal
// i-j+n-1 in [0, 2n-2]. Rows carry at most one queen, tracked in row_queen.
class Searcher {
 public:
  Searcher(const PartialConfig& cfg, SolveBudget budget, Branching rule)
      : n_(cfg.n()),
        rule_(rule),
        node_limit_(budget.node_limit),
        col_used_(static_cast<std::size_t>(n_) + 1, 0),
        dp_used_(static_cast<std::size_t>(2 * n_), 0),
        dm_used_(static_cast<std::size_t>(2 * n_), 0),
        row_queen_(static_cast<std::size_t>(n_) + 1, 0) {
    for (const Square& sq : cfg.queens()) place(sq.row, sq.col);
  }

  // Visits every completion; on_solution returns false to stop the search.
  // Returns true iff the tree was fully explored.
  bool run(const std::function<bool(const std::vector<Square>&)>& on_solution) {
    on_solution_ = &on_solution;
    stopped_ = false;
    budget_hit_ = false;
    search();
    return !stopped_ && !budget_hit_;
  }

  std::uint64_t nodes() const { return nodes_; }
  bool budget_hit() const { return budget_hit_; }

 private:
  void place(int row, int col) {
    row_queen_[row] = col;
    col_used_[col] = 1;
    dp_used_[row + col - 2] = 1;
    dm_used_[row - col + n_ - 1] = 1;
    ++placed_;
  }

  void unplace(int row, int col) {
    row_queen_[row] = 0;
    col_used_[col] = 0;
    dp_used_[row + col - 2] = 0;
    dm_used_[row - col + n_ - 1] = 0;
    --placed_;
  }

  bool free_at(int row, int col) const {
    return !col_used_[col] && !dp_used_[row + col - 2] && !dm_used_[row - col + n_ - 1];
  }

  int free_count(int row) const {
    int count = 0;
    for (int col = 1; col <= n_; ++col) count += free_at(row, col);
    return count;
  }

  int pick_row() const {
    if (rule_ == Branching::LexRow) {
      for (int row = 1; row <= n_; ++row)
        if (!row_queen_[row]) return row;
      return 0;
    }
    int best_row = 0;
    int best_count = std::numeric_limits<int>::max();
    for (int row = 1; row <= n_; ++row) {
      if (row_queen_[row]) continue;
      const int count = free_count(row);
      if (count < best_count) {
        best_count = count;
        best_row = row;
        if (count == 0) break;
      }
    }
    return best_row;
  }

  void search() {
    if (stopped_ || budget_hit_) return;
    ++nodes_;
    if (node_limit_ && nodes_ > node_limit_) {
      budget_hit_ = true;
      return;
    }
    if (placed_ == n_) {
      std::vector<Square> solution;
      solution.reserve(n_);
      for (int row = 1; row <= n_; ++row) solution.push_back({row, row_queen_[row]});
      if (!(*on_solution_)(solution)) stopped_ = true;
      return;
    }
    const int row = pick_row();
    for (int col = 1; col <= n_; ++col) {
      if (!free_at(row, col)) continue;
      place(row, col);
      search();
      unplace(row, col);
      if (stopped_ || budget_hit_) return;
    }
  }

  int n_;
  Branching rule_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  int placed_ = 0;
  bool stopped_ = false;
  bool budget_hit_ = false;
  std::vector<char> col_used_, dp_used_, dm_used_;
  std::vector<int> row_queen_;
  const std::function<bool(const std::vector<Square>&)>* on_solution_ = nullptr;
};

}  // namespace

CompletionResult complete(const PartialConfig& cfg, SolveBudget budget, Branching rule) {
  if (cfg.n() == 0) {
    // The empty 0-board is vacuously complete.
    return {CompletionStatus::Completed, PartialConfig(0), 0};
  }
  Searcher searcher(cfg, budget, rule);
  std::optional<PartialConfig> found;
  searcher.run([&](const std::vector<Square>& solution) {
    found = PartialConfig(cfg.n(), solution);
    return false;
  });
  CompletionResult result;
  result.nodes = searcher.nodes();
  if (found) {
    result.status = CompletionStatus::Completed;
    result.board = std::move(found);
  } else if (searcher.budget_hit()) {
    result.status = CompletionStatus::BudgetExhausted;
  } else {
    result.status = CompletionStatus::Incompletable;
  }
  return result;
}

CountResult count_completions(const PartialConfig& cfg, SolveBudget budget) {
  if (cfg.n() == 0) return {1, true, 0};
  Searcher searcher(cfg, budget, Branching::FailFirst);
  CountResult result;
  bool cap_hit = false;
  const bool explored = searcher.run([&](const std::vector<Square>&) {
    ++result.count;
    if (budget.solution_cap && result.count >= budget.solution_cap) {
      cap_hit = true;
      return false;
    }
    return true;
  });
  result.nodes = searcher.nodes();
  result.exact = explored && !cap_hit;
  return result;
}

std::uint64_t enumerate_all(int n, int ceiling) {
  if (n < 0) throw std::invalid_argument("negative board size");
  if (n > ceiling)
    throw std::invalid_argument("enumerate_all: n = " + std::to_string(n) +
                                " exceeds the enumeration ceiling " + std::to_string(ceiling) +
                                "; raise the ceiling explicitly to proceed");
  return count_completions(PartialConfig(n)).count;
}

std::optional<Embedding> min_embedding(const PartialConfig& cfg, int n_ceiling) {
  const int n = cfg.n();
  for (int n_star = std::max(n, 1); n_star <= n_ceiling; ++n_star) {
    for (int row_offset = 0; row_offset <= n_star - n; ++row_offset) {
      for (int col_offset = 0; col_offset <= n_star - n; ++col_offset) {
        std::vector<Square> shifted;
        shifted.reserve(cfg.queens().size());
        for (const Square& sq : cfg.queens())
          shifted.push_back({sq.row + row_offset, sq.col + col_offset});
        // Shifting preserves mutual non-attack, so this never throws.
        PartialConfig embedded(n_star, std::move(shifted));
        CompletionResult result = complete(embedded);
        if (result.status == CompletionStatus::Completed)
          return Embedding{n_star, row_offset, col_offset, std::move(*result.board)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace queens

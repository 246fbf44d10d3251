#pragma once

#include "queens/board.hpp"

#include <cstdint>
#include <optional>

namespace queens {

struct SolveBudget {
  std::uint64_t node_limit = 0;    // search nodes, 0 = unlimited
  std::uint64_t solution_cap = 0;  // counting stops after this many, 0 = all
};

enum class CompletionStatus { Completed, Incompletable, BudgetExhausted };

struct CompletionResult {
  CompletionStatus status = CompletionStatus::Incompletable;
  std::optional<PartialConfig> board;  // set iff Completed
  std::uint64_t nodes = 0;
};

struct CountResult {
  std::uint64_t count = 0;
  // True iff the search tree was fully explored: the count is exact, not a
  // lower bound. A node limit or solution cap that fires clears it.
  bool exact = false;
  std::uint64_t nodes = 0;
};

enum class Branching {
  FailFirst,  // branch on the empty row with fewest unattacked squares
  LexRow,     // lowest empty row; yields the lexicographically first solution
};

// Backtracking completion. Completed(Q) has cfg as a subset and |Q| = n.
// Incompletable is an exhaustive proof; BudgetExhausted is not.
CompletionResult complete(const PartialConfig& cfg, SolveBudget budget = {},
                          Branching rule = Branching::FailFirst);

CountResult count_completions(const PartialConfig& cfg, SolveBudget budget = {});

// Q(n). Refuses n above the ceiling (default 12) since the count explodes.
std::uint64_t enumerate_all(int n, int ceiling = 12);

struct Embedding {
  int n_star = 0;
  int row_offset = 0;
  int col_offset = 0;
  PartialConfig completion;  // witness configuration on the n* board
};

// Smallest n* in [cfg.n(), n_ceiling] such that cfg, shifted by some offset
// with the n x n board a subsquare of the n* x n* board, is completable.
// Offsets are scanned lexicographically; first hit wins. Empty optional if
// nothing works below the ceiling.
std::optional<Embedding> min_embedding(const PartialConfig& cfg, int n_ceiling);

}  // namespace queens

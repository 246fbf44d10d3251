#pragma once

#include "queens/board.hpp"
#include "queens/rational.hpp"
#include "queens/weighting.hpp"

#include <cstdint>

namespace queens {

// Square weighting with values in {1/2, 3/4, 1}: rows and columns all carry
// the same total while every diagonal stays below 2n/3 + O(1).
class SquareWeighting {
 public:
  explicit SquareWeighting(int n);

  int n() const { return n_; }
  Rat at(Square sq) const;
  int quarters_at(Square sq) const;  // weight * 4, handy for exact int sums
  Rat line_total(LineId line) const;

 private:
  friend SquareWeighting regularize_weighting(int n);
  int n_ = 0;
  std::vector<std::uint8_t> quarters_;  // 2, 3 or 4 per square
};

// The regularizing weighting: 1/2 when both coordinates scaled by n+1 fall in
// the middle third, 3/4 when both fall outside it, 1 otherwise.
SquareWeighting regularize_weighting(int n);

// Full n-queens configuration with queens hugging the main diagonals:
// (i, 2i) in the top half and (i, 2i - n) in the bottom half. Needs
// n == 1 (mod 6), n >= 7.
PartialConfig near_diagonal_config(int n);

// sum over queens of |i + j - (n+1)| + |i - j|.
std::int64_t distance_sum(const PartialConfig& cfg);

// The corner-box cover: rows and columns i and n+1-i for i in [1, t] weigh
// |i/(t+1) - 1/2|, diagonals with |k| <= t-1 weigh 1 - |k|/(t+1), everything
// else 0, and then every diagonal through a queen of cfg is zeroed.
// Requires n == m + 2t and cfg inside the central m x m box.
LineWeighting hat_weighting(int n, int m, int t, const PartialConfig& cfg);

// A near-diagonal m-queens configuration embedded in the centre of the n
// board, with its hat-weighting certificate. For large enough n the
// certificate proves non-completability.
struct CentralInstance {
  int n = 0;
  int m = 0;  // largest m <= 241n/1000 with m == 1 (mod 6)
  int t = 0;  // margin (n - m) / 2
  PartialConfig config;
  LineWeighting certificate;
};

// Core construction, odd n only (even n goes through central_embedding_padded).
CentralInstance central_embedding(int n);

// Even boards: build on n' = n - 1, remap the plus-diagonals to the larger
// board and give the extra row and column weight 1.
CentralInstance central_embedding_padded(int n);

// Certificate value, margin parameters, and the value < n - m test, computed
// without materialising the weighting. Used to scan for the first n where
// the certificate becomes valid; agrees with certificate.value() exactly.
struct CentralProbe {
  int n = 0;
  int m = 0;
  int t = 0;
  Rat value;
  bool certifies = false;  // value < n - m
};

CentralProbe central_probe(int n);

// Smallest odd n in [from, to] whose central instance certifies, or 0.
int central_threshold(int from, int to);

// An n/3-queens configuration in the central box: a valid partial
// configuration that cannot be completed (combinatorial argument). Requires
// 3 | n and n/3 >= 4; deterministic (lexicographically first sub-solution).
PartialConfig third_construction(int n);

}  // namespace queens

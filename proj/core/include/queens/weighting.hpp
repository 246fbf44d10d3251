#pragma once

#include "queens/board.hpp"
#include "queens/rational.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace queens {

// Map from lines to [0, 1]; unset lines weigh 0. The dual certificate object:
// a weighting that covers every unattacked square yet has value less than the
// number of missing queens proves non-completability.
class LineWeighting {
 public:
  LineWeighting() = default;
  explicit LineWeighting(int n);

  int n() const { return n_; }
  const Rat& at(LineId line) const;
  void set(LineId line, Rat w);  // throws outside [0, 1]

  // Sum of all line weights.
  Rat value() const;

  void for_each_nonzero(const std::function<void(LineId, const Rat&)>& fn) const;

  bool operator==(const LineWeighting&) const = default;

 private:
  friend struct ScaledWeights;
  int n_ = 0;
  std::vector<Rat> weights_;
};

struct CoverReport {
  bool covered = true;
  std::optional<Square> first_violation;  // row-major first square with cover sum < 1
};

// True iff every square's four incident line weights sum to >= 1. Exact.
CoverReport covers(const LineWeighting& w, std::span<const Square> squares);

// Machine-checked proof of non-completability: w covers unattacked(cfg) and
// value(w) < n - |cfg|, both in exact rational arithmetic.
bool certify_incompletable(const PartialConfig& cfg, const LineWeighting& w);

// Non-negative mass on squares; a fractional completion of cfg when the
// support avoids attacked squares, each line carries total mass <= 1, and the
// total is n - |cfg|.
struct FractionalCompletion {
  int n = 0;
  std::vector<std::pair<Square, Rat>> mass;  // sorted by square, entries > 0

  Rat total() const;
};

struct FeasibilityReport {
  bool feasible = true;
  std::string detail;
};

FeasibilityReport fractional_feasible(const FractionalCompletion& fc, const PartialConfig& cfg);

// Certificate document:
//   {"n": ..., "config": [[r,c],...],
//    "weights": [[tag, index, numerator, denominator], ...], "value": "p/q"}
// with tag one of "row", "col", "diag+", "diag-" and numerator/denominator as
// decimal strings, never rounded.
struct Certificate {
  PartialConfig config;
  LineWeighting weights;
  Rat declared_value;
};

std::string to_certificate_json(const PartialConfig& cfg, const LineWeighting& w);
Certificate parse_certificate_json(const std::string& text);

struct VerifyReport {
  bool pass = false;
  std::string detail;
};

// Re-derives everything: declared value against the weights, cover of the
// unattacked set, and the strict value bound. Exact arithmetic only.
VerifyReport verify_certificate(const Certificate& cert);

}  // namespace queens

#include "queens/constructions.hpp"

#include "queens/solver.hpp"

#include <cstdlib>
#include <stdexcept>

namespace queens {

namespace {

[[noreturn]] void bad_input(const std::string& what) {
  throw std::invalid_argument(what);
}

// thirds test against n+1: left of, inside, or right of [1/3, 2/3]
enum class Band { Low, Mid, High };

Band band_of(int coord, int n) {
  const int s = n + 1;
  if (3 * coord < s) return Band::Low;
  if (3 * coord > 2 * s) return Band::High;
  return Band::Mid;
}

}  // namespace

SquareWeighting::SquareWeighting(int n)
    : n_(n), quarters_(static_cast<std::size_t>(n) * n, 4) {
  if (n < 1) bad_input("board size must be positive");
}

Rat SquareWeighting::at(Square sq) const { return make_rat(quarters_at(sq), 4); }

int SquareWeighting::quarters_at(Square sq) const {
  require_square(sq, n_);
  return quarters_[static_cast<std::size_t>(sq.row - 1) * n_ + (sq.col - 1)];
}

Rat SquareWeighting::line_total(LineId line) const {
  std::int64_t quarters = 0;
  for (const Square& sq : line_squares(line, n_)) quarters += quarters_at(sq);
  Rat total(quarters, 4);
  total.canonicalize();
  return total;
}

SquareWeighting regularize_weighting(int n) {
  SquareWeighting w(n);
  for (int i = 1; i <= n; ++i) {
    const Band bi = band_of(i, n);
    for (int j = 1; j <= n; ++j) {
      const Band bj = band_of(j, n);
      std::uint8_t quarters = 4;
      if (bi == Band::Mid && bj == Band::Mid) {
        quarters = 2;
      } else if (bi != Band::Mid && bj != Band::Mid) {
        quarters = 3;
      }
      w.quarters_[static_cast<std::size_t>(i - 1) * n + (j - 1)] = quarters;
    }
  }
  return w;
}

PartialConfig near_diagonal_config(int n) {
  if (n < 7 || n % 6 != 1)
    bad_input("near-diagonal configuration needs n == 1 (mod 6) and n >= 7, got n = " +
              std::to_string(n));
  std::vector<Square> queens;
  queens.reserve(n);
  for (int i = 1; i <= (n - 1) / 2; ++i) queens.push_back({i, 2 * i});
  for (int i = (n + 1) / 2; i <= n; ++i) queens.push_back({i, 2 * i - n});
  return PartialConfig(n, std::move(queens));
}

std::int64_t distance_sum(const PartialConfig& cfg) {
  std::int64_t sum = 0;
  for (const Square& sq : cfg.queens())
    sum += std::abs(sq.row + sq.col - (cfg.n() + 1)) + std::abs(sq.row - sq.col);
  return sum;
}

LineWeighting hat_weighting(int n, int m, int t, const PartialConfig& cfg) {
  if (n != m + 2 * t || t < 1 || m < 1)
    bad_input("hat weighting needs n = m + 2t with positive margins");
  if (cfg.n() != n) bad_input("configuration lives on the wrong board");
  for (const Square& sq : cfg.queens()) {
    if (sq.row <= t || sq.row > t + m || sq.col <= t || sq.col > t + m)
      bad_input("configuration leaves the central box");
  }

  LineWeighting w(n);
  const int den = 2 * (t + 1);
  for (int i = 1; i <= t; ++i) {
    Rat rw(std::abs(2 * i - (t + 1)), den);
    rw.canonicalize();
    w.set(row_line(i), rw);
    w.set(col_line(i), rw);
    w.set(row_line(n + 1 - i), rw);
    w.set(col_line(n + 1 - i), rw);
  }
  for (int k = -(t - 1); k <= t - 1; ++k) {
    Rat dw(t + 1 - std::abs(k), t + 1);
    dw.canonicalize();
    w.set(diag_plus(k), dw);
    w.set(diag_minus(k), dw);
  }
  // no unattacked square lies on a queen's diagonal, so these weights are free
  for (const Square& sq : cfg.queens()) {
    const int kp = sq.row + sq.col - (n + 1);
    const int km = sq.row - sq.col;
    if (std::abs(kp) <= t - 1) w.set(diag_plus(kp), 0);
    if (std::abs(km) <= t - 1) w.set(diag_minus(km), 0);
  }
  return w;
}

namespace {

// largest m <= 241 n' / 1000 with m == 1 (mod 6), at least 7; 0 if none
int central_m(int n_effective) {
  int m = static_cast<int>((241LL * n_effective) / 1000);
  while (m >= 7 && m % 6 != 1) --m;
  return m >= 7 ? m : 0;
}

}  // namespace

CentralInstance central_embedding(int n) {
  if (n % 2 == 0)
    bad_input("central embedding needs odd n (use central_embedding_padded for even boards)");
  const int m = central_m(n);
  if (m == 0)
    bad_input("n = " + std::to_string(n) +
              " is too small: no m <= 241n/1000 with m == 1 (mod 6) and m >= 7");
  const int t = (n - m) / 2;

  const PartialConfig inner = near_diagonal_config(m);
  std::vector<Square> shifted;
  shifted.reserve(inner.queens().size());
  for (const Square& sq : inner.queens()) shifted.push_back({sq.row + t, sq.col + t});
  PartialConfig config(n, std::move(shifted));

  LineWeighting certificate = hat_weighting(n, m, t, config);
  return {n, m, t, std::move(config), std::move(certificate)};
}

CentralInstance central_embedding_padded(int n) {
  if (n % 2 == 1) return central_embedding(n);
  const CentralInstance odd = central_embedding(n - 1);

  // same squares on the larger board; plus-diagonals shift index by -1
  PartialConfig config(n, odd.config.queens());
  LineWeighting certificate(n);
  odd.certificate.for_each_nonzero([&](LineId line, const Rat& q) {
    if (line.kind == LineKind::DiagPlus) line.index -= 1;
    certificate.set(line, q);
  });
  certificate.set(row_line(n), 1);
  certificate.set(col_line(n), 1);
  return {n, odd.m, odd.t, std::move(config), std::move(certificate)};
}

CentralProbe central_probe(int n) {
  CentralProbe probe;
  probe.n = n;
  const int pad = (n % 2 == 0) ? 1 : 0;  // even boards build on n-1 and add 2
  const int n_eff = n - pad;
  probe.m = central_m(n_eff);
  if (probe.m == 0) return probe;  // certifies stays false
  probe.t = (n_eff - probe.m) / 2;
  const int m = probe.m, t = probe.t;

  // everything scales by 2(t+1): rows |2i-(t+1)|, diagonals 2(t+1-|k|)
  std::int64_t scaled = 0;
  for (int i = 1; i <= t; ++i) scaled += 4 * std::abs(2 * i - (t + 1));
  for (int k = -(t - 1); k <= t - 1; ++k) scaled += 2 * 2 * (t + 1 - std::abs(k));
  // zeroed queen diagonals of the shifted near-diagonal configuration; for
  // (i, j) in the inner board both diagonal offsets stay in [-(m-1), m-1],
  // within the weighted band whenever m <= t
  const PartialConfig inner = near_diagonal_config(m);
  for (const Square& sq : inner.queens()) {
    const int kp = sq.row + sq.col - (m + 1);
    const int km = sq.row - sq.col;
    if (std::abs(kp) <= t - 1) scaled -= 2 * (t + 1 - std::abs(kp));
    if (std::abs(km) <= t - 1) scaled -= 2 * (t + 1 - std::abs(km));
  }
  Rat value(scaled, 2 * (t + 1));
  value.canonicalize();
  value += 2 * pad;  // unit weights on the extra row and column
  probe.value = value;
  probe.certifies = probe.value < Rat(n - probe.m);
  return probe;
}

int central_threshold(int from, int to) {
  if (from % 2 == 0) ++from;
  for (int n = from; n <= to; n += 2) {
    if (central_probe(n).certifies) return n;
  }
  return 0;
}

PartialConfig third_construction(int n) {
  if (n % 3 != 0 || n / 3 < 4)
    bad_input("the n/3 construction needs 3 | n and n/3 >= 4, got n = " + std::to_string(n));
  const int s = n / 3;
  const auto sub = complete(PartialConfig(s), {}, Branching::LexRow);
  if (sub.status != CompletionStatus::Completed)
    throw std::logic_error("no s-queens configuration for s = " + std::to_string(s));
  std::vector<Square> shifted;
  shifted.reserve(s);
  for (const Square& sq : sub.board->queens()) shifted.push_back({sq.row + s, sq.col + s});
  return PartialConfig(n, std::move(shifted));
}

}  // namespace queens

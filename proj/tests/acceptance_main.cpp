// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Everything numerical is checked in exact rational or integer arithmetic at
// the stated tolerance; runtime bounds are enforced with wall clocks.

#include "queens/constructions.hpp"
#include "queens/lp.hpp"
#include "queens/pipeline.hpp"
#include "queens/solver.hpp"
#include "queens/weighting.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace queens;
using nlohmann::json;

namespace {

struct Criterion {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
  void note(const std::string& info) {
    if (pass && detail.empty()) detail = info;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

PartialConfig random_partial(int n, int k, Rng& rng) {
  std::vector<Square> all;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) all.push_back({i, j});
  rng.shuffle(all);
  AttackTable table(n);
  std::vector<Square> chosen;
  for (const Square& sq : all) {
    if (static_cast<int>(chosen.size()) == k) break;
    if (table.attacked(sq)) continue;
    table.add(sq);
    chosen.push_back(sq);
  }
  return PartialConfig(n, std::move(chosen));
}

bool superset(const PartialConfig& big, const PartialConfig& small) {
  for (const Square& q : small.queens())
    if (!big.contains(q)) return false;
  return true;
}

int criterion2_seed(int n) { return 924000 + n; }
int criterion9_seed(int n, int seed) { return 1000 * n + seed; }

// ---------------------------------------------------------------------------
// 1. Nauck reproduction: exactly 2 completions, a valid completed board, < 1s.
Criterion criterion_1() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  const PartialConfig nauck(8, {{4, 2}, {5, 4}});

  const auto counted = count_completions(nauck);
  c.require(counted.exact && counted.count == 2,
            "expected exactly 2 completions, got " + std::to_string(counted.count));

  const auto completed = complete(nauck);
  c.require(completed.status == CompletionStatus::Completed, "Nauck board did not complete");
  if (completed.board) {
    c.require(completed.board->full() && is_valid_partial(completed.board->queens(), 8),
              "completion is not a valid full board");
    c.require(superset(*completed.board, nauck), "completion does not contain b4, d5");
  }
  const double elapsed = seconds_since(start);
  c.require(elapsed < 1.0, "took " + std::to_string(elapsed) + "s, budget 1s");
  c.note("2 completions, valid superset board, " + std::to_string(elapsed) + "s");
  return c;
}

// ---------------------------------------------------------------------------
// 2. Existence boundary: empty boards complete for all n in [4,100] (exact up
//    to 32, pipeline above), incompletable for n in {2,3}; < 60s total.
Criterion criterion_2() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  c.require(complete(PartialConfig(2)).status == CompletionStatus::Incompletable,
            "n=2 should be incompletable");
  c.require(complete(PartialConfig(3)).status == CompletionStatus::Incompletable,
            "n=3 should be incompletable");

  for (int n = 4; n <= 32; ++n) {
    const auto result = complete(PartialConfig(n));
    c.require(result.status == CompletionStatus::Completed &&
                  is_valid_partial(result.board->queens(), n),
              "exact completion failed at n = " + std::to_string(n));
  }
  PipelineParams params;
  for (int n = 33; n <= 100; ++n) {
    Rng rng(criterion2_seed(n));
    const auto outcome = complete_via_pipeline(PartialConfig(n), params, rng);
    c.require(outcome.board.has_value() && outcome.board->full() &&
                  is_valid_partial(outcome.board->queens(), n),
              "pipeline completion failed at n = " + std::to_string(n));
  }
  const double elapsed = seconds_since(start);
  c.require(elapsed < 60.0, "took " + std::to_string(elapsed) + "s, budget 60s");
  c.note("n in [4,100] all completed, {2,3} proven impossible, " + std::to_string(elapsed) + "s");
  return c;
}

// ---------------------------------------------------------------------------
// 3. Regularizing weighting at n in {3, 30, 300}: rows/columns within additive 3
//    of 5n/6, diagonals at most 2n/3 + 3; n = 3 matches the grid exactly.
Criterion criterion_3() {
  Criterion c;
  for (int n : {3, 30, 300}) {
    const SquareWeighting w = regularize_weighting(n);
    const Rat row_target = make_rat(5 * n, 6);
    const Rat diag_cap = make_rat(2 * n, 3) + 3;
    for (int i = 1; i <= n; ++i) {
      c.require(abs(w.line_total(row_line(i)) - row_target) <= 3,
                "row total out of band at n=" + std::to_string(n) + " i=" + std::to_string(i));
      c.require(abs(w.line_total(col_line(i)) - row_target) <= 3,
                "column total out of band at n=" + std::to_string(n) + " j=" + std::to_string(i));
    }
    for (int k = -(n - 1); k <= n - 1; ++k) {
      c.require(w.line_total(diag_plus(k)) <= diag_cap,
                "plus-diagonal too heavy at n=" + std::to_string(n) + " k=" + std::to_string(k));
      c.require(w.line_total(diag_minus(k)) <= diag_cap,
                "minus-diagonal too heavy at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  // n = 3, cell for cell, zero tolerance
  const SquareWeighting w3 = regularize_weighting(3);
  c.require(w3.at({2, 2}) == make_rat(1, 2), "centre of the 3-grid must be 1/2");
  for (Square corner : {Square{1, 1}, Square{1, 3}, Square{3, 1}, Square{3, 3}})
    c.require(w3.at(corner) == make_rat(3, 4), "corners of the 3-grid must be 3/4");
  for (Square edge : {Square{1, 2}, Square{2, 1}, Square{2, 3}, Square{3, 2}})
    c.require(w3.at(edge) == Rat(1), "edge squares of the 3-grid must be 1");
  for (int i = 1; i <= 3; ++i) {
    c.require(w3.line_total(row_line(i)) == make_rat(5, 2), "3-grid row sums must equal 5/2");
    c.require(w3.line_total(col_line(i)) == make_rat(5, 2), "3-grid column sums must equal 5/2");
  }
  for (int k = -2; k <= 2; ++k) {
    c.require(w3.line_total(diag_plus(k)) <= 2, "3-grid diagonal sums must stay <= 2");
    c.require(w3.line_total(diag_minus(k)) <= 2, "3-grid diagonal sums must stay <= 2");
  }
  c.note("exact rational bounds hold at n = 3, 30, 300");
  return c;
}

// ---------------------------------------------------------------------------
// 4. Near-diagonal configurations for n == 1 (mod 6) in [7, 97]: valid and with
//    distance sum at most 2n^2/3 + 5n, exactly.
Criterion criterion_4() {
  Criterion c;
  for (int n = 7; n <= 97; n += 6) {
    PartialConfig cfg = near_diagonal_config(n);  // constructor revalidates
    c.require(cfg.size() == n, "configuration is not full at n = " + std::to_string(n));
    const std::int64_t sum = distance_sum(cfg);
    c.require(3 * sum <= 2 * static_cast<std::int64_t>(n) * n + 15 * static_cast<std::int64_t>(n),
              "distance sum " + std::to_string(sum) + " above 2n^2/3 + 5n at n = " +
                  std::to_string(n));
  }
  c.note("all 16 admissible sizes valid with bounded distance sums");
  return c;
}

// ---------------------------------------------------------------------------
// 5. The n=12 central 4-queens instance is proven incompletable in < 10s.
Criterion criterion_5() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  const PartialConfig third = third_construction(12);
  c.require(third.size() == 4, "expected 4 queens");
  const auto result = complete(third);
  c.require(result.status == CompletionStatus::Incompletable,
            "exhaustive search failed to prove incompletability");
  const double elapsed = seconds_since(start);
  c.require(elapsed < 10.0, "took " + std::to_string(elapsed) + "s, budget 10s");
  c.note("proof in " + std::to_string(result.nodes) + " nodes, " + std::to_string(elapsed) + "s");
  return c;
}

// ---------------------------------------------------------------------------
// 6. The central construction certifies at some odd n0 (exact arithmetic,
//    verification < 30s) and its value obeys 3t - 2m + 2m^2/(3t) + C with the
//    pinned constant C = 1.
Criterion criterion_6() {
  Criterion c;
  const int n0 = central_threshold(31, 20001);
  c.require(n0 > 0, "no certifying odd board size found up to 20001");
  if (n0 == 0) return c;
  c.require(n0 % 2 == 1, "threshold must be odd");
  c.require(n0 >= 1000 && n0 <= 10000, "n0 = " + std::to_string(n0) +
                                           " outside the expected order of magnitude");

  const CentralInstance inst = central_embedding(n0);
  const auto start = std::chrono::steady_clock::now();
  const bool verified = certify_incompletable(inst.config, inst.certificate);
  const double verify_seconds = seconds_since(start);
  c.require(verified, "certificate failed exact verification at n0");
  c.require(verify_seconds < 30.0,
            "verification took " + std::to_string(verify_seconds) + "s, budget 30s");

  // the cheap scan value and the materialised weighting agree exactly
  const CentralProbe probe = central_probe(n0);
  c.require(probe.value == inst.certificate.value(), "probe and certificate values disagree");

  // closed-form bound with the measured constant (max observed 826/1056)
  Rat worst(-1);
  for (int n = 31; n <= 20001; n += 2) {
    const CentralProbe p = central_probe(n);
    if (p.m == 0) continue;
    const Rat base = Rat(3 * p.t - 2 * p.m) + make_rat(2L * p.m * p.m, 3L * p.t);
    const Rat slack = p.value - base;
    if (slack > worst) worst = slack;
    if (!(p.value <= base + 1)) {
      c.require(false, "closed-form bound with C = 1 violated at n = " + std::to_string(n));
      break;
    }
  }
  c.note("n0 = " + std::to_string(n0) + ", m = " + std::to_string(inst.m) + ", value " +
         rat_str(inst.certificate.value()) + " < " + std::to_string(n0 - inst.m) +
         ", verify " + std::to_string(verify_seconds) + "s, measured C = " + rat_str(worst));
  return c;
}

// ---------------------------------------------------------------------------
// 7. LP duality on 50 random instances across n in [4,12]: exact zero gap,
//    weak duality on cross pairs, integral completability forces full value.
Criterion criterion_7() {
  Criterion c;
  Rng rng(20260808);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(9));
    const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(n / 2) + 1));
    const PartialConfig cfg = random_partial(n, k, rng);

    const LpOutcome packing = max_fractional_completion(cfg);
    const LpOutcome cover = min_cover_value(cfg);

    c.require(packing.optimal_value == cover.optimal_value,
              "duality gap at n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                  rat_str(packing.optimal_value) + " vs " + rat_str(cover.optimal_value));
    c.require(packing.dual.value() >= cover.primal.total(), "weak duality violated (pack dual)");
    c.require(cover.dual.value() >= packing.primal.total(), "weak duality violated (cover dual)");

    if (complete(cfg).status == CompletionStatus::Completed)
      c.require(packing.optimal_value >= Rat(n - cfg.size()),
                "integrally completable instance with fractional value below n - |Q'|");
  }
  c.note("50 instances, all gaps exactly zero");
  return c;
}

// ---------------------------------------------------------------------------
// 8. Soundness chain: every certified-incompletable instance with n <= 14 is
//    independently proven incompletable by exhaustive search.
Criterion criterion_8() {
  Criterion c;
  int certified = 0;
  Rng rng(777);

  auto check_chain = [&](const PartialConfig& cfg, const LineWeighting& w) {
    if (!certify_incompletable(cfg, w)) return;
    ++certified;
    c.require(complete(cfg).status == CompletionStatus::Incompletable,
              "certificate disagrees with exhaustive search on an n = " +
                  std::to_string(cfg.n()) + " instance");
  };

  // LP-generated certificates on random instances
  for (int trial = 0; trial < 140; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(11));  // 4..14
    const int upper = std::max(1, (3 * n) / 4);
    const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(upper)));
    const PartialConfig cfg = random_partial(n, std::min(k, n), rng);
    const LpOutcome cover = min_cover_value(cfg);
    if (cover.optimal_value < Rat(n - cfg.size())) check_chain(cfg, cover.dual);
  }
  // the n = 12 construction with its LP certificate
  const PartialConfig third = third_construction(12);
  check_chain(third, min_cover_value(third).dual);

  c.require(certified >= 10, "only " + std::to_string(certified) +
                                 " certified instances arose; chain needs a real sample");
  c.note(std::to_string(certified) + " certificates, zero disagreements");
  return c;
}

// ---------------------------------------------------------------------------
// 9. Pipeline success rate: for n in {64, 128, 256} and random floor(n/60)
//    queens, at least 90% of 20 seeded trials complete; < 10 minutes total.
Criterion criterion_9() {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  PipelineParams params;  // restart budget 50 by default
  for (int n : {64, 128, 256}) {
    int successes = 0;
    for (int seed = 0; seed < 20; ++seed) {
      Rng rng(criterion9_seed(n, seed));
      const PartialConfig cfg = random_partial(n, n / 60, rng);
      const auto outcome = complete_via_pipeline(cfg, params, rng);
      if (!outcome.board) continue;
      const bool valid = outcome.board->full() &&
                         is_valid_partial(outcome.board->queens(), n) &&
                         superset(*outcome.board, cfg);
      c.require(valid, "pipeline returned an invalid board at n = " + std::to_string(n));
      successes += valid;
    }
    c.require(successes >= 18, "only " + std::to_string(successes) + "/20 successes at n = " +
                                   std::to_string(n));
  }
  const double elapsed = seconds_since(start);
  c.require(elapsed < 600.0, "took " + std::to_string(elapsed) + "s, budget 600s");
  c.note("60 trials across three sizes, " + std::to_string(elapsed) + "s");
  return c;
}

// ---------------------------------------------------------------------------
// 10. Rainbow invariants: 1e5 randomized matching operations with zero
//     violations; every successful augmentation grows the matching by one.
Criterion criterion_10() {
  Criterion c;
  std::uint64_t operations = 0;
  std::uint64_t augmentations = 0;
  Rng rng(101);
  try {
    while (operations < 100000) {
      const int n = 24 + static_cast<int>(rng.below(41));  // 24..64
      const PartialConfig cfg = random_partial(n, static_cast<int>(rng.below(3)), rng);
      const auto g = board_to_graph(cfg);
      std::vector<int> pool(g.edge_count());
      std::iota(pool.begin(), pool.end(), 0);

      // greedy growth: every add() checks both disjointness invariants
      auto nibble = nibble_matching(g, pool, 1.0, 1, rng);
      operations += nibble.matching.size();
      c.require(nibble.matching.verify(), "nibble produced a non-rainbow matching");

      RainbowMatching m = std::move(nibble.matching);
      const int goal = g.a_size();
      while (m.size() < goal) {
        const int before = m.size();
        auto grown = augment(g, m, {}, 10, rng);
        if (!grown) break;
        ++operations;
        ++augmentations;
        c.require(grown->size() == before + 1, "augmentation changed size by more than one");
        c.require(grown->verify(), "augmentation broke the rainbow invariants");
        m = std::move(*grown);
      }
    }
  } catch (const std::logic_error& e) {
    c.require(false, std::string("invariant guard fired: ") + e.what());
  }
  c.note(std::to_string(operations) + " operations, " + std::to_string(augmentations) +
         " augmentations, zero violations");
  return c;
}

// ---------------------------------------------------------------------------
// 11. Colour-split statistics on the empty 128-board: for 20 sampled set
//     pairs of size ceil(eps*n), the deviation |e_Gi - p_i^t e_G| stays below
//     9 t m^{-1/5} |A||B| sqrt(log n) in at least 95% of 200 seeded runs.
Criterion criterion_11() {
  Criterion c;
  const int n = 128;
  PipelineParams params;  // eps = 0.01, alpha = 0.1
  const auto probs = params.split_probabilities(2);
  const int m = static_cast<int>(std::ceil(params.epsilon * n));
  const double bound = 9.0 * 2 * std::pow(m, -0.2) * (static_cast<double>(m) * m) *
                       std::sqrt(std::log(static_cast<double>(n)));

  // fixed sample of 20 row/column set pairs
  Rng sampler(4096);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
  for (int p = 0; p < 20; ++p) {
    std::vector<int> rows(n), cols(n);
    std::iota(rows.begin(), rows.end(), 1);
    std::iota(cols.begin(), cols.end(), 1);
    sampler.shuffle(rows);
    sampler.shuffle(cols);
    rows.resize(m);
    cols.resize(m);
    pairs.emplace_back(rows, cols);
  }

  const int diag_span = 2 * n - 1;
  int good_runs = 0;
  double worst = 0.0;
  for (int run = 0; run < 200; ++run) {
    Rng rng(31337 + run);
    // label every diagonal colour like colour_split does
    std::vector<std::uint8_t> label(2 * diag_span);
    for (auto& l : label) {
      const double r = rng.real01();
      double cum = 0.0;
      l = 5;
      for (int i = 0; i < 6; ++i) {
        cum += probs[i];
        if (r < cum) {
          l = static_cast<std::uint8_t>(i);
          break;
        }
      }
    }
    bool run_ok = true;
    for (const auto& [rows, cols] : pairs) {
      std::array<int, 6> counts{};
      int total = 0;
      for (int i : rows) {
        for (int j : cols) {
          const int plus = i + j - (n + 1) + (n - 1);
          const int minus = diag_span + i - j + (n - 1);
          ++total;
          if (label[plus] == label[minus]) ++counts[label[plus]];
        }
      }
      for (int lab = 0; lab < 6; ++lab) {
        const double expected = std::pow(probs[lab], 2) * total;
        const double deviation = std::abs(counts[lab] - expected);
        worst = std::max(worst, deviation / bound);
        if (deviation >= bound) run_ok = false;
      }
    }
    good_runs += run_ok;
  }
  c.require(good_runs >= 190, "only " + std::to_string(good_runs) + "/200 runs within the bound");
  std::ostringstream margin;
  margin.precision(3);
  margin << worst;
  c.note(std::to_string(good_runs) + "/200 runs in bound; worst deviation at " + margin.str() +
         " of the allowance");
  return c;
}

// ---------------------------------------------------------------------------
// 12. qc-scan, exhaustive for n in [4,8] in < 5 minutes: qc(4) = 0 with a
//     witness square lying in neither 4-queens solution, and the fractional
//     threshold dominating qc everywhere.
Criterion criterion_12() {
  Criterion c;
  const char* cli = std::getenv("QUEENS_CLI");
  c.require(cli != nullptr, "QUEENS_CLI must point at the queens binary");
  if (!cli) return c;

  const auto start = std::chrono::steady_clock::now();
  const std::string command =
      std::string(cli) + " qc-scan --n-min 4 --n-max 8 --format structured 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  c.require(pipe != nullptr, "could not launch the qc-scan subprocess");
  if (!pipe) return c;
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    output.append(buffer.data(), got);
  const int status = pclose(pipe);
  const double elapsed = seconds_since(start);
  c.require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "qc-scan exited abnormally");
  c.require(elapsed < 300.0, "took " + std::to_string(elapsed) + "s, budget 300s");

  // the two 4-queens solutions, for the witness check
  const PartialConfig sol_a(4, {{1, 2}, {2, 4}, {3, 1}, {4, 3}});
  const PartialConfig sol_b(4, {{1, 3}, {2, 1}, {3, 4}, {4, 2}});

  int rows_seen = 0;
  std::istringstream lines(output);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] != '{') continue;
    const json row = json::parse(line, nullptr, false);
    if (row.is_discarded() || row.value("type", "") != "row") continue;
    ++rows_seen;
    const int n = row["n"].get<int>();
    const int qc = row.value("qc", -2);
    if (n == 4) {
      c.require(qc == 0, "qc(4) should be 0, got " + std::to_string(qc));
      const std::string witness = row.value("qc_witness", "");
      c.require(!witness.empty(), "missing qc(4) witness");
      if (!witness.empty()) {
        const PartialConfig w = parse_algebraic(witness, 4);
        c.require(w.size() == 1, "qc(4) witness should be a single queen");
        for (const Square& sq : w.queens())
          c.require(!sol_a.contains(sq) && !sol_b.contains(sq),
                    "witness square lies in a 4-queens solution");
      }
    }
    // fractional threshold dominates qc
    if (row.contains("qc_fractional"))
      c.require(row["qc_fractional"].get<int>() >= qc, "fractional threshold below qc at n = " +
                                                           std::to_string(n));
    else if (row.contains("qc_fractional_at_least"))
      c.require(row["qc_fractional_at_least"].get<int>() >= qc,
                "fractional bound below qc at n = " + std::to_string(n));
  }
  c.require(rows_seen == 5, "expected rows for n = 4..8, saw " + std::to_string(rows_seen));
  c.note("exhaustive scan of n in [4,8] in " + std::to_string(elapsed) + "s");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string only = argc > 1 ? argv[1] : "";
  struct Entry {
    int id;
    const char* name;
    std::function<Criterion()> run;
  };
  const std::vector<Entry> entries = {
      {1, "Nauck reproduction", criterion_1},
      {2, "existence boundary n in [4,100]", criterion_2},
      {3, "regularizing weighting bounds", criterion_3},
      {4, "near-diagonal configurations", criterion_4},
      {5, "n/3 construction proven incompletable", criterion_5},
      {6, "central certificate at the threshold", criterion_6},
      {7, "LP duality, zero gap", criterion_7},
      {8, "certificate soundness chain", criterion_8},
      {9, "pipeline success rate", criterion_9},
      {10, "rainbow invariants under load", criterion_10},
      {11, "colour-split statistics", criterion_11},
      {12, "qc-scan exhaustive mode", criterion_12},
  };

  int failures = 0;
  for (const Entry& entry : entries) {
    if (!only.empty() && only != std::to_string(entry.id)) continue;
    Criterion result;
    try {
      result = entry.run();
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s  criterion %2d: %s%s%s\n", result.pass ? "PASS" : "FAIL", entry.id,
                entry.name, result.detail.empty() ? "" : " — ", result.detail.c_str());
    std::fflush(stdout);
    failures += !result.pass;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}

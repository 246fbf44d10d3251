// queens: solve, count, certify, construct and benchmark n-queens completion
// instances. Exit codes are mathematical outcomes so scripts can branch:
//   0 success / completable
//   1 usage or input error
//   2 proven incompletable
//   3 inconclusive (heuristic failure or exhausted budget)

#include <CLI11.hpp>
#include <json.hpp>

#include "queens/board.hpp"
#include "queens/constructions.hpp"
#include "queens/lp.hpp"
#include "queens/pipeline.hpp"
#include "queens/rng.hpp"
#include "queens/solver.hpp"
#include "queens/weighting.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using nlohmann::json;
using namespace queens;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kIncompletable = 2;
constexpr int kInconclusive = 3;

struct OutputOptions {
  std::string format = "human";
  bool structured() const { return format == "structured"; }
};

void emit_record(const OutputOptions& out, const json& j) {
  if (out.structured()) std::cout << j.dump() << "\n";
}

json board_json(const PartialConfig& cfg) {
  json queens = json::array();
  for (const Square& sq : cfg.queens()) queens.push_back({sq.row, sq.col});
  return json{{"n", cfg.n()}, {"queens", queens}};
}

void print_board(const OutputOptions& out, const PartialConfig& cfg) {
  if (out.structured()) return;  // boards ride inside the summary record
  if (cfg.n() <= 26 && cfg.size() > 0) std::cout << "queens: " << to_algebraic(cfg) << "\n";
  if (cfg.n() <= 40) {
    std::cout << render_ascii(cfg);
  } else {
    std::cout << to_board_json(cfg) << "\n";  // diagram would not fit a terminal
  }
}

struct BoardInput {
  int n = 0;
  std::string board;
  std::string file;

  void attach(CLI::App* cmd, bool required = false) {
    cmd->add_option("--n", n, "Board size (empty board unless --board is given)");
    cmd->add_option("--board", board, "Algebraic queen list, e.g. \"b4,d5\" (needs --n)");
    cmd->add_option("--file", file, "Board document file: {\"n\":8,\"queens\":[[4,2],[5,4]]}");
    if (required) cmd->require_option();
  }

  PartialConfig load() const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw std::invalid_argument("cannot open board file: " + file);
      std::stringstream buffer;
      buffer << in.rdbuf();
      return parse_board_json(buffer.str());
    }
    if (!board.empty()) {
      if (n <= 0) throw std::invalid_argument("--board needs --n");
      return parse_algebraic(board, n);
    }
    if (n <= 0) throw std::invalid_argument("give a board via --n, --board or --file");
    return PartialConfig(n);
  }
};

int worker_count(std::size_t tasks) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("QUEENS_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && cap < static_cast<long>(hw)) hw = static_cast<unsigned>(cap);
  }
  return static_cast<int>(std::min<std::size_t>(hw, std::max<std::size_t>(tasks, 1)));
}

// Index-addressed fan-out so aggregation stays order-independent.
void parallel_for(std::size_t tasks, const std::function<void(std::size_t)>& run) {
  const int workers = worker_count(tasks);
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks; ++i) run(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < tasks; i = next.fetch_add(1)) run(i);
    });
  }
  for (auto& t : pool) t.join();
}

PartialConfig random_partial(int n, int k, Rng& rng) {
  std::vector<Square> all;
  all.reserve(static_cast<std::size_t>(n) * n);
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

json phase_json(const PhaseRecord& rec) {
  json j{{"type", "phase"}, {"phase", rec.phase}};
  for (const auto& [key, value] : rec.fields) j[key] = value;
  return j;
}

// ---------------------------------------------------------------- complete --

struct CompleteArgs {
  BoardInput input;
  std::string strategy = "auto";
  std::uint64_t seed = 0;
  std::uint64_t budget_nodes = 0;
  PipelineParams pipeline;
  OutputOptions out;
};

int run_complete(const CompleteArgs& args) {
  const PartialConfig cfg = args.input.load();
  std::string strategy = args.strategy;
  if (strategy == "auto") strategy = cfg.n() > 64 ? "pipeline" : "exact";

  if (strategy == "pipeline") {
    Rng rng(args.seed);
    const auto outcome = complete_via_pipeline(cfg, args.pipeline, rng);
    for (const auto& rec : outcome.diagnostics) emit_record(args.out, phase_json(rec));
    if (outcome.board) {
      print_board(args.out, *outcome.board);
      emit_record(args.out, json{{"type", "summary"},
                                 {"result", "completed"},
                                 {"strategy", "pipeline"},
                                 {"restarts", outcome.restarts_used},
                                 {"board", board_json(*outcome.board)}});
      if (!args.out.structured()) std::cout << "completed (pipeline, " << outcome.restarts_used
                                            << " restart(s))\n";
      return kOk;
    }
    // heuristic gave up; exhaustive search still might answer when bounded
    if (args.strategy == "auto") {
      SolveBudget fallback{args.budget_nodes ? args.budget_nodes : 20'000'000, 0};
      const auto exact = complete(cfg, fallback);
      if (exact.status == CompletionStatus::Completed) {
        print_board(args.out, *exact.board);
        emit_record(args.out, json{{"type", "summary"},
                                   {"result", "completed"},
                                   {"strategy", "exact-fallback"},
                                   {"board", board_json(*exact.board)}});
        if (!args.out.structured()) std::cout << "completed (exact fallback)\n";
        return kOk;
      }
      if (exact.status == CompletionStatus::Incompletable) {
        emit_record(args.out,
                    json{{"type", "summary"}, {"result", "incompletable"}, {"proof", "exhaustive"}});
        if (!args.out.structured()) std::cout << "incompletable (exhaustive)\n";
        return kIncompletable;
      }
    }
    emit_record(args.out, json{{"type", "summary"}, {"result", "heuristic-failure"}});
    if (!args.out.structured()) std::cout << "heuristic failure (inconclusive)\n";
    return kInconclusive;
  }

  if (strategy != "exact") throw std::invalid_argument("unknown strategy: " + strategy);
  const auto result = complete(cfg, SolveBudget{args.budget_nodes, 0});
  switch (result.status) {
    case CompletionStatus::Completed:
      print_board(args.out, *result.board);
      emit_record(args.out, json{{"type", "summary"},
                                 {"result", "completed"},
                                 {"strategy", "exact"},
                                 {"nodes", result.nodes},
                                 {"board", board_json(*result.board)}});
      if (!args.out.structured())
        std::cout << "completed (exact, " << result.nodes << " nodes)\n";
      return kOk;
    case CompletionStatus::Incompletable:
      emit_record(args.out, json{{"type", "summary"},
                                 {"result", "incompletable"},
                                 {"proof", "exhaustive"},
                                 {"nodes", result.nodes}});
      if (!args.out.structured()) std::cout << "incompletable (exhaustive)\n";
      return kIncompletable;
    case CompletionStatus::BudgetExhausted:
      emit_record(args.out, json{{"type", "summary"},
                                 {"result", "budget-exhausted"},
                                 {"nodes", result.nodes}});
      if (!args.out.structured()) std::cout << "budget exhausted (inconclusive)\n";
      return kInconclusive;
  }
  return kUsage;
}

// ------------------------------------------------------------------- count --

struct CountArgs {
  BoardInput input;
  std::uint64_t cap = 0;
  std::uint64_t budget_nodes = 0;
  int ceiling = 12;
  OutputOptions out;
};

int run_count(const CountArgs& args) {
  const PartialConfig cfg = args.input.load();
  if (cfg.n() > args.ceiling && args.cap == 0 && args.budget_nodes == 0)
    throw std::invalid_argument(
        "n = " + std::to_string(cfg.n()) + " is above the enumeration ceiling " +
        std::to_string(args.ceiling) + "; set --cap or --budget-nodes to proceed anyway");
  const auto result = count_completions(cfg, SolveBudget{args.budget_nodes, args.cap});
  emit_record(args.out, json{{"type", "summary"},
                             {"count", result.count},
                             {"exact", result.exact},
                             {"nodes", result.nodes}});
  if (!args.out.structured()) {
    std::cout << result.count;
    if (!result.exact) std::cout << " (lower bound, search truncated)";
    std::cout << "\n";
  }
  if (!result.exact) return kInconclusive;
  return result.count > 0 ? kOk : kIncompletable;
}

// ----------------------------------------------------------------- certify --

struct CertifyArgs {
  BoardInput input;
  std::string verify_file;
  std::string out_file;
  int lp_ceiling = 64;
  int exhaustive_ceiling = 20;
  OutputOptions out;
};

int run_certify(const CertifyArgs& args) {
  if (!args.verify_file.empty()) {
    std::ifstream in(args.verify_file);
    if (!in) throw std::invalid_argument("cannot open certificate file: " + args.verify_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const Certificate cert = parse_certificate_json(buffer.str());
    const VerifyReport report = verify_certificate(cert);
    emit_record(args.out, json{{"type", "summary"},
                               {"verdict", report.pass ? "PASS" : "FAIL"},
                               {"detail", report.detail}});
    if (!args.out.structured())
      std::cout << (report.pass ? "PASS" : "FAIL") << ": " << report.detail << "\n";
    return report.pass ? kIncompletable : kInconclusive;
  }

  const PartialConfig cfg = args.input.load();
  if (cfg.n() > args.lp_ceiling)
    throw std::invalid_argument("board size exceeds --lp-ceiling " +
                                std::to_string(args.lp_ceiling));
  LpLimits limits;
  limits.max_n = args.lp_ceiling;
  const LpOutcome cover = min_cover_value(cfg, limits);
  const Rat needed(cfg.n() - cfg.size());

  if (cover.optimal_value < needed) {
    const std::string doc = to_certificate_json(cfg, cover.dual);
    const Certificate cert = parse_certificate_json(doc);
    const VerifyReport report = verify_certificate(cert);
    if (!report.pass) throw std::runtime_error("internal error: generated certificate failed: " +
                                               report.detail);
    if (!args.out_file.empty()) {
      std::ofstream out(args.out_file);
      out << doc << "\n";
    } else if (!args.out.structured()) {
      std::cout << doc << "\n";
    }
    emit_record(args.out, json{{"type", "summary"},
                               {"result", "certificate"},
                               {"value", rat_str(cover.optimal_value)},
                               {"needed", rat_str(needed)},
                               {"certificate", json::parse(doc)}});
    if (!args.out.structured())
      std::cout << "certificate: cover value " << rat_str(cover.optimal_value) << " < "
                << rat_str(needed) << " proves non-completability\n";
    return kIncompletable;
  }

  // no certificate at this relaxation; fall back to exhaustive search when
  // the board is small enough to settle integrally
  if (cfg.n() <= args.exhaustive_ceiling) {
    const auto exact = complete(cfg);
    if (exact.status == CompletionStatus::Incompletable) {
      emit_record(args.out, json{{"type", "summary"},
                                 {"result", "no-lp-certificate"},
                                 {"value", rat_str(cover.optimal_value)},
                                 {"integral", "incompletable"}});
      if (!args.out.structured())
        std::cout << "no LP certificate (cover value " << rat_str(cover.optimal_value)
                  << " >= " << rat_str(needed)
                  << "); integral incompletability confirmed by exhaustive search\n";
      return kIncompletable;
    }
    emit_record(args.out, json{{"type", "summary"},
                               {"result", "no-certificate-exists"},
                               {"value", rat_str(cover.optimal_value)},
                               {"integral", "completable"}});
    if (!args.out.structured())
      std::cout << "no certificate exists: the configuration is completable\n";
    return kOk;
  }
  emit_record(args.out, json{{"type", "summary"},
                             {"result", "no-lp-certificate"},
                             {"value", rat_str(cover.optimal_value)},
                             {"integral", "unknown"}});
  if (!args.out.structured())
    std::cout << "no LP certificate at this relaxation; board too large for exhaustive search\n";
  return kInconclusive;
}

// --------------------------------------------------------------- construct --

struct ConstructArgs {
  std::string kind;
  int n = 0;
  std::string out_file;
  OutputOptions out;
};

int run_construct(const ConstructArgs& args) {
  if (args.n <= 0) throw std::invalid_argument("construct needs --n");

  if (args.kind == "regularize") {
    const SquareWeighting w = regularize_weighting(args.n);
    json rows = json::array();
    for (int i = 1; i <= args.n; ++i) {
      json row = json::array();
      for (int j = 1; j <= args.n; ++j) row.push_back(rat_str(w.at({i, j})));
      rows.push_back(std::move(row));
    }
    const json doc{{"type", "square-weighting"}, {"n", args.n}, {"values", rows}};
    std::cout << doc.dump() << "\n";
    return kOk;
  }

  if (args.kind == "near-diagonal") {
    const PartialConfig cfg = near_diagonal_config(args.n);
    print_board(args.out, cfg);
    emit_record(args.out, json{{"type", "summary"},
                               {"kind", "near-diagonal"},
                               {"distance_sum", distance_sum(cfg)},
                               {"board", board_json(cfg)}});
    if (!args.out.structured())
      std::cout << "near-diagonal configuration, distance sum " << distance_sum(cfg) << "\n";
    return kOk;
  }

  if (args.kind == "third") {
    const PartialConfig cfg = third_construction(args.n);
    print_board(args.out, cfg);
    emit_record(args.out,
                json{{"type", "summary"}, {"kind", "third"}, {"board", board_json(cfg)}});
    if (!args.out.structured())
      std::cout << args.n / 3 << " queens in the central box (not completable)\n";
    return kOk;
  }

  if (args.kind == "central") {
    const CentralInstance inst = central_embedding_padded(args.n);
    const bool verified = certify_incompletable(inst.config, inst.certificate);
    const std::string cert_doc = to_certificate_json(inst.config, inst.certificate);
    if (!args.out_file.empty()) {
      std::ofstream out(args.out_file);
      out << cert_doc << "\n";
    }
    print_board(args.out, inst.config);
    emit_record(args.out, json{{"type", "summary"},
                               {"kind", "central"},
                               {"m", inst.m},
                               {"t", inst.t},
                               {"value", rat_str(inst.certificate.value())},
                               {"needed", rat_str(Rat(inst.n - inst.m))},
                               {"certificate_valid", verified},
                               {"board", board_json(inst.config)},
                               {"certificate", json::parse(cert_doc)}});
    if (!args.out.structured()) {
      std::cout << "central instance: m = " << inst.m << ", t = " << inst.t << ", value "
                << rat_str(inst.certificate.value()) << " vs n - m = " << inst.n - inst.m << "\n";
      std::cout << (verified ? "certificate verifies: proven incompletable\n"
                             : "certificate value too large at this n (threshold is n = 1747)\n");
    }
    return verified ? kIncompletable : kOk;
  }

  throw std::invalid_argument("unknown construction kind: " + args.kind +
                              " (use central|third|near-diagonal|regularize)");
}

// ----------------------------------------------------------------- qc-scan --

struct QcScanArgs {
  int n_max = 8;
  int n_min = 2;
  long per_size_budget = 2'000'000;
  int sampled_trials = 40;
  int sampled_max_size = 0;  // 0: up to n
  OutputOptions out;
};

// every valid size-k configuration, symmetry-reduced via canonical forms
void enumerate_configs(int n, int k, long budget,
                       const std::function<void(const PartialConfig&)>& visit) {
  std::vector<Square> chosen;
  AttackTable table(n);
  long seen = 0;
  const std::function<void(int)> recurse = [&](int start) {
    if (seen >= budget) return;
    if (static_cast<int>(chosen.size()) == k) {
      ++seen;
      PartialConfig cfg(n, chosen);
      if (canonical_form(cfg) == cfg) visit(cfg);
      return;
    }
    const int remaining = k - static_cast<int>(chosen.size());
    for (int idx = start; idx <= n * n - remaining; ++idx) {
      const Square sq{idx / n + 1, idx % n + 1};
      if (table.attacked(sq)) continue;
      table.add(sq);
      chosen.push_back(sq);
      recurse(idx + 1);
      chosen.pop_back();
      table.remove(sq);
      if (seen >= budget) return;
    }
  };
  recurse(0);
}

int run_qc_scan(const QcScanArgs& args) {
  for (int n = args.n_min; n <= args.n_max; ++n) {
    if (complete(PartialConfig(n)).status != CompletionStatus::Completed) {
      emit_record(args.out, json{{"type", "row"}, {"n", n}, {"note", "no configuration exists"}});
      if (!args.out.structured()) std::cout << "n=" << n << ": no configuration exists\n";
      continue;
    }
    if (n <= 9) {
      // exhaustive, symmetry reduced
      int qc = -1;
      int qc_fractional = -1;
      std::string witness;
      std::string frac_witness;
      bool budget_hit = false;
      for (int k = 0; k <= n && qc_fractional < 0; ++k) {
        bool found_integral = false;
        bool found_fractional = false;
        long tested = 0;
        enumerate_configs(n, k, args.per_size_budget, [&](const PartialConfig& cfg) {
          ++tested;
          if (found_fractional) return;
          if (complete(cfg).status != CompletionStatus::Incompletable) return;
          if (!found_integral && qc < 0) {
            found_integral = true;
            witness = cfg.size() ? to_algebraic(cfg) : "(empty)";
          }
          found_integral = true;
          if (!fractionally_completable(cfg)) {
            found_fractional = true;
            frac_witness = cfg.size() ? to_algebraic(cfg) : "(empty)";
          }
        });
        if (tested >= args.per_size_budget) budget_hit = true;
        if (found_integral && qc < 0) qc = k - 1;
        if (found_fractional && qc_fractional < 0) qc_fractional = k - 1;
        if (budget_hit) break;
      }
      json row{{"type", "row"}, {"n", n}, {"mode", "exhaustive"}};
      row["qc"] = qc;
      row["qc_witness"] = witness;
      if (qc_fractional >= 0) {
        row["qc_fractional"] = qc_fractional;
        row["qc_fractional_witness"] = frac_witness;
      } else {
        row["qc_fractional_at_least"] = qc;  // no fractional witness found yet
      }
      if (budget_hit) row["budget_exhausted"] = true;
      emit_record(args.out, row);
      if (!args.out.structured()) {
        std::cout << "n=" << n << ": qc=" << qc << " (witness " << witness << ")";
        if (qc_fractional >= 0)
          std::cout << ", fractional threshold=" << qc_fractional << " (witness " << frac_witness
                    << ")";
        else
          std::cout << ", fractional threshold>=" << qc;
        std::cout << "\n";
      }
    } else {
      // sampled evidence beyond the exhaustive range
      const int max_k = args.sampled_max_size > 0 ? args.sampled_max_size : n;
      int first_incompletable = -1;
      int first_fractional = -1;
      for (int k = 1; k <= max_k; ++k) {
        const auto probe = qc_star_probe(n, k, args.sampled_trials, 1000003ULL * n + k);
        if (first_incompletable < 0 && probe.integral_completable < probe.trials)
          first_incompletable = k;
        if (first_fractional < 0 && probe.fractional_completable < probe.trials)
          first_fractional = k;
        if (first_incompletable >= 0 && first_fractional >= 0) break;
      }
      emit_record(args.out, json{{"type", "row"},
                                 {"n", n},
                                 {"mode", "sampled"},
                                 {"trials_per_size", args.sampled_trials},
                                 {"first_sampled_incompletable_size", first_incompletable},
                                 {"first_sampled_fractionally_incompletable_size", first_fractional}});
      if (!args.out.structured())
        std::cout << "n=" << n << " (sampled): first incompletable size " << first_incompletable
                  << ", first fractionally incompletable size " << first_fractional << "\n";
    }
  }
  return kOk;
}

// ------------------------------------------------------------------- bench --

struct BenchArgs {
  std::string suite;
  std::string sizes = "64,128,256";
  int seeds = 20;
  std::uint64_t seed0 = 0;
  PipelineParams pipeline;
  OutputOptions out;
};

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (!token.empty()) out.push_back(std::stoi(token));
  }
  if (out.empty()) throw std::invalid_argument("empty size list");
  return out;
}

int run_bench(const BenchArgs& args) {
  const std::vector<int> sizes = parse_sizes(args.sizes);

  if (args.suite == "pipeline") {
    for (int n : sizes) {
      std::vector<int> ok(args.seeds, 0);
      std::vector<double> secs(args.seeds, 0.0);
      parallel_for(args.seeds, [&](std::size_t i) {
        Rng rng(args.seed0 + i);
        const PartialConfig cfg = random_partial(n, n / 60, rng);
        const auto start = std::chrono::steady_clock::now();
        const auto outcome = complete_via_pipeline(cfg, args.pipeline, rng);
        secs[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        ok[i] = outcome.board && outcome.board->full() &&
                is_valid_partial(outcome.board->queens(), n);
      });
      int successes = 0;
      double total = 0.0;
      for (int i = 0; i < args.seeds; ++i) {
        successes += ok[i];
        total += secs[i];
      }
      emit_record(args.out, json{{"type", "row"},
                                 {"suite", "pipeline"},
                                 {"n", n},
                                 {"queens", n / 60},
                                 {"seeds", args.seeds},
                                 {"successes", successes},
                                 {"mean_seconds", total / args.seeds}});
      if (!args.out.structured())
        std::cout << "pipeline n=" << n << ": " << successes << "/" << args.seeds
                  << " completions, mean " << total / args.seeds << "s\n";
    }
    return kOk;
  }

  if (args.suite == "lp") {
    for (int n : sizes) {
      std::vector<std::string> gaps(args.seeds);
      std::vector<double> secs(args.seeds, 0.0);
      std::atomic<bool> all_zero{true};
      parallel_for(args.seeds, [&](std::size_t i) {
        Rng rng(args.seed0 + 7919 * i + n);
        const PartialConfig cfg = random_partial(n, static_cast<int>(rng.below(n / 2 + 1)), rng);
        const auto start = std::chrono::steady_clock::now();
        const LpOutcome packing = max_fractional_completion(cfg);
        const LpOutcome cover = min_cover_value(cfg);
        secs[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const Rat gap = cover.optimal_value - packing.optimal_value;
        gaps[i] = rat_str(gap);
        if (gap != 0) all_zero = false;
      });
      double total = 0.0;
      for (double s : secs) total += s;
      emit_record(args.out, json{{"type", "row"},
                                 {"suite", "lp"},
                                 {"n", n},
                                 {"instances", args.seeds},
                                 {"gaps", gaps},
                                 {"all_gaps_zero", all_zero.load()},
                                 {"mean_seconds", total / args.seeds}});
      if (!args.out.structured())
        std::cout << "lp n=" << n << ": " << args.seeds << " instances, duality gaps all zero: "
                  << (all_zero ? "yes" : "NO") << ", mean " << total / args.seeds << "s\n";
    }
    return kOk;
  }

  throw std::invalid_argument("unknown bench suite: '" + args.suite + "' (use pipeline|lp)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"n-queens completion toolkit"};
  app.require_subcommand(1);

  CompleteArgs complete_args;
  auto* cmd_complete = app.add_subcommand("complete", "Complete a partial configuration");
  complete_args.input.attach(cmd_complete);
  cmd_complete->add_option("--strategy", complete_args.strategy, "exact | pipeline | auto")
      ->check(CLI::IsMember({"exact", "pipeline", "auto"}));
  cmd_complete->add_option("--seed", complete_args.seed, "RNG seed for the pipeline");
  cmd_complete->add_option("--budget-nodes", complete_args.budget_nodes,
                           "Search node budget (0 = unlimited)");
  cmd_complete->add_option("--restarts", complete_args.pipeline.restarts, "Pipeline restarts");
  cmd_complete->add_option("--alpha", complete_args.pipeline.alpha, "Colour-split reserve mass");
  cmd_complete->add_option("--epsilon", complete_args.pipeline.epsilon, "Concentration slack");
  cmd_complete->add_option("--depth-bound", complete_args.pipeline.augment_depth,
                           "Augmenting sequence vertex bound");
  cmd_complete->add_option("--format", complete_args.out.format, "human | structured")
      ->check(CLI::IsMember({"human", "structured"}));

  CountArgs count_args;
  auto* cmd_count = app.add_subcommand("count", "Count completions exactly");
  count_args.input.attach(cmd_count);
  cmd_count->add_option("--cap", count_args.cap, "Stop after this many solutions");
  cmd_count->add_option("--budget-nodes", count_args.budget_nodes, "Node budget (0 = unlimited)");
  cmd_count->add_option("--ceiling", count_args.ceiling,
                        "Refuse boards above this size without --cap/--budget-nodes");
  cmd_count->add_option("--format", count_args.out.format, "human | structured")
      ->check(CLI::IsMember({"human", "structured"}));

  CertifyArgs certify_args;
  auto* cmd_certify =
      app.add_subcommand("certify", "Generate or verify a non-completability certificate");
  certify_args.input.attach(cmd_certify);
  cmd_certify->add_option("--verify", certify_args.verify_file,
                          "Verify this certificate document instead of generating");
  cmd_certify->add_option("--out", certify_args.out_file, "Write the certificate here");
  cmd_certify->add_option("--lp-ceiling", certify_args.lp_ceiling, "LP size ceiling");
  cmd_certify->add_option("--exhaustive-ceiling", certify_args.exhaustive_ceiling,
                          "Exhaustive fallback ceiling when no LP certificate exists");
  cmd_certify->add_option("--format", certify_args.out.format, "human | structured")
      ->check(CLI::IsMember({"human", "structured"}));

  ConstructArgs construct_args;
  auto* cmd_construct = app.add_subcommand("construct", "Generate the named explicit instances");
  cmd_construct->add_option("kind", construct_args.kind,
                            "central | third | near-diagonal | regularize")
      ->required();
  cmd_construct->add_option("--n", construct_args.n, "Board size")->required();
  cmd_construct->add_option("--out", construct_args.out_file, "Write the certificate here");
  cmd_construct->add_option("--format", construct_args.out.format, "human | structured")
      ->check(CLI::IsMember({"human", "structured"}));

  QcScanArgs qc_args;
  auto* cmd_qc = app.add_subcommand("qc-scan", "Scan completion thresholds per board size");
  cmd_qc->add_option("--n-max", qc_args.n_max, "Largest board size")->required();
  cmd_qc->add_option("--n-min", qc_args.n_min, "Smallest board size");
  cmd_qc->add_option("--budget", qc_args.per_size_budget,
                     "Enumeration budget per (n, k) in exhaustive mode");
  cmd_qc->add_option("--trials", qc_args.sampled_trials, "Samples per size beyond n = 9");
  cmd_qc->add_option("--max-size", qc_args.sampled_max_size,
                     "Largest sampled configuration size (0 = n)");
  cmd_qc->add_option("--format", qc_args.out.format, "human | structured")
      ->check(CLI::IsMember({"human", "structured"}));

  BenchArgs bench_args;
  auto* cmd_bench = app.add_subcommand("bench", "Benchmark suites (QUEENS_THREADS caps workers)");
  cmd_bench->add_option("suite", bench_args.suite, "pipeline | lp")->required();
  cmd_bench->add_option("--n", bench_args.sizes, "Sizes: 64,128,256 or 4..12");
  cmd_bench->add_option("--seeds", bench_args.seeds, "Trials per size");
  cmd_bench->add_option("--seed", bench_args.seed0, "Base seed");
  cmd_bench->add_option("--restarts", bench_args.pipeline.restarts, "Pipeline restarts");
  cmd_bench->add_option("--format", bench_args.out.format, "human | structured")
      ->check(CLI::IsMember({"human", "structured"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (cmd_complete->parsed()) return run_complete(complete_args);
    if (cmd_count->parsed()) return run_count(count_args);
    if (cmd_certify->parsed()) return run_certify(certify_args);
    if (cmd_construct->parsed()) return run_construct(construct_args);
    if (cmd_qc->parsed()) return run_qc_scan(qc_args);
    if (cmd_bench->parsed()) return run_bench(bench_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

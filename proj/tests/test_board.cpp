#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "queens/board.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <set>

using namespace queens;

namespace {

// Independent attack predicate: pure coordinate arithmetic, no line machinery.
bool attacks(Square a, Square b) {
  return a.row == b.row || a.col == b.col || a.row + a.col == b.row + b.col ||
         a.row - a.col == b.row - b.col;
}

std::set<Square> brute_force_unattacked(const PartialConfig& cfg) {
  std::set<Square> out;
  for (int i = 1; i <= cfg.n(); ++i) {
    for (int j = 1; j <= cfg.n(); ++j) {
      const Square sq{i, j};
      bool hit = false;
      for (const Square& q : cfg.queens()) hit = hit || attacks(sq, q);
      if (!hit) out.insert(sq);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("lines_through fixed order and values") {
  auto lines = lines_through({4, 2}, 8);
  CHECK(lines[0] == row_line(4));
  CHECK(lines[1] == col_line(2));
  CHECK(lines[2] == diag_plus(-3));
  CHECK(lines[3] == diag_minus(2));

  lines = lines_through({1, 1}, 8);
  CHECK(lines[2] == diag_plus(-7));
  CHECK(lines[3] == diag_minus(0));

  lines = lines_through({5, 4}, 8);
  CHECK(lines[2] == diag_plus(0));
  CHECK(lines[3] == diag_minus(1));

  CHECK_THROWS_AS(lines_through({0, 3}, 8), std::invalid_argument);
  CHECK_THROWS_AS(lines_through({3, 9}, 8), std::invalid_argument);
}

TEST_CASE("line_squares enumeration") {
  CHECK(line_squares(diag_plus(0), 3) == std::vector<Square>{{1, 3}, {2, 2}, {3, 1}});
  CHECK(line_squares(diag_minus(2), 3) == std::vector<Square>{{3, 1}});
  CHECK(line_squares(row_line(2), 3) == std::vector<Square>{{2, 1}, {2, 2}, {2, 3}});
  CHECK_THROWS_AS(line_squares(diag_plus(3), 3), std::invalid_argument);

  for (int n : {1, 2, 5, 8}) {
    for (int ord = 0; ord < line_count(n); ++ord) {
      const LineId line = line_from_ordinal(ord, n);
      CHECK(line_ordinal(line, n) == static_cast<std::size_t>(ord));
      CHECK(static_cast<int>(line_squares(line, n).size()) == line_length(line, n));
    }
  }
}

TEST_CASE("every square lies on its four lines, and only there") {
  for (int n : {1, 3, 8}) {
    std::size_t total = 0;
    for (int ord = 0; ord < line_count(n); ++ord)
      total += line_squares(line_from_ordinal(ord, n), n).size();
    // each square lies on exactly 4 lines
    CHECK(total == 4u * n * n);

    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const Square sq{i, j};
        for (LineId line : lines_through(sq, n)) {
          auto squares = line_squares(line, n);
          CHECK(std::count(squares.begin(), squares.end(), sq) == 1);
        }
      }
    }
  }
}

TEST_CASE("is_valid_partial") {
  CHECK(is_valid_partial(std::vector<Square>{{4, 2}, {5, 4}}, 8));
  CHECK_FALSE(is_valid_partial(std::vector<Square>{{1, 1}, {2, 2}}, 8));
  CHECK(is_valid_partial(std::vector<Square>{}, 5));
  CHECK_THROWS_AS((void)is_valid_partial(std::vector<Square>{{6, 1}}, 5), std::invalid_argument);

  CHECK_THROWS_AS(PartialConfig(8, {{1, 1}, {3, 3}}), std::invalid_argument);
}

TEST_CASE("unattacked") {
  CHECK(unattacked(test::eight_queens()).empty());
  CHECK(unattacked(PartialConfig(4)).size() == 16);

  const PartialConfig nauck = test::nauck();
  auto got = unattacked(nauck);
  std::set<Square> expected = brute_force_unattacked(nauck);
  CHECK(std::set<Square>(got.begin(), got.end()) == expected);
  // the queens themselves are attacked (they occupy their own lines)
  for (const Square& q : nauck.queens()) CHECK(expected.count(q) == 0);
}

TEST_CASE("unattacked extension and antitonicity") {
  Rng rng(20260806);
  for (int trial = 0; trial < 20; ++trial) {
    const PartialConfig cfg = test::random_partial(8, static_cast<int>(rng.below(5)), rng);
    auto lambda = unattacked(cfg);
    for (const Square& sq : lambda) {
      auto extended = cfg.queens();
      extended.push_back(sq);
      CHECK(is_valid_partial(extended, cfg.n()));
    }
    if (!lambda.empty()) {
      const Square pick = lambda[rng.below(lambda.size())];
      const PartialConfig bigger = cfg.with(pick);
      auto inner = unattacked(bigger);
      std::set<Square> outer(lambda.begin(), lambda.end());
      for (const Square& sq : inner) CHECK(outer.count(sq) == 1);
    }
  }
}

TEST_CASE("board symmetries") {
  const PartialConfig cfg = test::nauck();
  for (int sym = 0; sym < 8; ++sym) {
    const PartialConfig mapped = transform_config(cfg, sym);
    CHECK(mapped.size() == cfg.size());
    CHECK(canonical_form(mapped) == canonical_form(cfg));
  }
  // transform 0 is the identity
  CHECK(transform_config(cfg, 0) == cfg);
}

TEST_CASE("board json document") {
  const PartialConfig cfg = test::nauck();
  const std::string doc = to_board_json(cfg);
  CHECK(parse_board_json(doc) == cfg);
  CHECK(parse_board_json(R"({"n": 8, "queens": [[4, 2], [5, 4]]})") == cfg);
  CHECK(parse_board_json(R"({"n": 3})") == PartialConfig(3));

  CHECK_THROWS_AS(parse_board_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_board_json(R"({"queens": []})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_board_json(R"({"n": 4, "queens": [[0, 1]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_board_json(R"({"n": 4, "queens": [[1, 1], [2, 2]]})"),
                  std::invalid_argument);
}

TEST_CASE("algebraic notation") {
  const PartialConfig cfg = parse_algebraic("b4,d5", 8);
  CHECK(cfg == test::nauck());
  CHECK(parse_algebraic("b4 d5", 8) == cfg);
  CHECK(to_algebraic(cfg) == "b4,d5");
  CHECK(parse_algebraic("", 6) == PartialConfig(6));
  CHECK_THROWS_AS(parse_algebraic("4b", 8), std::invalid_argument);
  CHECK_THROWS_AS(parse_algebraic("q9", 8), std::invalid_argument);
}

TEST_CASE("ascii rendering puts row n on top") {
  const PartialConfig cfg(2, {{1, 2}});
  CHECK(render_ascii(cfg) == ". .\n. Q\n");
}

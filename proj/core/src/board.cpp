#include "queens/board.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace queens {

namespace {

[[noreturn]] void bad_input(const std::string& what) {
  throw std::invalid_argument(what);
}

void require_line(LineId line, int n) {
  switch (line.kind) {
    case LineKind::Row:
    case LineKind::Col:
      if (line.index < 1 || line.index > n)
        bad_input("line index out of range for board size " + std::to_string(n));
      return;
    case LineKind::DiagPlus:
    case LineKind::DiagMinus:
      if (line.index < -(n - 1) || line.index > n - 1)
        bad_input("diagonal offset out of range for board size " + std::to_string(n));
      return;
  }
  bad_input("bad line kind");
}

}  // namespace

bool square_on_board(Square sq, int n) {
  return sq.row >= 1 && sq.row <= n && sq.col >= 1 && sq.col <= n;
}

void require_square(Square sq, int n) {
  if (!square_on_board(sq, n))
    bad_input("square (" + std::to_string(sq.row) + "," + std::to_string(sq.col) +
              ") outside board of size " + std::to_string(n));
}

std::size_t line_ordinal(LineId line, int n) {
  require_line(line, n);
  const std::size_t diag_span = 2 * static_cast<std::size_t>(n) - 1;
  switch (line.kind) {
    case LineKind::Row:
      return static_cast<std::size_t>(line.index - 1);
    case LineKind::Col:
      return static_cast<std::size_t>(n + line.index - 1);
    case LineKind::DiagPlus:
      return 2 * static_cast<std::size_t>(n) + static_cast<std::size_t>(line.index + n - 1);
    case LineKind::DiagMinus:
      return 2 * static_cast<std::size_t>(n) + diag_span +
             static_cast<std::size_t>(line.index + n - 1);
  }
  bad_input("bad line kind");
}

LineId line_from_ordinal(std::size_t ordinal, int n) {
  const std::size_t nn = static_cast<std::size_t>(n);
  const std::size_t diag_span = 2 * nn - 1;
  if (ordinal < nn) return row_line(static_cast<int>(ordinal) + 1);
  ordinal -= nn;
  if (ordinal < nn) return col_line(static_cast<int>(ordinal) + 1);
  ordinal -= nn;
  if (ordinal < diag_span) return diag_plus(static_cast<int>(ordinal) - (n - 1));
  ordinal -= diag_span;
  if (ordinal < diag_span) return diag_minus(static_cast<int>(ordinal) - (n - 1));
  bad_input("line ordinal out of range");
}

std::array<LineId, 4> lines_through(Square sq, int n) {
  require_square(sq, n);
  return {row_line(sq.row), col_line(sq.col), diag_plus(sq.row + sq.col - (n + 1)),
          diag_minus(sq.row - sq.col)};
}

int line_length(LineId line, int n) {
  require_line(line, n);
  if (line.kind == LineKind::Row || line.kind == LineKind::Col) return n;
  return n - std::abs(line.index);
}

std::vector<Square> line_squares(LineId line, int n) {
  require_line(line, n);
  std::vector<Square> out;
  switch (line.kind) {
    case LineKind::Row:
      for (int j = 1; j <= n; ++j) out.push_back({line.index, j});
      break;
    case LineKind::Col:
      for (int i = 1; i <= n; ++i) out.push_back({i, line.index});
      break;
    case LineKind::DiagPlus:
      // i + j = k + n + 1
      for (int i = 1; i <= n; ++i) {
        const int j = line.index + n + 1 - i;
        if (j >= 1 && j <= n) out.push_back({i, j});
      }
      break;
    case LineKind::DiagMinus:
      for (int i = 1; i <= n; ++i) {
        const int j = i - line.index;
        if (j >= 1 && j <= n) out.push_back({i, j});
      }
      break;
  }
  return out;
}

bool is_valid_partial(std::span<const Square> queens, int n) {
  AttackTable table(n);
  for (const Square& sq : queens) {
    require_square(sq, n);
    if (table.attacked(sq)) return false;
    table.add(sq);
  }
  return true;
}

PartialConfig::PartialConfig(int n) : n_(n) {
  if (n < 0) bad_input("negative board size");
}

PartialConfig::PartialConfig(int n, std::vector<Square> queens) : n_(n), queens_(std::move(queens)) {
  if (n < 0) bad_input("negative board size");
  std::sort(queens_.begin(), queens_.end());
  queens_.erase(std::unique(queens_.begin(), queens_.end()), queens_.end());
  if (!is_valid_partial(queens_, n_))
    bad_input("queens attack each other: not a partial configuration");
}

bool PartialConfig::contains(Square sq) const {
  return std::binary_search(queens_.begin(), queens_.end(), sq);
}

PartialConfig PartialConfig::with(Square sq) const {
  std::vector<Square> qs = queens_;
  qs.push_back(sq);
  return PartialConfig(n_, std::move(qs));
}

AttackTable::AttackTable(int n) : n_(n), used_(static_cast<std::size_t>(line_count(n)), false) {}

void AttackTable::add(Square sq) {
  for (LineId line : lines_through(sq, n_)) used_[line_ordinal(line, n_)] = true;
}

void AttackTable::remove(Square sq) {
  for (LineId line : lines_through(sq, n_)) used_[line_ordinal(line, n_)] = false;
}

bool AttackTable::attacked(Square sq) const {
  for (LineId line : lines_through(sq, n_)) {
    if (used_[line_ordinal(line, n_)]) return true;
  }
  return false;
}

bool AttackTable::occupied(LineId line) const { return used_[line_ordinal(line, n_)]; }

std::vector<Square> unattacked(const PartialConfig& cfg) {
  const int n = cfg.n();
  AttackTable table(n);
  for (const Square& sq : cfg.queens()) table.add(sq);
  std::vector<Square> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Square sq{i, j};
      if (!table.attacked(sq)) out.push_back(sq);
    }
  }
  return out;
}

Square transform_square(Square sq, int n, int sym) {
  if (sym & 1) std::swap(sq.row, sq.col);
  if (sym & 2) sq.row = n + 1 - sq.row;
  if (sym & 4) sq.col = n + 1 - sq.col;
  return sq;
}

PartialConfig transform_config(const PartialConfig& cfg, int sym) {
  std::vector<Square> qs;
  qs.reserve(cfg.queens().size());
  for (const Square& sq : cfg.queens()) qs.push_back(transform_square(sq, cfg.n(), sym));
  return PartialConfig(cfg.n(), std::move(qs));
}

PartialConfig canonical_form(const PartialConfig& cfg) {
  PartialConfig best = cfg;
  for (int sym = 1; sym < 8; ++sym) {
    PartialConfig candidate = transform_config(cfg, sym);
    if (candidate.queens() < best.queens()) best = std::move(candidate);
  }
  return best;
}

std::string to_board_json(const PartialConfig& cfg) {
  nlohmann::json doc;
  doc["n"] = cfg.n();
  auto& queens = doc["queens"] = nlohmann::json::array();
  for (const Square& sq : cfg.queens()) queens.push_back({sq.row, sq.col});
  return doc.dump();
}

PartialConfig parse_board_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad_input(std::string("board document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    bad_input("board document: missing integer field \"n\"");
  const int n = doc["n"].get<int>();
  std::vector<Square> queens;
  if (doc.contains("queens")) {
    if (!doc["queens"].is_array()) bad_input("board document: \"queens\" must be a list");
    for (const auto& item : doc["queens"]) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
          !item[1].is_number_integer())
        bad_input("board document: each queen must be a [row, col] pair");
      queens.push_back({item[0].get<int>(), item[1].get<int>()});
    }
  }
  return PartialConfig(n, std::move(queens));
}

PartialConfig parse_algebraic(const std::string& text, int n) {
  std::vector<Square> queens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ',' || std::isspace(static_cast<unsigned char>(text[pos]))))
      ++pos;
    if (pos >= text.size()) break;
    const char file = text[pos];
    if (file < 'a' || file > 'z')
      bad_input("algebraic square must start with a file letter a-z, got '" +
                std::string(1, file) + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) bad_input("algebraic square missing rank number");
    const int row = std::stoi(text.substr(start, pos - start));
    queens.push_back({row, file - 'a' + 1});
  }
  return PartialConfig(n, std::move(queens));
}

std::string to_algebraic(const PartialConfig& cfg) {
  if (cfg.n() > 26) bad_input("algebraic notation is only defined for n <= 26");
  std::string out;
  for (const Square& sq : cfg.queens()) {
    if (!out.empty()) out += ',';
    out += static_cast<char>('a' + sq.col - 1);
    out += std::to_string(sq.row);
  }
  return out;
}

std::string render_ascii(const PartialConfig& cfg) {
  const int n = cfg.n();
  std::ostringstream out;
  for (int i = n; i >= 1; --i) {
    for (int j = 1; j <= n; ++j) {
      out << (cfg.contains({i, j}) ? 'Q' : '.');
      if (j < n) out << ' ';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace queens

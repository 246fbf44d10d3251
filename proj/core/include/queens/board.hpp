#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace queens {

// 1-indexed board coordinates. Algebraic notation maps the column to the
// letter and the row to the number, so "b4" is {row 4, col 2}.
struct Square {
  int row = 0;
  int col = 0;
  auto operator<=>(const Square&) const = default;
};

enum class LineKind : std::uint8_t { Row, Col, DiagPlus, DiagMinus };

// A row, column or diagonal of the n x n board. Rows and columns are indexed
// in [1, n]; diagonals by k in [-(n-1), n-1], where DiagPlus(k) is the set
// {(i,j) : i+j-(n+1) = k} and DiagMinus(k) is {(i,j) : i-j = k}. There are
// 6n-2 lines in total.
struct LineId {
  LineKind kind = LineKind::Row;
  int index = 0;
  auto operator<=>(const LineId&) const = default;
};

inline LineId row_line(int i) { return {LineKind::Row, i}; }
inline LineId col_line(int j) { return {LineKind::Col, j}; }
inline LineId diag_plus(int k) { return {LineKind::DiagPlus, k}; }
inline LineId diag_minus(int k) { return {LineKind::DiagMinus, k}; }

inline int line_count(int n) { return 6 * n - 2; }

// Dense index in [0, 6n-2): rows, then columns, then DiagPlus by ascending k,
// then DiagMinus by ascending k.
std::size_t line_ordinal(LineId line, int n);
LineId line_from_ordinal(std::size_t ordinal, int n);

bool square_on_board(Square sq, int n);
void require_square(Square sq, int n);  // throws std::invalid_argument

// The four lines containing sq, in the fixed order
// [Row, Col, DiagPlus(i+j-(n+1)), DiagMinus(i-j)].
std::array<LineId, 4> lines_through(Square sq, int n);

// Number of squares on the line: n for rows/columns, n-|k| for diagonals.
int line_length(LineId line, int n);

// All squares of the line in increasing row order (columns ascending for a
// row line).
std::vector<Square> line_squares(LineId line, int n);

// True iff no two of the given queens share a row, column or diagonal.
// Throws if any square is off the board.
bool is_valid_partial(std::span<const Square> queens, int n);

// A set of mutually non-attacking queens. Validated on construction; queens
// are kept sorted, so equal configurations compare equal. Immutable.
class PartialConfig {
 public:
  PartialConfig() = default;
  explicit PartialConfig(int n);
  PartialConfig(int n, std::vector<Square> queens);

  int n() const { return n_; }
  const std::vector<Square>& queens() const { return queens_; }
  int size() const { return static_cast<int>(queens_.size()); }
  bool full() const { return size() == n_; }
  bool contains(Square sq) const;

  // New configuration with one more queen; throws if the square is attacked.
  PartialConfig with(Square sq) const;

  auto operator<=>(const PartialConfig&) const = default;

 private:
  int n_ = 0;
  std::vector<Square> queens_;
};

// Occupancy of all 6n-2 lines, one bit per line, for O(1) attack checks.
class AttackTable {
 public:
  explicit AttackTable(int n);
  void add(Square sq);
  void remove(Square sq);
  bool attacked(Square sq) const;  // true iff any of the 4 lines is occupied
  bool occupied(LineId line) const;

 private:
  int n_ = 0;
  std::vector<bool> used_;
};

// All squares sharing no line with any queen of cfg. The queens' own
// squares are excluded: a queen occupies all four of its lines.
std::vector<Square> unattacked(const PartialConfig& cfg);

// The 8 board symmetries: bit 0 = transpose, bit 1 = flip rows, bit 2 = flip
// columns. sym = 0 is the identity.
Square transform_square(Square sq, int n, int sym);
PartialConfig transform_config(const PartialConfig& cfg, int sym);
// Lexicographically least among the 8 transforms; orbits share one form.
PartialConfig canonical_form(const PartialConfig& cfg);

// Board document: {"n": 8, "queens": [[4, 2], [5, 4]]}.
std::string to_board_json(const PartialConfig& cfg);
PartialConfig parse_board_json(const std::string& text);

// Algebraic list like "b4,d5" (comma or whitespace separated). Emission is
// only defined for n <= 26.
PartialConfig parse_algebraic(const std::string& text, int n);
std::string to_algebraic(const PartialConfig& cfg);

// Text diagram with row n at the top.
std::string render_ascii(const PartialConfig& cfg);

}  // namespace queens

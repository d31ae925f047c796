#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nonrep::sudoku {

/// Bit d-1 set means digit d is still possible.
using DigitMask = std::uint64_t;

inline constexpr DigitMask digit_bit(int digit) { return DigitMask{1} << (digit - 1); }
inline int mask_count(DigitMask m) { return std::popcount(m); }
/// Smallest digit in a non-empty mask.
inline int lowest_digit(DigitMask m) { return std::countr_zero(m) + 1; }

inline constexpr int kMinBox = 2;
inline constexpr int kMaxBox = 8;

/// Row/column/box index tables for one box size. Groups are numbered rows
/// first, then columns, then boxes, each in reading order.
class Geometry {
public:
  static std::shared_ptr<const Geometry> for_box(int box);

  int box() const noexcept { return box_; }
  int size() const noexcept { return size_; }  // B^2, also the digit count
  int cell_count() const noexcept { return size_ * size_; }
  int group_count() const noexcept { return 3 * size_; }

  int row(int cell) const noexcept { return cell / size_; }
  int col(int cell) const noexcept { return cell % size_; }
  int box_of(int cell) const noexcept { return (row(cell) / box_) * box_ + col(cell) / box_; }
  int cell(int row, int col) const noexcept { return row * size_ + col; }

  int row_group(int r) const noexcept { return r; }
  int col_group(int c) const noexcept { return size_ + c; }
  int box_group(int b) const noexcept { return 2 * size_ + b; }

  const std::vector<int>& group(int g) const { return groups_.at(static_cast<std::size_t>(g)); }
  const std::array<int, 3>& groups_of(int cell) const { return groups_of_.at(static_cast<std::size_t>(cell)); }
  const std::vector<int>& peers(int cell) const { return peers_.at(static_cast<std::size_t>(cell)); }
  bool same_group(int a, int b) const noexcept;
  bool in_group(int cell, int g) const;

  std::string cell_name(int cell) const;     // "r1c1"
  std::string group_name(int g) const;       // "row 1", "column 3", "box 2"

private:
  explicit Geometry(int box);

  int box_;
  int size_;
  std::vector<std::vector<int>> groups_;
  std::vector<std::array<int, 3>> groups_of_;
  std::vector<std::vector<int>> peers_;
};

class BoardParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Grid of placed digits plus per-cell candidate masks. Cheap to copy: the
/// geometry is shared.
class Board {
public:
  explicit Board(int box = 3);

  const Geometry& geometry() const noexcept { return *geometry_; }
  int box() const noexcept { return geometry_->box(); }
  int size() const noexcept { return geometry_->size(); }
  int cell_count() const noexcept { return geometry_->cell_count(); }

  int value(int cell) const { return values_.at(static_cast<std::size_t>(cell)); }
  bool is_placed(int cell) const { return value(cell) != 0; }
  DigitMask candidates(int cell) const { return candidates_.at(static_cast<std::size_t>(cell)); }
  bool has_candidate(int cell, int digit) const { return (candidates(cell) & digit_bit(digit)) != 0; }
  DigitMask all_digits() const noexcept { return full_; }

  bool solved() const noexcept;
  int placed_count() const noexcept;
  /// Every unplaced cell still has a candidate.
  bool consistent() const noexcept;

  /// Places `digit` and strips it from every peer. Returns false on a
  /// contradiction (the board is then partially updated and should be
  /// discarded).
  bool place(int cell, int digit);
  /// Removes one candidate. Returns false if that empties the cell or removes
  /// the digit already placed there.
  bool eliminate(int cell, int digit);

  friend bool operator==(const Board& a, const Board& b) {
    return a.box() == b.box() && a.values_ == b.values_ && a.candidates_ == b.candidates_;
  }

private:
  std::shared_ptr<const Geometry> geometry_;
  std::vector<int> values_;
  std::vector<DigitMask> candidates_;
  DigitMask full_;
};

/// 81-character form for B = 3 (digits, '.' or '0'; whitespace ignored), or
/// the generalized form "B <n>" followed by n^4 integers with 0 for empty.
Board parse_board(std::string_view text);
/// 81-character line for B = 3, generalized form otherwise.
std::string serialize_board(const Board& board);
/// Multi-line grid for display.
std::string render_grid(const Board& board);

bool verify_solution(const Board& board);

enum class RuleId {
  hidden_single,
  naked_single,
  intersection_triple,
  box_line,
  hidden_pair,
  matching_digit,
  matching_group,
  bilocation_cycle,
  bilocation_repetitive,
  bilocation_conflict,
  bivalue_cycle,
  bivalue_repetitive,
  bivalue_conflict,
  mixed_conflict,
};

inline constexpr int kMaxTier = 4;

std::string_view rule_name(RuleId id);
std::optional<RuleId> rule_from_name(std::string_view name);
/// 0 singles, 1 other local, 2 matching, 3 bilocation, 4 bivalue and mixed.
int rule_tier(RuleId id);

struct Witness {
  std::vector<int> cells;   // chain, cycle or conflict cells in order
  std::vector<int> labels;  // digits along the chain when meaningful
  std::string summary;
};

/// One rule firing. `placements` and `eliminations` hold (cell, digit).
struct Deduction {
  RuleId rule = RuleId::hidden_single;
  std::vector<std::pair<int, int>> placements;
  std::vector<std::pair<int, int>> eliminations;
  Witness witness;
  bool contradiction = false;

  bool empty() const noexcept { return placements.empty() && eliminations.empty() && !contradiction; }
  friend bool operator==(const Deduction& a, const Deduction& b) {
    return a.rule == b.rule && a.placements == b.placements && a.eliminations == b.eliminations &&
           a.contradiction == b.contradiction;
  }
};

/// nullopt when the deduction is a contradiction or produces one.
std::optional<Board> apply_deduction(Board board, const Deduction& d);

/// One line: rule, placements, eliminations and witness summary.
std::string format_deduction(const Geometry& geo, const Deduction& d);

}  // namespace nonrep::sudoku

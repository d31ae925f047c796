#include "sudoku/board.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <mutex>
#include <sstream>

namespace nonrep::sudoku {

namespace {

constexpr std::array<std::string_view, 14> kRuleNames = {
    "hiddenSingle",        "nakedSingle",          "intersectionTriple", "boxLine",
    "hiddenPair",          "matchingDigit",        "matchingGroup",      "bilocationCycle",
    "bilocationRepetitive", "bilocationConflict",  "bivalueCycle",       "bivalueRepetitive",
    "bivalueConflict",     "mixedConflict",
};

std::string pair_list(const Geometry& geo, const std::vector<std::pair<int, int>>& items) {
  std::string out;
  for (const auto& [cell, digit] : items) {
    if (!out.empty()) out += ',';
    out += geo.cell_name(cell) + "=" + std::to_string(digit);
  }
  return out.empty() ? "-" : out;
}

}  // namespace

Geometry::Geometry(int box) : box_(box), size_(box * box) {
  const int n = size_;
  groups_.assign(static_cast<std::size_t>(3 * n), {});
  groups_of_.resize(static_cast<std::size_t>(n * n));
  for (int c = 0; c < n * n; ++c) {
    const std::array<int, 3> gs{row_group(row(c)), col_group(col(c)), box_group(box_of(c))};
    groups_of_[static_cast<std::size_t>(c)] = gs;
    for (int g : gs) groups_[static_cast<std::size_t>(g)].push_back(c);
  }
  peers_.resize(static_cast<std::size_t>(n * n));
  for (int c = 0; c < n * n; ++c) {
    auto& p = peers_[static_cast<std::size_t>(c)];
    for (int g : groups_of_[static_cast<std::size_t>(c)])
      for (int d : groups_[static_cast<std::size_t>(g)])
        if (d != c) p.push_back(d);
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
  }
}

std::shared_ptr<const Geometry> Geometry::for_box(int box) {
  if (box < kMinBox || box > kMaxBox)
    throw std::invalid_argument("box size must be between " + std::to_string(kMinBox) + " and " +
                                std::to_string(kMaxBox));
  static std::mutex mutex;
  static std::array<std::shared_ptr<const Geometry>, kMaxBox + 1> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[static_cast<std::size_t>(box)];
  if (!slot) slot = std::shared_ptr<const Geometry>(new Geometry(box));
  return slot;
}

bool Geometry::same_group(int a, int b) const noexcept {
  return row(a) == row(b) || col(a) == col(b) || box_of(a) == box_of(b);
}

bool Geometry::in_group(int cell, int g) const {
  const auto& gs = groups_of(cell);
  return std::find(gs.begin(), gs.end(), g) != gs.end();
}

std::string Geometry::cell_name(int cell) const {
  return "r" + std::to_string(row(cell) + 1) + "c" + std::to_string(col(cell) + 1);
}

std::string Geometry::group_name(int g) const {
  if (g < size_) return "row " + std::to_string(g + 1);
  if (g < 2 * size_) return "column " + std::to_string(g - size_ + 1);
  return "box " + std::to_string(g - 2 * size_ + 1);
}

Board::Board(int box) : geometry_(Geometry::for_box(box)) {
  const int n = geometry_->size();
  full_ = n == 64 ? ~DigitMask{0} : (DigitMask{1} << n) - 1;
  values_.assign(static_cast<std::size_t>(n * n), 0);
  candidates_.assign(static_cast<std::size_t>(n * n), full_);
}

bool Board::solved() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](int v) { return v != 0; });
}

int Board::placed_count() const noexcept {
  return static_cast<int>(std::count_if(values_.begin(), values_.end(), [](int v) { return v != 0; }));
}

bool Board::consistent() const noexcept {
  for (std::size_t c = 0; c < values_.size(); ++c)
    if (values_[c] == 0 && candidates_[c] == 0) return false;
  return true;
}

bool Board::place(int cell, int digit) {
  if (digit < 1 || digit > size()) throw std::out_of_range("digit out of range");
  const auto c = static_cast<std::size_t>(cell);
  if (values_.at(c) != 0) return values_[c] == digit;
  const DigitMask bit = digit_bit(digit);
  if (!(candidates_[c] & bit)) return false;
  values_[c] = digit;
  candidates_[c] = bit;
  bool ok = true;
  for (int p : geometry_->peers(cell)) {
    const auto pi = static_cast<std::size_t>(p);
    if (values_[pi] == digit) ok = false;
    if (values_[pi] != 0) continue;
    candidates_[pi] &= ~bit;
    if (candidates_[pi] == 0) ok = false;
  }
  return ok;
}

bool Board::eliminate(int cell, int digit) {
  if (digit < 1 || digit > size()) throw std::out_of_range("digit out of range");
  const auto c = static_cast<std::size_t>(cell);
  if (values_.at(c) != 0) return values_[c] != digit;
  candidates_[c] &= ~digit_bit(digit);
  return candidates_[c] != 0;
}

Board parse_board(std::string_view text) {
  std::string s(text);
  std::size_t first = s.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && s[first] == 'B') {
    std::istringstream in(s.substr(first + 1));
    int box = 0;
    if (!(in >> box)) throw BoardParseError("missing box size after 'B'");
    if (box < kMinBox || box > kMaxBox)
      throw BoardParseError("box size " + std::to_string(box) + " out of range");
    Board b(box);
    const int n = b.size();
    std::vector<int> values;
    std::string token;
    while (in >> token) {
      int v = 0;
      try {
        std::size_t used = 0;
        v = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw BoardParseError("invalid cell value '" + token + "'");
      }
      if (v < 0 || v > n) throw BoardParseError("cell value " + token + " out of range");
      values.push_back(v);
    }
    if (static_cast<int>(values.size()) != b.cell_count())
      throw BoardParseError("expected " + std::to_string(b.cell_count()) + " cells, got " +
                            std::to_string(values.size()));
    for (int c = 0; c < b.cell_count(); ++c) {
      const int v = values[static_cast<std::size_t>(c)];
      if (v != 0 && !b.place(c, v))
        throw BoardParseError("digit " + std::to_string(v) + " repeated in a group at " +
                              b.geometry().cell_name(c));
    }
    return b;
  }

  std::vector<int> values;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '.' || ch == '0')
      values.push_back(0);
    else if (ch >= '1' && ch <= '9')
      values.push_back(ch - '0');
    else
      throw BoardParseError(std::string("invalid character '") + ch + "'");
  }
  if (values.size() != 81)
    throw BoardParseError("expected 81 cells, got " + std::to_string(values.size()));
  Board b(3);
  for (int c = 0; c < 81; ++c) {
    const int v = values[static_cast<std::size_t>(c)];
    if (v != 0 && !b.place(c, v))
      throw BoardParseError("digit " + std::to_string(v) + " repeated in a group at " + b.geometry().cell_name(c));
  }
  return b;
}

std::string serialize_board(const Board& board) {
  std::string out;
  if (board.box() == 3) {
    for (int c = 0; c < board.cell_count(); ++c)
      out += board.value(c) == 0 ? '.' : static_cast<char>('0' + board.value(c));
    return out;
  }
  out = "B " + std::to_string(board.box()) + "\n";
  const int n = board.size();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c) out += ' ';
      out += std::to_string(board.value(r * n + c));
    }
    out += '\n';
  }
  return out;
}

std::string render_grid(const Board& board) {
  const Geometry& geo = board.geometry();
  const int n = geo.size();
  const int width = n >= 10 ? 2 : 1;
  std::string out;
  for (int r = 0; r < n; ++r) {
    if (r && r % geo.box() == 0) {
      for (int c = 0; c < n; ++c) {
        if (c && c % geo.box() == 0) out += "+-";
        out += std::string(static_cast<std::size_t>(width), '-') + (c + 1 < n ? "-" : "");
      }
      out += '\n';
    }
    for (int c = 0; c < n; ++c) {
      if (c && c % geo.box() == 0) out += "| ";
      const int v = board.value(geo.cell(r, c));
      std::string s = v ? std::to_string(v) : ".";
      out += std::string(static_cast<std::size_t>(width) - s.size(), ' ') + s;
      if (c + 1 < n) out += ' ';
    }
    out += '\n';
  }
  return out;
}

bool verify_solution(const Board& board) {
  const Geometry& geo = board.geometry();
  for (int g = 0; g < geo.group_count(); ++g) {
    DigitMask seen = 0;
    for (int c : geo.group(g)) {
      const int v = board.value(c);
      if (v == 0) return false;
      seen |= digit_bit(v);
    }
    if (seen != board.all_digits()) return false;
  }
  return true;
}

std::string_view rule_name(RuleId id) { return kRuleNames.at(static_cast<std::size_t>(id)); }

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i)
    if (kRuleNames[i] == name) return static_cast<RuleId>(i);
  return std::nullopt;
}

int rule_tier(RuleId id) {
  switch (id) {
    case RuleId::hidden_single:
    case RuleId::naked_single:
      return 0;
    case RuleId::intersection_triple:
    case RuleId::box_line:
    case RuleId::hidden_pair:
      return 1;
    case RuleId::matching_digit:
    case RuleId::matching_group:
      return 2;
    case RuleId::bilocation_cycle:
    case RuleId::bilocation_repetitive:
    case RuleId::bilocation_conflict:
      return 3;
    case RuleId::bivalue_cycle:
    case RuleId::bivalue_repetitive:
    case RuleId::bivalue_conflict:
    case RuleId::mixed_conflict:
      return 4;
  }
  return kMaxTier;
}

std::optional<Board> apply_deduction(Board board, const Deduction& d) {
  if (d.contradiction) return std::nullopt;
  for (const auto& [cell, digit] : d.placements)
    if (!board.place(cell, digit)) return std::nullopt;
  for (const auto& [cell, digit] : d.eliminations)
    if (!board.eliminate(cell, digit)) return std::nullopt;
  return board;
}

std::string format_deduction(const Geometry& geo, const Deduction& d) {
  std::string out = std::string(rule_name(d.rule)) + " tier=" + std::to_string(rule_tier(d.rule));
  if (d.contradiction) {
    out += " contradiction";
  } else {
    out += " place=" + pair_list(geo, d.placements);
    out += " eliminate=" + pair_list(geo, d.eliminations);
  }
  if (!d.witness.summary.empty()) out += " witness=\"" + d.witness.summary + "\"";
  return out;
}

}  // namespace nonrep::sudoku

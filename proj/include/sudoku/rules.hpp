#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "sudoku/board.hpp"

namespace nonrep::sudoku {

inline constexpr std::size_t kAllDeductions = std::numeric_limits<std::size_t>::max();

// Every rule returns up to `limit` deductions, each of which changes the board
// it was computed on (or reports a contradiction). Rules never mutate.

std::vector<Deduction> find_hidden_singles(const Board& b, std::size_t limit = kAllDeductions);
std::vector<Deduction> find_naked_singles(const Board& b, std::size_t limit = kAllDeductions);
/// Cells of a line-box intersection holding exactly the digits confined to
/// them in the line or the box.
std::vector<Deduction> find_intersection_triples(const Board& b, std::size_t limit = kAllDeductions);
/// Pointing and claiming: a digit confined to a line-box intersection.
std::vector<Deduction> find_box_line(const Board& b, std::size_t limit = kAllDeductions);
std::vector<Deduction> find_hidden_pairs(const Board& b, std::size_t limit = kAllDeductions);

/// Per digit, rows against columns; edges that lie in no perfect matching are
/// eliminated and a missing perfect matching is a contradiction.
std::vector<Deduction> find_matching_digit(const Board& b, std::size_t limit = kAllDeductions);
/// Per group, digits against cells.
std::vector<Deduction> find_matching_group(const Board& b, std::size_t limit = kAllDeductions);

std::vector<Deduction> find_bilocation_cycles(const Board& b, std::size_t limit = kAllDeductions);
std::vector<Deduction> find_bilocation_repetitive(const Board& b, std::size_t limit = kAllDeductions);
std::vector<Deduction> find_bilocation_conflicts(const Board& b, std::size_t limit = kAllDeductions);
std::vector<Deduction> find_bivalue_cycles(const Board& b, std::size_t limit = kAllDeductions);
std::vector<Deduction> find_bivalue_repetitive(const Board& b, std::size_t limit = kAllDeductions);
std::vector<Deduction> find_bivalue_conflicts(const Board& b, std::size_t limit = kAllDeductions);
std::vector<Deduction> find_mixed_conflicts(const Board& b, std::size_t limit = kAllDeductions);

std::vector<Deduction> run_rule(const Board& b, RuleId rule, std::size_t limit = kAllDeductions);

/// All rules, cheapest first.
std::span<const RuleId> all_rules();

/// Applies naked and hidden singles to a fixpoint; false on contradiction.
bool propagate_singles(Board& b);

}  // namespace nonrep::sudoku

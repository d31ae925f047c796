#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "sudoku/board.hpp"

namespace nonrep::sudoku {

enum class Outcome { solved, stuck, contradiction };

std::string_view outcome_name(Outcome o);

struct SolveOptions {
  int max_tier = kMaxTier;
  std::size_t max_steps = 1'000'000;
  /// Called after each applied deduction with the board it was found on.
  std::function<void(const Board&, const Deduction&)> observer;
};

struct SolveTrace {
  Board initial;
  Board final_board;
  std::vector<Deduction> steps;
  Outcome outcome = Outcome::stuck;
  int tier = 0;  // highest tier used

  explicit SolveTrace(const Board& b) : initial(b), final_board(b) {}
};

/// Repeatedly applies the first firing of the cheapest rule and restarts from
/// tier 0 after every change.
SolveTrace solve(const Board& board, const SolveOptions& options = {});

/// One line per step followed by the outcome line.
std::string format_trace(const SolveTrace& trace);

}  // namespace nonrep::sudoku

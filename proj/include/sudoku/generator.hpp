#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sudoku/board.hpp"

namespace nonrep::sudoku {

/// mt19937_64 with a bounded draw that does not depend on the standard
/// library's distribution implementations, so seeds reproduce across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);

private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Number of completions of `board` consistent with its candidate sets,
/// counting stops at `cap`.
int count_solutions(const Board& board, int cap = 2);
/// Some completion, by the same search.
std::optional<Board> search_solution(const Board& board);

inline constexpr int kRestartLimit = 10'000;

struct GeneratedPuzzle {
  Board puzzle;
  Board solution;
  std::uint64_t seed = 0;
  int restarts = 0;
  /// Clue cells in insertion order, grouped as symmetric pairs (one cell for
  /// the centre).
  std::vector<std::vector<int>> insertion_order;
  int clue_count = 0;
  bool symmetric = true;
  bool minimal = false;  // no listed pair can be removed keeping uniqueness

  explicit GeneratedPuzzle(int box) : puzzle(box), solution(box) {}
};

/// Random clue insertion (cells paired with their 180-degree partner when
/// `symmetric`) with singles propagation, then removal of whole pairs while the
/// solution stays unique. Throws std::runtime_error after kRestartLimit failed
/// attempts.
GeneratedPuzzle generate(int box, std::uint64_t seed, bool symmetric = true);

/// Highest tier needed to solve, or kUnsolvable when the solver gets stuck.
inline constexpr int kUnsolvable = kMaxTier + 1;
int grade(const Board& puzzle);
std::string tier_name(int tier);  // "0".."4" or "inf"

struct BatchStats {
  int count = 0;
  int box = 3;
  std::uint64_t seed = 0;
  std::array<int, kUnsolvable + 1> histogram{};  // index kUnsolvable = unsolvable
  std::vector<int> grades;                        // per puzzle, in seed order
  int total_restarts = 0;

  int unsolvable() const { return histogram[kUnsolvable]; }
  int nonlocal() const { return histogram[3] + histogram[4]; }
  double unsolvable_fraction() const { return count ? double(unsolvable()) / count : 0.0; }
  double nonlocal_fraction() const { return count ? double(nonlocal()) / count : 0.0; }
  /// Among puzzles beyond the matching tier, the share the nonlocal rules solve.
  double nonlocal_share() const {
    const int hard = nonlocal() + unsolvable();
    return hard ? double(nonlocal()) / hard : 0.0;
  }
};

/// Puzzle i uses seed splitmix64(splitmix64(seed) + i), so results do not
/// depend on `jobs`.
BatchStats batch_stats(int count, std::uint64_t seed, int box = 3, int jobs = 1);
std::uint64_t puzzle_seed(std::uint64_t batch_seed, int index);

}  // namespace nonrep::sudoku

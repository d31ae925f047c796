#include "sudoku/generator.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "sudoku/rules.hpp"
#include "sudoku/solver.hpp"

namespace nonrep::sudoku {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty range");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % n;
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

class Search {
public:
  Search(const Board& b, int cap) : geo_(b.geometry()), cap_(cap) {
    const int n = geo_.size();
    used_.assign(static_cast<std::size_t>(3 * n), 0);
    values_.resize(static_cast<std::size_t>(geo_.cell_count()));
    allowed_.resize(values_.size());
    for (int c = 0; c < geo_.cell_count(); ++c) {
      values_[static_cast<std::size_t>(c)] = b.value(c);
      allowed_[static_cast<std::size_t>(c)] = b.candidates(c);
      if (b.value(c) == 0) continue;
      for (int g : geo_.groups_of(c)) {
        DigitMask& u = used_[static_cast<std::size_t>(g)];
        if (u & digit_bit(b.value(c))) broken_ = true;
        u |= digit_bit(b.value(c));
      }
    }
  }

  int run() {
    if (!broken_) recurse();
    return found_;
  }
  const std::vector<int>& first() const { return first_; }

private:
  DigitMask options(int c) const {
    const auto& gs = geo_.groups_of(c);
    return allowed_[static_cast<std::size_t>(c)] &
           ~(used_[static_cast<std::size_t>(gs[0])] | used_[static_cast<std::size_t>(gs[1])] |
             used_[static_cast<std::size_t>(gs[2])]);
  }

  void assign(int c, int d) {
    values_[static_cast<std::size_t>(c)] = d;
    for (int g : geo_.groups_of(c)) used_[static_cast<std::size_t>(g)] |= digit_bit(d);
  }
  void unassign(int c, int d) {
    values_[static_cast<std::size_t>(c)] = 0;
    for (int g : geo_.groups_of(c)) used_[static_cast<std::size_t>(g)] &= ~digit_bit(d);
  }

  // Branch on the tightest of: the cell with fewest options, or the digit with
  // fewest places in some group.
  void recurse() {
    const int n = geo_.size();
    int best = -1;
    int best_count = 1 << 30;
    for (int c = 0; c < geo_.cell_count(); ++c) {
      if (values_[static_cast<std::size_t>(c)]) continue;
      const int k = mask_count(options(c));
      if (k == 0) return;
      if (k < best_count) {
        best = c;
        best_count = k;
      }
    }
    if (best < 0) {
      if (found_++ == 0) first_ = values_;
      return;
    }
    int best_group = -1, best_digit = 0;
    if (best_count > 1) {
      for (int g = 0; g < geo_.group_count() && best_count > 1; ++g) {
        const DigitMask used = used_[static_cast<std::size_t>(g)];
        for (int d = 1; d <= n; ++d) {
          if (used & digit_bit(d)) continue;
          int k = 0;
          for (int c : geo_.group(g))
            if (!values_[static_cast<std::size_t>(c)] && (options(c) & digit_bit(d))) ++k;
          if (k == 0) return;
          if (k < best_count) {
            best_count = k;
            best_group = g;
            best_digit = d;
          }
        }
      }
    }
    if (best_group >= 0) {
      for (int c : geo_.group(best_group)) {
        if (found_ >= cap_) return;
        if (values_[static_cast<std::size_t>(c)] || !(options(c) & digit_bit(best_digit))) continue;
        assign(c, best_digit);
        recurse();
        unassign(c, best_digit);
      }
      return;
    }
    DigitMask m = options(best);
    while (m && found_ < cap_) {
      const int d = lowest_digit(m);
      m &= m - 1;
      assign(best, d);
      recurse();
      unassign(best, d);
    }
  }

  const Geometry& geo_;
  int cap_;
  int found_ = 0;
  bool broken_ = false;
  std::vector<int> values_;
  std::vector<DigitMask> allowed_;
  std::vector<DigitMask> used_;
  std::vector<int> first_;
};

int random_candidate(Rng& rng, DigitMask m) {
  auto pick = rng.below(static_cast<std::uint64_t>(mask_count(m)));
  while (pick--) m &= m - 1;
  return lowest_digit(m);
}

Board with_clues(int box, const Board& solution, const std::vector<std::vector<int>>& pairs) {
  Board b(box);
  for (const auto& pair : pairs)
    for (int c : pair)
      if (!b.place(c, solution.value(c))) throw std::logic_error("clue clash");
  return b;
}

}  // namespace

int count_solutions(const Board& board, int cap) {
  if (cap <= 0) return 0;
  Search s(board, cap);
  return s.run();
}

std::optional<Board> search_solution(const Board& board) {
  Search s(board, 1);
  if (s.run() == 0) return std::nullopt;
  Board out = board;
  for (int c = 0; c < board.cell_count(); ++c)
    if (!out.is_placed(c) && !out.place(c, s.first()[static_cast<std::size_t>(c)])) return std::nullopt;
  return out;
}

GeneratedPuzzle generate(int box, std::uint64_t seed, bool symmetric) {
  GeneratedPuzzle result(box);
  result.seed = seed;
  result.symmetric = symmetric;
  Rng rng(seed);
  const int cells = result.puzzle.cell_count();
  for (;;) {
    Board board(box);
    std::vector<std::vector<int>> order;
    bool failed = false;
    while (!board.solved() && !failed) {
      std::vector<int> open;
      for (int c = 0; c < cells; ++c)
        if (!board.is_placed(c)) open.push_back(c);
      const int c = open[static_cast<std::size_t>(rng.below(open.size()))];
      const int partner = symmetric ? cells - 1 - c : c;
      std::vector<int> pair{c};
      failed = !board.place(c, random_candidate(rng, board.candidates(c)));
      if (!failed && partner != c) {
        if (!board.is_placed(partner)) {
          const DigitMask m = board.candidates(partner);
          failed = m == 0 || !board.place(partner, random_candidate(rng, m));
        }
        pair.push_back(partner);
      }
      order.push_back(pair);
      if (!failed) failed = !propagate_singles(board);
    }
    if (failed || !verify_solution(board)) {
      if (++result.restarts >= kRestartLimit)
        throw std::runtime_error("generator gave up after " + std::to_string(kRestartLimit) + " restarts");
      continue;
    }
    result.solution = board;
    // Greedy removal in insertion order while the solution stays unique.
    std::vector<char> keep(order.size(), 1);
    auto clues = [&] {
      std::vector<std::vector<int>> out;
      for (std::size_t i = 0; i < order.size(); ++i)
        if (keep[i]) out.push_back(order[i]);
      return out;
    };
    for (std::size_t i = 0; i < order.size(); ++i) {
      keep[i] = 0;
      if (count_solutions(with_clues(box, board, clues()), 2) != 1) keep[i] = 1;
    }
    const auto kept = clues();
    result.insertion_order = kept;
    result.puzzle = with_clues(box, board, kept);
    result.clue_count = result.puzzle.placed_count();
    result.minimal = true;
    return result;
  }
}

int grade(const Board& puzzle) {
  if (count_solutions(puzzle, 2) != 1) throw std::invalid_argument("puzzle does not have a unique solution");
  const SolveTrace t = solve(puzzle);
  return t.outcome == Outcome::solved ? t.tier : kUnsolvable;
}

std::string tier_name(int tier) { return tier >= kUnsolvable ? "inf" : std::to_string(tier); }

std::uint64_t puzzle_seed(std::uint64_t batch_seed, int index) {
  // hash the batch seed first so neighbouring batch seeds do not share puzzles
  return splitmix64(splitmix64(batch_seed) + static_cast<std::uint64_t>(index));
}

BatchStats batch_stats(int count, std::uint64_t seed, int box, int jobs) {
  if (count < 0) throw std::invalid_argument("negative puzzle count");
  BatchStats stats;
  stats.count = count;
  stats.box = box;
  stats.seed = seed;
  stats.grades.assign(static_cast<std::size_t>(count), 0);
  std::vector<int> restarts(static_cast<std::size_t>(count), 0);
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        const GeneratedPuzzle p = generate(box, puzzle_seed(seed, i));
        restarts[static_cast<std::size_t>(i)] = p.restarts;
        stats.grades[static_cast<std::size_t>(i)] = grade(p.puzzle);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min(jobs, count));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  for (int i = 0; i < count; ++i) {
    ++stats.histogram[static_cast<std::size_t>(stats.grades[static_cast<std::size_t>(i)])];
    stats.total_restarts += restarts[static_cast<std::size_t>(i)];
  }
  return stats;
}

}  // namespace nonrep::sudoku

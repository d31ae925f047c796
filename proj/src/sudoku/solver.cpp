#include "sudoku/solver.hpp"

#include <algorithm>

#include "sudoku/rules.hpp"

namespace nonrep::sudoku {

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::solved: return "solved";
    case Outcome::stuck: return "stuck";
    case Outcome::contradiction: return "contradiction";
  }
  return "stuck";
}

SolveTrace solve(const Board& board, const SolveOptions& options) {
  SolveTrace trace(board);
  Board current = board;
  if (!current.consistent()) {
    trace.outcome = Outcome::contradiction;
    return trace;
  }
  while (trace.steps.size() < options.max_steps) {
    if (current.solved()) break;
    std::optional<Deduction> next;
    for (RuleId rule : all_rules()) {
      if (rule_tier(rule) > options.max_tier) break;
      auto found = run_rule(current, rule, 1);
      if (!found.empty()) {
        next = std::move(found.front());
        break;
      }
    }
    if (!next) {
      trace.outcome = Outcome::stuck;
      trace.final_board = current;
      return trace;
    }
    trace.tier = std::max(trace.tier, rule_tier(next->rule));
    auto applied = apply_deduction(current, *next);
    if (options.observer) options.observer(current, *next);
    trace.steps.push_back(std::move(*next));
    if (!applied) {
      trace.outcome = Outcome::contradiction;
      trace.final_board = current;
      return trace;
    }
    current = std::move(*applied);
  }
  trace.final_board = current;
  if (current.solved())
    trace.outcome = verify_solution(current) ? Outcome::solved : Outcome::contradiction;
  else
    trace.outcome = Outcome::stuck;
  return trace;
}

std::string format_trace(const SolveTrace& trace) {
  const Geometry& geo = trace.initial.geometry();
  std::string out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i)
    out += "step " + std::to_string(i + 1) + ": " + format_deduction(geo, trace.steps[i]) + "\n";
  out += "outcome: " + std::string(outcome_name(trace.outcome)) + " tier " + std::to_string(trace.tier) + "\n";
  return out;
}

}  // namespace nonrep::sudoku

#include <algorithm>

#include "nonrep/matching.hpp"
#include "sudoku/rules.hpp"

namespace nonrep::sudoku {

namespace {

// Shared tail of both matching rules: `cells[i]`/`digits[i]` say which
// (cell, digit) each bipartite edge stands for.
void classify_into(const Board& b, RuleId rule, const BipartiteInstance& inst, const std::vector<int>& cells,
                   const std::vector<int>& digits, const std::string& where, std::vector<Deduction>& out) {
  const EdgeClassification cls = classify_edges(inst, false);
  if (!cls.perfect) {
    Deduction d;
    d.rule = rule;
    d.contradiction = true;
    d.witness.summary = "no perfect matching for " + where;
    out.push_back(std::move(d));
    return;
  }
  Deduction d;
  d.rule = rule;
  for (std::size_t i = 0; i < inst.edges.size(); ++i) {
    if (cls.classes[i] != EdgeClass::forbidden) continue;
    if (b.is_placed(cells[i])) continue;
    d.eliminations.push_back({cells[i], digits[i]});
    d.witness.cells.push_back(cells[i]);
  }
  if (d.eliminations.empty()) return;
  std::sort(d.eliminations.begin(), d.eliminations.end());
  d.witness.summary = "edges outside every perfect matching of " + where;
  out.push_back(std::move(d));
}

}  // namespace

std::vector<Deduction> find_matching_digit(const Board& b, std::size_t limit) {
  const Geometry& geo = b.geometry();
  const int n = geo.size();
  std::vector<Deduction> out;
  for (int d = 1; d <= n && out.size() < limit; ++d) {
    BipartiteInstance inst{n, n, {}};
    std::vector<int> cells;
    std::vector<int> digits;
    for (int c = 0; c < geo.cell_count(); ++c) {
      if (!b.has_candidate(c, d)) continue;
      inst.edges.push_back({geo.row(c), geo.col(c)});
      cells.push_back(c);
      digits.push_back(d);
    }
    const std::size_t before = out.size();
    classify_into(b, RuleId::matching_digit, inst, cells, digits, "digit " + std::to_string(d), out);
    if (out.size() > before) out.back().witness.labels = {d};
  }
  if (out.size() > limit) out.resize(limit);
  return out;
}

std::vector<Deduction> find_matching_group(const Board& b, std::size_t limit) {
  const Geometry& geo = b.geometry();
  const int n = geo.size();
  std::vector<Deduction> out;
  for (int g = 0; g < geo.group_count() && out.size() < limit; ++g) {
    BipartiteInstance inst{n, n, {}};
    std::vector<int> cells;
    std::vector<int> digits;
    const auto& members = geo.group(g);
    for (int d = 1; d <= n; ++d) {
      for (int i = 0; i < n; ++i) {
        const int c = members[static_cast<std::size_t>(i)];
        if (!b.has_candidate(c, d)) continue;
        inst.edges.push_back({d - 1, i});
        cells.push_back(c);
        digits.push_back(d);
      }
    }
    classify_into(b, RuleId::matching_group, inst, cells, digits, geo.group_name(g), out);
  }
  if (out.size() > limit) out.resize(limit);
  return out;
}

}  // namespace nonrep::sudoku

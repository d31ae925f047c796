#include <algorithm>
#include <array>
#include <set>

#include "sudoku/rules.hpp"

namespace nonrep::sudoku {

namespace {

bool digit_placed_in(const Board& b, int g, int d) {
  for (int c : b.geometry().group(g))
    if (b.value(c) == d) return true;
  return false;
}

std::vector<int> homes(const Board& b, int g, int d) {
  std::vector<int> out;
  for (int c : b.geometry().group(g))
    if (!b.is_placed(c) && b.has_candidate(c, d)) out.push_back(c);
  return out;
}

Deduction contradiction(RuleId rule, std::vector<int> cells, std::string summary) {
  Deduction d;
  d.rule = rule;
  d.contradiction = true;
  d.witness.cells = std::move(cells);
  d.witness.summary = std::move(summary);
  return d;
}

// Keeps only eliminations that remove a live candidate, deduplicated.
void prune(const Board& b, Deduction& d) {
  std::sort(d.eliminations.begin(), d.eliminations.end());
  d.eliminations.erase(std::unique(d.eliminations.begin(), d.eliminations.end()), d.eliminations.end());
  std::erase_if(d.eliminations, [&](const auto& e) {
    return b.is_placed(e.first) || !b.has_candidate(e.first, e.second);
  });
}

}  // namespace

std::vector<Deduction> find_hidden_singles(const Board& b, std::size_t limit) {
  const Geometry& geo = b.geometry();
  std::vector<Deduction> out;
  std::set<std::pair<int, int>> seen;
  for (int g = 0; g < geo.group_count() && out.size() < limit; ++g) {
    for (int d = 1; d <= geo.size() && out.size() < limit; ++d) {
      if (digit_placed_in(b, g, d)) continue;
      const auto h = homes(b, g, d);
      if (h.empty()) {
        out.push_back(contradiction(RuleId::hidden_single, {},
                                    "digit " + std::to_string(d) + " has no place in " + geo.group_name(g)));
      } else if (h.size() == 1 && seen.insert({h[0], d}).second) {
        Deduction ded;
        ded.rule = RuleId::hidden_single;
        ded.placements = {{h[0], d}};
        ded.witness.cells = {h[0]};
        ded.witness.labels = {d};
        ded.witness.summary = "only place for " + std::to_string(d) + " in " + geo.group_name(g);
        out.push_back(std::move(ded));
      }
    }
  }
  return out;
}

std::vector<Deduction> find_naked_singles(const Board& b, std::size_t limit) {
  const Geometry& geo = b.geometry();
  std::vector<Deduction> out;
  for (int c = 0; c < geo.cell_count() && out.size() < limit; ++c) {
    if (b.is_placed(c)) continue;
    const DigitMask m = b.candidates(c);
    if (m == 0) {
      out.push_back(contradiction(RuleId::naked_single, {c}, geo.cell_name(c) + " has no candidates"));
    } else if (mask_count(m) == 1) {
      Deduction ded;
      ded.rule = RuleId::naked_single;
      ded.placements = {{c, lowest_digit(m)}};
      ded.witness.cells = {c};
      ded.witness.summary = "single candidate at " + geo.cell_name(c);
      out.push_back(std::move(ded));
    }
  }
  return out;
}

std::vector<Deduction> find_intersection_triples(const Board& b, std::size_t limit) {
  const Geometry& geo = b.geometry();
  const int n = geo.size();
  const int box = geo.box();
  std::vector<Deduction> out;
  for (int bx = 0; bx < n && out.size() < limit; ++bx) {
    const int bg = geo.box_group(bx);
    const int r0 = (bx / box) * box;
    const int c0 = (bx % box) * box;
    std::vector<int> lines;
    for (int i = 0; i < box; ++i) lines.push_back(geo.row_group(r0 + i));
    for (int i = 0; i < box; ++i) lines.push_back(geo.col_group(c0 + i));
    for (int lg : lines) {
      if (out.size() >= limit) break;
      std::vector<int> cells;  // unplaced cells of the intersection
      for (int c : geo.group(lg))
        if (geo.in_group(c, bg) && !b.is_placed(c)) cells.push_back(c);
      if (cells.empty()) continue;
      auto inside = [&](int c) { return std::find(cells.begin(), cells.end(), c) != cells.end(); };
      DigitMask confined = 0;
      for (int d = 1; d <= n; ++d) {
        for (int g : {lg, bg}) {
          if (digit_placed_in(b, g, d)) continue;
          const auto h = homes(b, g, d);
          if (!h.empty() && std::all_of(h.begin(), h.end(), inside)) confined |= digit_bit(d);
        }
      }
      const int s = mask_count(confined);
      if (s < static_cast<int>(cells.size())) continue;
      if (s > static_cast<int>(cells.size())) {
        out.push_back(contradiction(RuleId::intersection_triple, cells,
                                    "more confined digits than cells in " + geo.group_name(lg) + " and " +
                                        geo.group_name(bg)));
        continue;
      }
      Deduction ded;
      ded.rule = RuleId::intersection_triple;
      for (int c : cells)
        for (int d = 1; d <= n; ++d)
          if (!(confined & digit_bit(d))) ded.eliminations.push_back({c, d});
      for (int g : {lg, bg})
        for (int c : geo.group(g))
          if (!inside(c))
            for (int d = 1; d <= n; ++d)
              if (confined & digit_bit(d)) ded.eliminations.push_back({c, d});
      prune(b, ded);
      if (ded.eliminations.empty()) continue;
      ded.witness.cells = cells;
      for (int d = 1; d <= n; ++d)
        if (confined & digit_bit(d)) ded.witness.labels.push_back(d);
      ded.witness.summary = "intersection of " + geo.group_name(lg) + " and " + geo.group_name(bg);
      out.push_back(std::move(ded));
    }
  }
  return out;
}

std::vector<Deduction> find_box_line(const Board& b, std::size_t limit) {
  const Geometry& geo = b.geometry();
  const int n = geo.size();
  std::vector<Deduction> out;
  auto try_confinement = [&](int from, int d) {
    if (digit_placed_in(b, from, d)) return;
    const auto h = homes(b, from, d);
    if (h.size() < 2) return;
    // The other group containing every home.
    for (int target : geo.groups_of(h[0])) {
      if (target == from) continue;
      const bool all = std::all_of(h.begin(), h.end(), [&](int c) { return geo.in_group(c, target); });
      if (!all) continue;
      Deduction ded;
      ded.rule = RuleId::box_line;
      for (int c : geo.group(target))
        if (!geo.in_group(c, from)) ded.eliminations.push_back({c, d});
      prune(b, ded);
      if (ded.eliminations.empty()) continue;
      ded.witness.cells = h;
      ded.witness.labels = {d};
      ded.witness.summary = std::to_string(d) + " in " + geo.group_name(from) + " lies within " + geo.group_name(target);
      out.push_back(std::move(ded));
      if (out.size() >= limit) return;
    }
  };
  for (int g = 0; g < geo.group_count() && out.size() < limit; ++g)
    for (int d = 1; d <= n && out.size() < limit; ++d) try_confinement(g, d);
  return out;
}

std::vector<Deduction> find_hidden_pairs(const Board& b, std::size_t limit) {
  const Geometry& geo = b.geometry();
  const int n = geo.size();
  std::vector<Deduction> out;
  for (int g = 0; g < geo.group_count() && out.size() < limit; ++g) {
    std::vector<std::vector<int>> h(static_cast<std::size_t>(n + 1));
    for (int d = 1; d <= n; ++d)
      if (!digit_placed_in(b, g, d)) h[static_cast<std::size_t>(d)] = homes(b, g, d);
    for (int d1 = 1; d1 <= n && out.size() < limit; ++d1) {
      const auto& h1 = h[static_cast<std::size_t>(d1)];
      if (h1.size() != 2) continue;
      for (int d2 = d1 + 1; d2 <= n && out.size() < limit; ++d2) {
        if (h[static_cast<std::size_t>(d2)] != h1) continue;
        Deduction ded;
        ded.rule = RuleId::hidden_pair;
        for (int c : h1)
          for (int d = 1; d <= n; ++d)
            if (d != d1 && d != d2) ded.eliminations.push_back({c, d});
        prune(b, ded);
        if (ded.eliminations.empty()) continue;
        ded.witness.cells = h1;
        ded.witness.labels = {d1, d2};
        ded.witness.summary = "pair " + std::to_string(d1) + std::to_string(d2) + " in " + geo.group_name(g);
        out.push_back(std::move(ded));
      }
    }
  }
  return out;
}

bool propagate_singles(Board& b) {
  for (;;) {
    auto found = find_naked_singles(b, 1);
    if (found.empty()) found = find_hidden_singles(b, 1);
    if (found.empty()) return true;
    if (found.front().contradiction) return false;
    for (const auto& [cell, digit] : found.front().placements)
      if (!b.place(cell, digit)) return false;
  }
}

}  // namespace nonrep::sudoku

#include <algorithm>
#include <array>

#include "nonrep/nr_graph.hpp"
#include "sudoku/graphs.hpp"
#include "sudoku/rules.hpp"

namespace nonrep::sudoku {

namespace {

// A value forced under the starting assumption, with the traversal that forced it.
struct Forced {
  int cell = -1;
  int value = 0;
  std::optional<Traversal> via;  // nullopt for the assumption itself
};

struct Conflict {
  const Forced* a = nullptr;
  const Forced* b = nullptr;
};

Deduction graph_contradiction(RuleId rule, const Geometry& geo, const std::vector<int>& cells) {
  Deduction d;
  d.rule = rule;
  d.contradiction = true;
  d.witness.cells = cells;
  d.witness.summary = "three digits confined to " + geo.cell_name(cells[0]) + " and " + geo.cell_name(cells[1]);
  return d;
}

// Cells visited by a walk from `start`, starting with `start`.
std::vector<int> walk_cells(const FlagLabeledGraph& g, const std::vector<int>& cell_of_vertex, int start,
                            const std::vector<Traversal>& walk) {
  std::vector<int> out{cell_of_vertex[static_cast<std::size_t>(start)]};
  for (const Traversal& t : walk) {
    const int c = cell_of_vertex[static_cast<std::size_t>(g.head(t))];
    if (c >= 0) out.push_back(c);
  }
  return out;
}

std::string chain_text(const Geometry& geo, const std::vector<int>& cells) {
  std::string out;
  for (int c : cells) {
    if (!out.empty()) out += " - ";
    out += geo.cell_name(c);
  }
  return out;
}

// Two forced values that clash: equal values in distinct cells of one group.
// With `other` set, one side must come from `forced` and the other from `other`.
std::optional<Conflict> find_conflict(const Geometry& geo, const std::vector<Forced>& forced,
                                      const std::vector<Forced>* other = nullptr) {
  const int n = geo.size();
  std::vector<std::vector<const Forced*>> bucket(static_cast<std::size_t>(geo.group_count() * n));
  auto slot = [&](int g, int v) -> auto& { return bucket[static_cast<std::size_t>(g * n + v - 1)]; };
  const std::vector<Forced>& first = other ? *other : forced;
  for (const Forced& f : first) {
    for (int g : geo.groups_of(f.cell)) {
      auto& s = slot(g, f.value);
      if (!other)
        for (const Forced* prev : s)
          if (prev->cell != f.cell) return Conflict{prev, &f};
      if (s.size() < 2 && (s.empty() || s.front()->cell != f.cell)) s.push_back(&f);
    }
  }
  if (!other) return std::nullopt;
  for (const Forced& f : forced)
    for (int g : geo.groups_of(f.cell))
      for (const Forced* prev : slot(g, f.value))
        if (prev->cell != f.cell) return Conflict{&f, prev};
  return std::nullopt;
}

std::vector<Forced> bilocation_forced(const BilocationGraph& bg, const NrGraph& nr, int v, int d) {
  std::vector<Forced> out;
  for (const ReachedEdge& r : reachable_edges(bg.graph, nr, v, d)) {
    const Traversal t{r.edge, r.reversed};
    out.push_back(Forced{bg.cell_of_vertex[static_cast<std::size_t>(bg.graph.head(t))], r.far_label, t});
  }
  return out;
}

std::vector<Forced> bivalue_forced(const Board& b, const BipartiteBivalueGraph& bg, const NrGraph& nr, int v,
                                   int d) {
  std::vector<Forced> out{Forced{bg.cell_of_vertex[static_cast<std::size_t>(v)], d, std::nullopt}};
  for (const ReachedEdge& r : reachable_edges(bg.graph, nr, v, d)) {
    const Traversal t{r.edge, r.reversed};
    const int head = bg.graph.head(t);
    if (!bg.is_cell_vertex(head)) continue;
    const int cell = bg.cell_of_vertex[static_cast<std::size_t>(head)];
    const DigitMask rest = b.candidates(cell) & ~digit_bit(r.far_label);
    out.push_back(Forced{cell, lowest_digit(rest), t});
  }
  return out;
}

std::string forced_text(const Geometry& geo, const FlagLabeledGraph& g, const std::vector<int>& cell_of_vertex,
                        const NrGraph& nr, int v, int label, const Forced& f) {
  std::string out = geo.cell_name(f.cell) + "=" + std::to_string(f.value);
  if (!f.via) return out;
  if (auto walk = nonrepetitive_walk(g, nr, v, label, *f.via))
    out += " via " + chain_text(geo, walk_cells(g, cell_of_vertex, v, *walk));
  return out;
}

std::array<int, 2> two_digits(DigitMask m) {
  const int d = lowest_digit(m);
  return {d, lowest_digit(m & (m - 1))};
}

}  // namespace

// Every closed walk through a cell turns between two digits, and the cell holds
// one of them. Intersecting over all such turns leaves two digits, one digit or
// none.
std::vector<Deduction> find_bilocation_cycles(const Board& b, std::size_t limit) {
  const Geometry& geo = b.geometry();
  const BilocationGraph bg = build_bilocation_graph(b);
  if (bg.contradiction) return {graph_contradiction(RuleId::bilocation_cycle, geo, bg.contradiction_cells)};
  const FlagLabeledGraph& g = bg.graph;
  const NrGraph nr = build_nr(g);
  const SccResult scc = strongly_connected_components(nr.digraph());
  std::vector<Deduction> out;
  for (int c = 0; c < geo.cell_count() && out.size() < limit; ++c) {
    const int v = bg.vertex_of_cell[static_cast<std::size_t>(c)];
    if (v < 0) continue;
    const auto turns = closed_walk_turns(nr, scc, v);
    if (turns.empty()) continue;
    DigitMask allowed = b.all_digits();
    for (const auto& [in, outl] : turns) allowed &= digit_bit(in) | digit_bit(outl);
    Deduction d;
    d.rule = RuleId::bilocation_cycle;
    d.witness.cells = {c};
    if (allowed == 0) {
      d.contradiction = true;
      d.witness.summary = "bilocation cycles through " + geo.cell_name(c) + " share no digit";
    } else if (mask_count(allowed) == 1) {
      d.placements.push_back({c, lowest_digit(allowed)});
      d.witness.labels = {lowest_digit(allowed)};
      d.witness.summary = "every bilocation cycle through " + geo.cell_name(c) + " allows only " +
                          std::to_string(lowest_digit(allowed));
    } else {
      const auto keep = two_digits(allowed);
      for (int x = 1; x <= geo.size(); ++x)
        if (x != keep[0] && x != keep[1] && b.has_candidate(c, x)) d.eliminations.push_back({c, x});
      if (d.eliminations.empty()) continue;
      d.witness.labels = {keep[0], keep[1]};
      d.witness.summary = "bilocation cycle through " + geo.cell_name(c) + " with digits " +
                          std::to_string(keep[0]) + " and " + std::to_string(keep[1]);
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<Deduction> find_bilocation_repetitive(const Board& b, std::size_t limit) {
  const Geometry& geo = b.geometry();
  const BilocationGraph bg = build_bilocation_graph(b);
  if (bg.contradiction) return {graph_contradiction(RuleId::bilocation_repetitive, geo, bg.contradiction_cells)};
  const FlagLabeledGraph& g = bg.graph;
  const NrGraph nr = build_nr(g);
  std::vector<Deduction> out;
  for (int c = 0; c < geo.cell_count() && out.size() < limit; ++c) {
    const int v = bg.vertex_of_cell[static_cast<std::size_t>(c)];
    if (v < 0) continue;
    for (const GadgetPort& port : nr.ports(v)) {
      const int d = port.label;
      for (const ReachedEdge& r : reachable_edges(g, nr, v, d)) {
        const Traversal t{r.edge, r.reversed};
        if (g.head(t) != v || r.far_label != d) continue;
        Deduction ded;
        ded.rule = RuleId::bilocation_repetitive;
        ded.placements = {{c, d}};
        const auto walk = nonrepetitive_walk(g, nr, v, d, t);
        ded.witness.cells = walk ? walk_cells(g, bg.cell_of_vertex, v, *walk) : std::vector<int>{c};
        ded.witness.labels = {d};
        ded.witness.summary = "assuming " + geo.cell_name(c) + "<>" + std::to_string(d) + " forces it back: " +
                              chain_text(geo, ded.witness.cells);
        out.push_back(std::move(ded));
        break;
      }
      if (out.size() >= limit || (!out.empty() && out.back().placements.front().first == c)) break;
    }
  }
  return out;
}

std::vector<Deduction> find_bilocation_conflicts(const Board& b, std::size_t limit) {
  const Geometry& geo = b.geometry();
  const BilocationGraph bg = build_bilocation_graph(b);
  if (bg.contradiction) return {graph_contradiction(RuleId::bilocation_conflict, geo, bg.contradiction_cells)};
  const FlagLabeledGraph& g = bg.graph;
  const NrGraph nr = build_nr(g);
  std::vector<Deduction> out;
  for (int c = 0; c < geo.cell_count() && out.size() < limit; ++c) {
    const int v = bg.vertex_of_cell[static_cast<std::size_t>(c)];
    if (v < 0) continue;
    for (const GadgetPort& port : nr.ports(v)) {
      const int d = port.label;
      const auto forced = bilocation_forced(bg, nr, v, d);
      const auto conflict = find_conflict(geo, forced);
      if (!conflict) continue;
      Deduction ded;
      ded.rule = RuleId::bilocation_conflict;
      ded.placements = {{c, d}};
      ded.witness.cells = {c, conflict->a->cell, conflict->b->cell};
      ded.witness.labels = {d, conflict->a->value};
      ded.witness.summary = "assuming " + geo.cell_name(c) + "<>" + std::to_string(d) + ": " +
                            forced_text(geo, g, bg.cell_of_vertex, nr, v, d, *conflict->a) + "; " +
                            forced_text(geo, g, bg.cell_of_vertex, nr, v, d, *conflict->b);
      out.push_back(std::move(ded));
      break;
    }
  }
  return out;
}

// Same idea on the bipartite graph: a closed walk through (g, d) enters from one
// cell and leaves to another, and d sits at one of the two.
std::vector<Deduction> find_bivalue_cycles(const Board& b, std::size_t limit) {
  const Geometry& geo = b.geometry();
  const BipartiteBivalueGraph bg = build_bipartite_bivalue_graph(b);
  const FlagLabeledGraph& g = bg.graph;
  const NrGraph nr = build_nr(g);
  const SccResult scc = strongly_connected_components(nr.digraph());
  std::vector<Deduction> out;
  for (int v = bg.group_digit_base; v < g.vertex_count() && out.size() < limit; ++v) {
    const auto turns = closed_walk_turns(nr, scc, v);
    if (turns.empty()) continue;
    const int grp = bg.group_of_vertex(v);
    const int d = bg.digit_of_vertex(v);
    // flag labels at (g, d) are cell indices
    std::vector<int> cells{std::min(turns[0].first, turns[0].second), std::max(turns[0].first, turns[0].second)};
    for (const auto& [c1, c2] : turns)
      std::erase_if(cells, [&](int c) { return c != c1 && c != c2; });
    Deduction ded;
    ded.rule = RuleId::bivalue_cycle;
    ded.witness.cells = cells;
    ded.witness.labels = {d};
    if (cells.empty()) {
      ded.contradiction = true;
      ded.witness.summary = "bivalue cycles through " + std::to_string(d) + " in " + geo.group_name(grp) +
                            " share no cell";
    } else if (cells.size() == 1) {
      ded.placements.push_back({cells[0], d});
      ded.witness.summary = "every bivalue cycle through " + std::to_string(d) + " in " + geo.group_name(grp) +
                            " passes " + geo.cell_name(cells[0]);
    } else {
      for (int c : geo.group(grp))
        if (c != cells[0] && c != cells[1] && !b.is_placed(c) && b.has_candidate(c, d))
          ded.eliminations.push_back({c, d});
      if (ded.eliminations.empty()) continue;
      ded.witness.summary = "bivalue cycle puts " + std::to_string(d) + " in " + geo.group_name(grp) +
                            " at " + geo.cell_name(cells[0]) + " or " + geo.cell_name(cells[1]);
    }
    out.push_back(std::move(ded));
  }
  return out;
}

std::vector<Deduction> find_bivalue_repetitive(const Board& b, std::size_t limit) {
  const Geometry& geo = b.geometry();
  const BipartiteBivalueGraph bg = build_bipartite_bivalue_graph(b);
  const FlagLabeledGraph& g = bg.graph;
  const NrGraph nr = build_nr(g);
  std::vector<Deduction> out;
  for (int c = 0; c < geo.cell_count() && out.size() < limit; ++c) {
    const int v = bg.vertex_of_cell[static_cast<std::size_t>(c)];
    if (v < 0) continue;
    const auto digits = two_digits(b.candidates(c));
    for (int i = 0; i < 2; ++i) {
      const int d = digits[static_cast<std::size_t>(i)];
      const int e = digits[static_cast<std::size_t>(1 - i)];
      std::optional<Traversal> back;
      for (const ReachedEdge& r : reachable_edges(g, nr, v, d)) {
        const Traversal t{r.edge, r.reversed};
        if (g.head(t) == v && r.far_label == d) {
          back = t;
          break;
        }
      }
      if (!back) continue;
      Deduction ded;
      ded.rule = RuleId::bivalue_repetitive;
      ded.placements = {{c, e}};
      ded.eliminations = {{c, d}};
      const auto walk = nonrepetitive_walk(g, nr, v, d, *back);
      ded.witness.cells = walk ? walk_cells(g, bg.cell_of_vertex, v, *walk) : std::vector<int>{c};
      ded.witness.labels = {d};
      ded.witness.summary = "assuming " + geo.cell_name(c) + "=" + std::to_string(d) + " rules it out: " +
                            chain_text(geo, ded.witness.cells);
      out.push_back(std::move(ded));
      break;
    }
  }
  return out;
}

std::vector<Deduction> find_bivalue_conflicts(const Board& b, std::size_t limit) {
  const Geometry& geo = b.geometry();
  const BipartiteBivalueGraph bg = build_bipartite_bivalue_graph(b);
  const FlagLabeledGraph& g = bg.graph;
  const NrGraph nr = build_nr(g);
  std::vector<Deduction> out;
  for (int c = 0; c < geo.cell_count() && out.size() < limit; ++c) {
    const int v = bg.vertex_of_cell[static_cast<std::size_t>(c)];
    if (v < 0) continue;
    const auto digits = two_digits(b.candidates(c));
    for (int i = 0; i < 2; ++i) {
      const int d = digits[static_cast<std::size_t>(i)];
      const int e = digits[static_cast<std::size_t>(1 - i)];
      const auto forced = bivalue_forced(b, bg, nr, v, d);
      const auto conflict = find_conflict(geo, forced);
      if (!conflict) continue;
      Deduction ded;
      ded.rule = RuleId::bivalue_conflict;
      ded.placements = {{c, e}};
      ded.eliminations = {{c, d}};
      ded.witness.cells = {c, conflict->a->cell, conflict->b->cell};
      ded.witness.labels = {d, conflict->a->value};
      ded.witness.summary = "assuming " + geo.cell_name(c) + "=" + std::to_string(d) + ": " +
                            forced_text(geo, g, bg.cell_of_vertex, nr, v, d, *conflict->a) + "; " +
                            forced_text(geo, g, bg.cell_of_vertex, nr, v, d, *conflict->b);
      out.push_back(std::move(ded));
      break;
    }
  }
  return out;
}

std::vector<Deduction> find_mixed_conflicts(const Board& b, std::size_t limit) {
  const Geometry& geo = b.geometry();
  const BilocationGraph lg = build_bilocation_graph(b);
  if (lg.contradiction) return {graph_contradiction(RuleId::mixed_conflict, geo, lg.contradiction_cells)};
  const BipartiteBivalueGraph vg = build_bipartite_bivalue_graph(b);
  const NrGraph lnr = build_nr(lg.graph);
  const NrGraph vnr = build_nr(vg.graph);
  std::vector<Deduction> out;
  for (int c = 0; c < geo.cell_count() && out.size() < limit; ++c) {
    const int lv = lg.vertex_of_cell[static_cast<std::size_t>(c)];
    const int vv = vg.vertex_of_cell[static_cast<std::size_t>(c)];
    if (lv < 0 || vv < 0) continue;
    const auto digits = two_digits(b.candidates(c));
    for (int i = 0; i < 2; ++i) {
      const int d = digits[static_cast<std::size_t>(i)];
      const int e = digits[static_cast<std::size_t>(1 - i)];
      if (!lnr.port(lv, d)) continue;
      // Both sides assume c = e: one as c <> d on bilocation links, one directly.
      const auto from_links = bilocation_forced(lg, lnr, lv, d);
      const auto from_pairs = bivalue_forced(b, vg, vnr, vv, e);
      const auto conflict = find_conflict(geo, from_links, &from_pairs);
      if (!conflict) continue;
      Deduction ded;
      ded.rule = RuleId::mixed_conflict;
      ded.placements = {{c, d}};
      ded.witness.cells = {c, conflict->a->cell, conflict->b->cell};
      ded.witness.labels = {e, conflict->a->value};
      ded.witness.summary = "assuming " + geo.cell_name(c) + "=" + std::to_string(e) + ": " +
                            forced_text(geo, lg.graph, lg.cell_of_vertex, lnr, lv, d, *conflict->a) + "; " +
                            forced_text(geo, vg.graph, vg.cell_of_vertex, vnr, vv, e, *conflict->b);
      out.push_back(std::move(ded));
      break;
    }
  }
  return out;
}

std::span<const RuleId> all_rules() {
  static constexpr std::array<RuleId, 14> kOrder = {
      RuleId::hidden_single,        RuleId::naked_single,       RuleId::intersection_triple,
      RuleId::box_line,             RuleId::hidden_pair,        RuleId::matching_digit,
      RuleId::matching_group,       RuleId::bilocation_cycle,   RuleId::bilocation_repetitive,
      RuleId::bilocation_conflict,  RuleId::bivalue_cycle,      RuleId::bivalue_repetitive,
      RuleId::bivalue_conflict,     RuleId::mixed_conflict,
  };
  return kOrder;
}

std::vector<Deduction> run_rule(const Board& b, RuleId rule, std::size_t limit) {
  switch (rule) {
    case RuleId::hidden_single: return find_hidden_singles(b, limit);
    case RuleId::naked_single: return find_naked_singles(b, limit);
    case RuleId::intersection_triple: return find_intersection_triples(b, limit);
    case RuleId::box_line: return find_box_line(b, limit);
    case RuleId::hidden_pair: return find_hidden_pairs(b, limit);
    case RuleId::matching_digit: return find_matching_digit(b, limit);
    case RuleId::matching_group: return find_matching_group(b, limit);
    case RuleId::bilocation_cycle: return find_bilocation_cycles(b, limit);
    case RuleId::bilocation_repetitive: return find_bilocation_repetitive(b, limit);
    case RuleId::bilocation_conflict: return find_bilocation_conflicts(b, limit);
    case RuleId::bivalue_cycle: return find_bivalue_cycles(b, limit);
    case RuleId::bivalue_repetitive: return find_bivalue_repetitive(b, limit);
    case RuleId::bivalue_conflict: return find_bivalue_conflicts(b, limit);
    case RuleId::mixed_conflict: return find_mixed_conflicts(b, limit);
  }
  return {};
}

}  // namespace nonrep::sudoku

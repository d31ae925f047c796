#include <doctest.h>

#include "sudoku/board.hpp"
#include "sudoku/generator.hpp"
#include "sudoku/graphs.hpp"

using namespace nonrep::sudoku;

namespace {

const char* kSolved =
    "534678912672195348198342567859761423426853791713924856961537284287419635345286179";

}  // namespace

TEST_SUITE("sudoku_core") {

TEST_CASE("geometry tables") {
  for (int box = kMinBox; box <= 5; ++box) {
    const auto geo = Geometry::for_box(box);
    const int n = box * box;
    CHECK(geo->group_count() == 3 * n);
    for (int g = 0; g < geo->group_count(); ++g) CHECK(geo->group(g).size() == static_cast<std::size_t>(n));
    for (int c = 0; c < geo->cell_count(); ++c) {
      CHECK(geo->peers(c).size() == static_cast<std::size_t>(3 * (n - 1) - 2 * (box - 1)));
      for (int g : geo->groups_of(c)) CHECK(geo->in_group(c, g));
    }
  }
  const auto geo = Geometry::for_box(3);
  CHECK(geo->cell_name(0) == "r1c1");
  CHECK(geo->cell_name(80) == "r9c9");
  CHECK(geo->box_of(geo->cell(4, 7)) == 5);
  CHECK(geo->group_name(geo->col_group(2)) == "column 3");
  CHECK_THROWS(Geometry::for_box(1));
  CHECK_THROWS(Geometry::for_box(9));
}

TEST_CASE("81 dots give an empty board with full candidates") {
  const Board b = parse_board(std::string(81, '.'));
  CHECK(b.placed_count() == 0);
  for (int c = 0; c < 81; ++c) CHECK(b.candidates(c) == 0x1ff);
  CHECK(parse_board(std::string(81, '0')) == b);
}

TEST_CASE("parse errors") {
  std::string dup(81, '.');
  dup[0] = '5';
  dup[7] = '5';
  CHECK_THROWS_AS(parse_board(dup), BoardParseError);
  CHECK_THROWS_AS(parse_board(std::string(80, '.')), BoardParseError);
  CHECK_THROWS_AS(parse_board(std::string(80, '.') + "x"), BoardParseError);
  CHECK_THROWS_AS(parse_board("B 2\n1 2 3"), BoardParseError);
  CHECK_THROWS_AS(parse_board("B 9\n"), BoardParseError);
  CHECK_THROWS_AS(parse_board("B 2\n" + std::string(16 * 2, ' ') + "5" + std::string(15, ' ')), BoardParseError);
  std::string gen = "B 2\n";
  for (int i = 0; i < 16; ++i) gen += i == 0 || i == 1 ? "1 " : "0 ";
  CHECK_THROWS_AS(parse_board(gen), BoardParseError);
}

TEST_CASE("placing strips peers and detects clashes") {
  Board b(3);
  CHECK(b.place(0, 5));
  CHECK(b.value(0) == 5);
  CHECK_FALSE(b.has_candidate(1, 5));
  CHECK_FALSE(b.has_candidate(9, 5));
  CHECK_FALSE(b.has_candidate(10, 5));
  CHECK(b.has_candidate(40, 5));
  CHECK(b.place(0, 5));
  CHECK_FALSE(Board(b).place(0, 4));
  Board c = b;
  CHECK_FALSE(c.place(1, 5));
  CHECK(b.eliminate(0, 4));
  CHECK_FALSE(Board(b).eliminate(0, 5));
  Board d(2);
  for (int x = 1; x <= 3; ++x) CHECK(d.eliminate(0, x));
  CHECK_FALSE(d.eliminate(0, 4));
}

TEST_CASE("serialization round-trips") {
  const Board solved = parse_board(kSolved);
  CHECK(serialize_board(solved) == kSolved);
  CHECK(verify_solution(solved));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Board p = generate(3, seed).puzzle;
    CHECK(parse_board(serialize_board(p)) == p);
  }
  for (const Board& p : {generate(2, 3).puzzle, dense_bivalue_fixture(4)}) {
    const int box = p.box();
    const std::string text = serialize_board(p);
    CHECK(text.rfind("B " + std::to_string(box), 0) == 0);
    CHECK(parse_board(text) == p);
  }
}

TEST_CASE("verify_solution rejects incomplete and broken grids") {
  std::string s = kSolved;
  s[80] = '.';
  CHECK_FALSE(verify_solution(parse_board(s)));
  Board b(2);
  CHECK_FALSE(verify_solution(b));
}

TEST_CASE("applying deductions") {
  Board b(3);
  Deduction d;
  d.placements = {{0, 3}};
  d.eliminations = {{1, 4}};
  const auto after = apply_deduction(b, d);
  REQUIRE(after);
  CHECK(after->value(0) == 3);
  CHECK_FALSE(after->has_candidate(1, 4));
  CHECK_FALSE(after->has_candidate(1, 3));
  Deduction bad;
  bad.contradiction = true;
  CHECK_FALSE(apply_deduction(b, bad));
  Deduction clash;
  clash.placements = {{0, 3}, {1, 3}};
  CHECK_FALSE(apply_deduction(b, clash));
}

TEST_CASE("rule names and tiers") {
  for (int i = 0; i <= static_cast<int>(RuleId::mixed_conflict); ++i) {
    const auto id = static_cast<RuleId>(i);
    CHECK(rule_from_name(rule_name(id)) == id);
    CHECK(rule_tier(id) >= 0);
    CHECK(rule_tier(id) <= kMaxTier);
  }
  CHECK(rule_tier(RuleId::naked_single) == 0);
  CHECK(rule_tier(RuleId::hidden_pair) == 1);
  CHECK(rule_tier(RuleId::matching_group) == 2);
  CHECK(rule_tier(RuleId::bilocation_conflict) == 3);
  CHECK(rule_tier(RuleId::mixed_conflict) == 4);
  CHECK_FALSE(rule_from_name("xWing").has_value());
}

TEST_CASE("deduction lines are stable") {
  Deduction d;
  d.rule = RuleId::box_line;
  d.eliminations = {{3, 5}, {4, 5}};
  d.witness.summary = "5 in box 1 lies within row 1";
  CHECK(format_deduction(*Geometry::for_box(3), d) ==
        "boxLine tier=1 place=- eliminate=r1c4=5,r1c5=5 witness=\"5 in box 1 lies within row 1\"");
}

}

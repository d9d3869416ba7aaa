#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linfinf/decomposable.hpp"
#include "linfinf/errors.hpp"
#include "linfinf/random_gen.hpp"
#include "linfinf/represent.hpp"

#include "support/oracles.hpp"

using namespace linfinf;

namespace {

/// Germ induced on every line by the global affine (a, b, c).
Germ germ_of_uniform(const CellAffine& v) {
  return Germ(LineRule({}, {RulePiece{v.a, v.b, v.c, 0}}),
              LineRule({}, {RulePiece{v.a, v.c, v.b, 0}}));
}

const std::vector<Figure2D>& named_battery() {
  static const std::vector<Figure2D> battery = {
      Figure2D::hseg(Interval::full(), rat(1, 2)),
      Figure2D::hseg(Interval::closed(0, rat(1, 2)), rat(1, 3)),
      figure_union(Figure2D::hseg(Interval::full(), rat(1, 4)),
                   Figure2D::hseg(Interval::full(), rat(3, 4))),
      Figure2D({Box{Interval::point(rat(1, 4)), Interval::point(rat(1, 4))}}),
      Figure2D::unit_square(),
      Figure2D({Box{Interval::closed(0, rat(1, 2)), Interval::full()}}),  // the strip
      Figure2D::vseg(rat(1, 4), Interval::full()),
      figure_union(Figure2D::vseg(rat(1, 2), Interval::full()),
                   Figure2D::hseg(Interval::full(), rat(1, 3))),
  };
  return battery;
}

}  // namespace

TEST_CASE("candidate evaluation and traces") {
  CandidateGlobal plane = CandidateGlobal::uniform(CellAffine{0, 0, 1});
  CHECK(plane.value_at(rat(1, 4), rat(3, 4)) == rat(3, 4));
  CHECK(plane.trace(Orientation::Vertical, rat(1, 2)) == LineFunc::coordinate());
  CHECK(plane.trace(Orientation::Horizontal, rat(1, 3)) == LineFunc::constant(rat(1, 3)));

  LineMap vo, ho;
  vo.emplace(rat(1, 2), LineFunc::constant(5));
  ho.emplace(rat(1, 3), LineFunc::coordinate());
  CandidateGlobal decorated = CandidateGlobal::uniform(CellAffine{0, 0, 1}, vo, ho);
  CHECK(decorated.value_at(rat(1, 2), rat(7, 8)) == 5);
  CHECK(decorated.value_at(rat(1, 4), rat(1, 3)) == rat(1, 4));
  CHECK(decorated.value_at(rat(1, 2), rat(1, 3)) == 5);  // vertical override wins
  CHECK(decorated.trace(Orientation::Vertical, rat(1, 2)) == LineFunc::constant(5));
  // the trace along a line ignores λ-null crossings with the other orientation
  CHECK(decorated.trace(Orientation::Horizontal, rat(1, 3)) == LineFunc::coordinate());

  // step candidate: 0 left of 1/2, 1 from 1/2 on
  AxisAtoms xa = AxisAtoms::from_values({rat(1, 2)});
  AxisAtoms ya = AxisAtoms::from_values({});
  std::vector<CellAffine> row = {CellAffine{0, 0, 0}, CellAffine{0, 0, 0}, CellAffine{1, 0, 0},
                                 CellAffine{1, 0, 0}, CellAffine{1, 0, 0}};
  CandidateGlobal step(xa, ya, {row, row, row});
  CHECK(step.value_at(rat(1, 4), rat(1, 2)) == 0);
  CHECK(step.value_at(rat(1, 2), rat(1, 2)) == 1);
  CHECK(step.value_at(rat(3, 4), rat(1, 2)) == 1);
  CHECK(step.trace(Orientation::Horizontal, rat(1, 5)) ==
        LineFunc({rat(1, 2)}, {AffinePiece{0, 0}, AffinePiece{1, 0}}));
}

TEST_CASE("no global candidate matches both coordinate rules") {
  Germ g = coordinate_germ();

  ReprVerdict vy = represents(CandidateGlobal::uniform(CellAffine{0, 0, 1}), g);
  REQUIRE(!vy.represents());
  CHECK(vy.witness->orientation == Orientation::Horizontal);
  CHECK(vy.witness->where.length() > 0);
  Rat t = vy.witness->where.representative();
  CHECK(vy.witness->lhs.value_at(t) != vy.witness->rhs.value_at(t));
  CHECK(verify_witness(CandidateGlobal::uniform(CellAffine{0, 0, 1}), g, *vy.witness));

  ReprVerdict vx = represents(CandidateGlobal::uniform(CellAffine{0, 1, 0}), g);
  REQUIRE(!vx.represents());
  CHECK(vx.witness->orientation == Orientation::Vertical);
  CHECK(verify_witness(CandidateGlobal::uniform(CellAffine{0, 1, 0}), g, *vx.witness));

  ReprVerdict vz = represents(CandidateGlobal::uniform(CellAffine{0, 0, 0}), g);
  REQUIRE(!vz.represents());
  CHECK(verify_witness(CandidateGlobal::uniform(CellAffine{0, 0, 0}), g, *vz.witness));

  CHECK(represents(CandidateGlobal::uniform(CellAffine{0, 0, 0}), Germ::zero()).represents());
}

TEST_CASE("representable germs are recognized") {
  // rules induced by the single global function g(x,y) = y
  Germ gy(LineRule::coordinate(), LineRule::line_index());
  CHECK(represents(CandidateGlobal::uniform(CellAffine{0, 0, 1}), gy).represents());

  Rng rng(565);
  for (int trial = 0; trial < 25; ++trial) {
    CellAffine v{rand_coeff(rng), rand_coeff(rng), rand_coeff(rng)};
    CHECK(represents(CandidateGlobal::uniform(v), germ_of_uniform(v)).represents());
  }

  // matching line decorations on both sides keep representability
  LineMap exc;
  exc.emplace(rat(1, 2), LineFunc::constant(5));
  Germ gy5(LineRule::coordinate(), LineRule::line_index(), exc, {});
  LineMap vo;
  vo.emplace(rat(1, 2), LineFunc::constant(5));
  CHECK(represents(CandidateGlobal::uniform(CellAffine{0, 0, 1}, vo), gy5).represents());

  // a mismatched override is pinned to its line
  LineMap vo4;
  vo4.emplace(rat(1, 2), LineFunc::constant(4));
  CandidateGlobal off = CandidateGlobal::uniform(CellAffine{0, 0, 1}, vo4);
  ReprVerdict verdict = represents(off, gy5);
  REQUIRE(!verdict.represents());
  CHECK(verdict.witness->orientation == Orientation::Vertical);
  CHECK(verdict.witness->line == rat(1, 2));
  CHECK(verdict.witness->where.length() > 0);
  CHECK(verify_witness(off, gy5, *verdict.witness));
}

TEST_CASE("witness verification rejects tampered witnesses") {
  Germ g = coordinate_germ();
  CandidateGlobal plane = CandidateGlobal::uniform(CellAffine{0, 0, 1});
  ReprVerdict verdict = represents(plane, g);
  REQUIRE(!verdict.represents());
  REQUIRE(verify_witness(plane, g, *verdict.witness));

  ReprWitness moved = *verdict.witness;
  moved.orientation = Orientation::Vertical;  // vertical traces agree
  moved.set = Figure2D::vseg(moved.line, Interval::full());
  CHECK(!verify_witness(plane, g, moved));

  ReprWitness shrunk = *verdict.witness;
  shrunk.where = Interval::point(rat(1, 2));  // λ-null window proves nothing
  CHECK(!verify_witness(plane, g, shrunk));

  ReprWitness inflated = *verdict.witness;
  inflated.set = Figure2D::unit_square();  // not σ-finite
  CHECK(!verify_witness(plane, g, inflated));

  Germ gy(LineRule::coordinate(), LineRule::line_index());
  CHECK(!verify_witness(plane, gy, *verdict.witness));  // pair actually agrees
}

TEST_CASE("standard battery layout") {
  std::vector<CandidateGlobal> battery = standard_battery();
  REQUIRE(battery.size() == 125);
  CHECK(battery[0].cell(0, 0) == CellAffine{-1, -1, -1});
  CHECK(battery[62].cell(0, 0) == CellAffine{0, 0, 0});
  CHECK(battery[124].cell(0, 0) == CellAffine{1, 1, 1});
  for (const CandidateGlobal& c : battery) {
    CHECK(c.overrides(Orientation::Vertical).empty());
    CHECK(c.overrides(Orientation::Horizontal).empty());
  }
}

TEST_CASE("battery sweep finds a verified witness per candidate") {
  NonReprReport report = exhaustive_nonrepresentability(coordinate_germ(), standard_battery());
  CHECK(report.all_witnessed);
  REQUIRE(report.entries.size() == 125);
  for (const NonReprEntry& e : report.entries) {
    CHECK(!e.verdict.represents());
    CHECK(e.verified);
  }

  // honest negative control: a representable germ is spotted, not witnessed
  Germ gy(LineRule::coordinate(), LineRule::line_index());
  NonReprReport neg = exhaustive_nonrepresentability(gy, standard_battery());
  CHECK(!neg.all_witnessed);
  size_t representers = 0;
  for (const NonReprEntry& e : neg.entries)
    if (e.verdict.represents()) ++representers;
  CHECK(representers == 1);
  CHECK(neg.entries[64].verdict.represents());  // (a,b,c) = (0,0,1)
}

TEST_CASE("field membership under the horizontal-lines model") {
  SigmaFieldModel lines{SigmaFieldKind::CountableHorizontalLines};
  CHECK(member(lines, Figure2D::hseg(Interval::full(), rat(1, 2))));
  CHECK(member(lines, Figure2D::hseg(Interval::closed(0, rat(1, 2)), rat(1, 3))));
  CHECK(member(lines, Figure2D({Box{Interval::point(rat(1, 4)), Interval::point(rat(1, 4))}})));
  CHECK(member(lines, Figure2D::unit_square()));  // complement is empty
  CHECK(member(lines, Figure2D::empty()));
  CHECK(member(lines, figure_complement(Figure2D::hseg(Interval::full(), rat(1, 2)))));
  CHECK(!member(lines, Figure2D({Box{Interval::closed(0, rat(1, 2)), Interval::full()}})));
  CHECK(!member(lines, Figure2D::vseg(rat(1, 4), Interval::full())));
  CHECK(!member(lines, figure_union(Figure2D::vseg(rat(1, 2), Interval::full()),
                                    Figure2D::hseg(Interval::full(), rat(1, 3)))));

  SigmaFieldModel all{SigmaFieldKind::AllFigures};
  for (const Figure2D& a : named_battery()) CHECK(member(all, a));
}

TEST_CASE("null-lifting holds for the lines measure and fails for the grid") {
  Decomposition d;
  StarReport lines = check_star(d, MeasureKind::Lines, named_battery());
  CHECK(lines.all_pass);
  REQUIRE(lines.items.size() == named_battery().size());
  CHECK(!lines.items[5].premise);  // the strip has non-null slices
  CHECK(lines.items[6].premise);   // vertical segment slices are null
  CHECK(lines.items[6].mu == ExtRat::of(0));

  StarReport grid =
      check_star(d, MeasureKind::Grid, {Figure2D::vseg(rat(1, 4), Interval::full())});
  CHECK(!grid.all_pass);
  REQUIRE(grid.items.size() == 1);
  CHECK(grid.items[0].premise);
  CHECK(grid.items[0].mu == ExtRat::of(1));
  CHECK(!grid.items[0].pass);
}

TEST_CASE("slicewise membership does not lift") {
  Decomposition d;
  SigmaFieldModel lines{SigmaFieldKind::CountableHorizontalLines};
  std::optional<size_t> hit = check_double_star(d, lines, named_battery());
  REQUIRE(hit.has_value());
  CHECK(*hit == 5);  // the strip is the first non-member

  SigmaFieldModel all{SigmaFieldKind::AllFigures};
  CHECK(!check_double_star(d, all, named_battery()).has_value());

  std::vector<Figure2D> members(named_battery().begin(), named_battery().begin() + 5);
  CHECK(!check_double_star(d, lines, members).has_value());
}

TEST_CASE("patching the horizontal rules into a global function") {
  Decomposition d;

  PatchedFunction gx = patch_global(Germ(LineRule::zero(), LineRule::coordinate()), d);
  for (const Rat& x : {rat(0), rat(1, 3), rat(1, 2), rat(1)})
    for (const Rat& y : {rat(0), rat(1, 4), rat(1)}) CHECK(gx.value_at(x, y) == x);

  PatchedFunction gy = patch_global(Germ(LineRule::zero(), LineRule::line_index()), d);
  CHECK(gy.value_at(rat(1, 3), rat(1, 4)) == rat(1, 4));

  PatchedFunction gz = patch_global(Germ::zero(), d);
  CHECK(gz.value_at(rat(1, 3), rat(1, 4)) == 0);

  // exceptions become whole-line overrides
  LineMap exc;
  exc.emplace(rat(1, 3), LineFunc::constant(9));
  PatchedFunction ge = patch_global(Germ(LineRule::zero(), LineRule::coordinate(), {}, exc), d);
  CHECK(ge.value_at(rat(1, 4), rat(1, 3)) == 9);
  CHECK(ge.value_at(rat(1, 4), rat(1, 2)) == rat(1, 4));
  CHECK(ge.trace(Orientation::Horizontal, rat(1, 3)) == LineFunc::constant(9));

  CHECK_THROWS_AS(patch_global(Germ(LineRule::zero(), LineRule({}, {RulePiece{0, 0, 0, 1}})), d),
                  Unsupported);
}

TEST_CASE("patched functions restrict back to the germ on every part") {
  Decomposition d;
  Germ g(LineRule::zero(), LineRule::coordinate());
  PatchedFunction patched = patch_global(g, d);
  for (const Rat& y : {rat(0), rat(1, 4), rat(1, 2), rat(2, 3), rat(1)}) {
    RestrictedGerm r = restrict_germ(g, Decomposition::part(y));
    REQUIRE(r.horizontal.count(y) == 1);
    CHECK(eq_ae_line(patched.trace(Orientation::Horizontal, y), r.horizontal.at(y),
                     Set1D::full()));
  }
}

TEST_CASE("the patched coordinate function is not measurable for the field") {
  Decomposition d;
  SigmaFieldModel lines{SigmaFieldKind::CountableHorizontalLines};

  PatchedFunction gx = patch_global(Germ(LineRule::zero(), LineRule::coordinate()), d);
  auto w = measurable_witness(gx, lines);
  REQUIRE(w.has_value());
  CHECK(w->threshold == rat(1, 2));
  Figure2D right_open_half = figure_diff(
      Figure2D::unit_square(), Figure2D({Box{Interval::closed(0, rat(1, 2)), Interval::full()}}));
  CHECK(figure_same_set(w->set, right_open_half));
  CHECK(!member(lines, w->set));

  // constant functions have trivially measurable level sets
  PatchedFunction gz = patch_global(Germ::zero(), d);
  CHECK(!measurable_witness(gz, lines).has_value());

  // every figure is a member of the full field
  SigmaFieldModel all{SigmaFieldKind::AllFigures};
  CHECK(!measurable_witness(gx, all).has_value());

  CHECK_THROWS_AS(measurable_witness(CandidateGlobal::uniform(CellAffine{0, 1, 1}), lines),
                  Unsupported);
}

TEST_CASE("finite-measure members touch finitely many lines, except where they do not") {
  SigmaFieldModel lines{SigmaFieldKind::CountableHorizontalLines};
  CountabilityReport ok = countability_check(lines, MeasureKind::Lines, named_battery());
  CHECK(ok.all_pass);
  for (const CountabilityItem& item : ok.items) CHECK(item.pass);

  // the grid measure violates the hypothesis: a vertical segment has finite
  // measure but meets every horizontal line
  SigmaFieldModel all{SigmaFieldKind::AllFigures};
  CountabilityReport bad = countability_check(
      all, MeasureKind::Grid, {Figure2D::vseg(rat(1, 4), Interval::full())});
  CHECK(!bad.all_pass);
  REQUIRE(bad.items.size() == 1);
  CHECK(bad.items[0].in_field);
  CHECK(bad.items[0].finite_measure);
  CHECK(!bad.items[0].finitely_many_lines);
  CHECK(!bad.items[0].pass);
}

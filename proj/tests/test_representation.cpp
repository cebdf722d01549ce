#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stick/representation.hpp"

using namespace stick;

TEST_CASE("tokens round trip") {
  const auto rep = parse_representation("TA1 B1 A1 TB1 TA2 B2 A2 TB2");
  CHECK(rep.size() == 8);
  CHECK(rep[0] == Event::a_tip(0));
  CHECK(rep[7] == Event::b_tip(1));
  CHECK(format_representation(rep) == "TA1 B1 A1 TB1 TA2 B2 A2 TB2");
  CHECK(format_representation(parse_representation("")) == "");
}

TEST_CASE("malformed sequences are rejected") {
  CHECK_THROWS_AS(parse_representation("A1 TA1"), ParseError);
  CHECK_THROWS_AS(parse_representation("TB1 B1"), ParseError);
  CHECK_THROWS_AS(parse_representation("TA1 A1 A1"), ParseError);
  CHECK_THROWS_AS(parse_representation("TA1"), ParseError);
  CHECK_THROWS_AS(parse_representation("TA2 A2"), ParseError);
  CHECK_THROWS_AS(parse_representation("TC1 C1"), ParseError);
  CHECK_THROWS_AS(parse_representation("TA0 A0"), ParseError);
  CHECK_THROWS_AS(EventPositions(StickRepresentation({Event::a_origin(0), Event::a_tip(0)})), RepresentationError);
  CHECK(well_formedness_violations(parse_representation("TA1 A1"), 2, 0).size() == 2);
}

TEST_CASE("overlap pattern") {
  const auto rep = parse_representation("TA1 B1 A1 TB1");
  CHECK(overlaps(rep, 0, 0));
  const auto nested = parse_representation("B1 TA1 A1 TB1");
  CHECK_FALSE(overlaps(nested, 0, 0));
  const auto apart = parse_representation("TA1 A1 B1 TB1");
  CHECK_FALSE(overlaps(apart, 0, 0));
  CHECK_THROWS_AS(overlaps(rep, 0, 1), RepresentationError);
}

TEST_CASE("validation lists every violation") {
  const BipartiteGraph g(2, 2, std::vector<Edge>{{0, 0}, {1, 1}});
  CHECK(validate_representation(parse_representation("TA1 B1 A1 TB1 TA2 B2 A2 TB2"), g).ok());

  const auto wrong = validate_representation(parse_representation("TA1 B1 TA2 B2 A1 A2 TB1 TB2"), g);
  REQUIRE(wrong.violations.size() == 1);
  CHECK(wrong.violations[0].kind == Violation::Kind::SpuriousOverlap);

  const auto missing = validate_representation(parse_representation("TA1 A1 B1 TB1 TA2 B2 A2 TB2"), g);
  REQUIRE(missing.violations.size() == 1);
  CHECK(missing.violations[0].kind == Violation::Kind::MissingOverlap);

  const auto short_rep = validate_representation(parse_representation("TA1 B1 A1 TB1"), g);
  CHECK(short_rep.violations.front().kind == Violation::Kind::Malformed);
}

TEST_CASE("induced graph matches direct comparison of positions") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 500; ++round) {
    const int n = round % 5, m = (round / 5) % 5;
    const auto rep = oracle::random_sequence(n, m, rng);
    const auto g = induced_graph(rep);
    REQUIRE(g.a_count() == n);
    REQUIRE(g.b_count() == m);
    CHECK(oracle::edge_mask(g) == oracle::pattern_mask({rep.events().begin(), rep.events().end()}, n, m));
    CHECK(validate_representation(rep, g).ok());
  }
}

TEST_CASE("reversal with side swap represents the swapped graph") {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 300; ++round) {
    const auto rep = oracle::random_sequence(1 + round % 4, 1 + round % 3, rng);
    const auto g = induced_graph(rep);
    const auto back = reversed_and_swapped(rep);
    CHECK(validate_representation(back, g.swapped_sides()).ok());
    CHECK(reversed_and_swapped(back) == rep);
  }
}

TEST_CASE("svg output") {
  const auto rep = parse_representation("TA1 B1 A1 TB1");
  const auto flat = render_svg(rep, RenderStyle::Flat);
  const auto slope = render_svg(rep, RenderStyle::Slope);
  CHECK(flat == render_svg(rep, RenderStyle::Flat));
  CHECK(flat.find("<svg") != std::string::npos);
  CHECK(flat.find("data-vertex=\"A1\"") != std::string::npos);
  CHECK(slope.find("class=\"b-segment\"") != std::string::npos);

  const auto segs = slope_layout(rep);
  REQUIRE(segs.size() == 2);
  // A1: origin at event 2, rising to the height of its tip at event 0.
  CHECK(segs[0].x1 == 2);
  CHECK(segs[0].y2 == 0);
  // B1: origin at event 1, running to the abscissa of its tip at event 3.
  CHECK(segs[1].y1 == 1);
  CHECK(segs[1].x2 == 3);
  CHECK_THROWS_AS(render_svg(StickRepresentation({Event::a_origin(0)}), RenderStyle::Flat), RepresentationError);
}

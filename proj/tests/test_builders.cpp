#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stick/builders.hpp"
#include "stick/generators.hpp"

using namespace stick;

namespace {

Turn t(const char* s) { return parse_turn(s); }
Arc arc(const char* id, const char* a, const char* b) { return {id, t(a), t(b)}; }

}  // namespace

TEST_CASE("exact positions") {
  CHECK(t("0.25").ticks == Turn::kPerTurn / 4);
  CHECK(t(".5") == Turn::fraction(1, 2));
  CHECK(t("1").ticks == Turn::kPerTurn);
  CHECK(t("0.000000000001").ticks == 1);
  CHECK(to_string(t("0.125")) == "0.125");
  CHECK(to_string(t("0")) == "0");
  CHECK_THROWS_AS(t("0.1234567890123"), ParseError);
  CHECK_THROWS_AS(t("-0.5"), ParseError);
  CHECK_THROWS_AS(t("0.5x"), ParseError);
  CHECK_THROWS_AS(t("."), ParseError);
}

TEST_CASE("arc family validation") {
  CHECK(validate_arc_family({{arc("s", "0.4", "0.8")}, {}}).empty());
  CHECK(validate_arc_family({{}, {arc("t", "0.9", "0.3")}}).empty());
  const auto bad = validate_arc_family({{arc("s", "0.3", "0.6")}, {}});
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].find("does not contain s") != std::string::npos);
  CHECK_FALSE(validate_arc_family({{arc("s", "0.4", "0.8")}, {arc("t", "0.8", "0.3")}}).empty());
  CHECK_FALSE(validate_arc_family({{arc("s", "0.5", "0.8")}, {}}).empty());
  CHECK_FALSE(validate_arc_family({{arc("s", "0.4", "1.2")}, {}}).empty());
}

TEST_CASE("folding arcs") {
  const auto disjoint = arcs_to_stick({{arc("s", "0.4", "0.8")}, {arc("t", "0.9", "0.3")}});
  CHECK(disjoint.graph.edge_count() == 1);
  CHECK(format_representation(disjoint.representation) == "TA1 B1 A1 TB1");

  // Meeting only between s and p: the A-interval lands inside the B-interval.
  const auto nested = arcs_to_stick({{arc("s", "0.4", "0.99")}, {arc("t", "0.9", "0.3")}});
  CHECK(nested.graph.edge_count() == 0);
  CHECK(format_representation(nested.representation) == "B1 TA1 A1 TB1");

  const auto empty = arcs_to_stick({});
  CHECK(empty.graph.vertex_count() == 0);
  CHECK(empty.representation.empty());
  CHECK_THROWS_AS(arcs_to_stick({{arc("s", "0.3", "0.6")}, {}}), BuildError);
}

TEST_CASE("fold orders for the four kinds of meeting") {
  // Two arcs can meet between s and p, between r and q, both or neither.
  const Turn r = Turn::fraction(1, 4), q = Turn::fraction(2, 4), s = Turn::fraction(3, 4);
  const Turn last{Turn::kPerTurn - 1};
  const char* expected[2][2] = {{"TA1 B1 A1 TB1", "TA1 B1 TB1 A1"}, {"B1 TA1 A1 TB1", "B1 TA1 TB1 A1"}};
  int seen[2][2] = {};
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto fam = gen_random_arc_family(1, 1, seed);
    const Arc& sa = fam.s_arcs[0];
    const Arc& ta = fam.t_arcs[0];
    const int sp = oracle::arcs_overlap({"", s, sa.end}, {"", ta.start, last});
    const int rq = oracle::arcs_overlap({"", sa.start, q}, {"", r, ta.end});
    const auto built = arcs_to_stick(fam);
    CHECK(format_representation(built.representation) == expected[sp][rq]);
    CHECK((built.graph.edge_count() == 1) == !oracle::arcs_overlap(sa, ta));
    ++seen[sp][rq];
  }
  for (auto& row : seen)
    for (int count : row) CHECK(count > 0);
}

TEST_CASE("random arc families match brute-force overlap") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto fam = gen_random_arc_family(1 + seed % 8, seed % 9, seed);
    CHECK(validate_arc_family(fam).empty());
    const auto built = arcs_to_stick(fam);
    CHECK(validate_representation(built.representation, built.graph).ok());
    for (std::size_t i = 0; i < fam.s_arcs.size(); ++i)
      for (std::size_t j = 0; j < fam.t_arcs.size(); ++j)
        CHECK(built.graph.adjacent(int(i), int(j)) == !oracle::arcs_overlap(fam.s_arcs[i], fam.t_arcs[j]));
  }
}

TEST_CASE("chord families") {
  const ChordFamily one_edge{{{"a", t("0.9"), t("0.3")}, {"b", t("0.8"), t("0.2")}}};
  const auto built = chords_to_stick(one_edge);
  CHECK(built.vertex_of[0] == Vertex{Side::A, 0});
  CHECK(built.vertex_of[1] == Vertex{Side::B, 0});
  CHECK(format_representation(built.representation) == "TA1 B1 A1 TB1");

  const ChordFamily apart{{{"a", t("0.9"), t("0.3")}, {"b", t("0.7"), t("0.4")}}};
  const auto nested = chords_to_stick(apart);
  CHECK(nested.graph.edge_count() == 0);
  CHECK(format_representation(nested.representation) == "TA1 TA2 A2 A1");

  const auto single = chords_to_stick({{{"x", t("0.6"), t("0.1")}}});
  CHECK(format_representation(single.representation) == "TA1 A1");

  const ChordFamily triangle{{{"1", t("0.1"), t("0.6")}, {"2", t("0.2"), t("0.7")}, {"3", t("0.3"), t("0.8")}}};
  CHECK_THROWS_AS(chords_to_stick(triangle), BuildError);
  CHECK_FALSE(validate_chord_family({{{"x", t("0.1"), t("0.2")}}}).empty());
  CHECK_FALSE(validate_chord_family({{{"x", t("0.5"), t("0.7")}}}).empty());
  CHECK(chords_cross(one_edge.chords[0], one_edge.chords[1]));
  CHECK_FALSE(chords_cross(apart.chords[0], apart.chords[1]));
}

TEST_CASE("random bipartite chord families match brute-force interleaving") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto fam = gen_random_bipartite_chord_family(1 + seed % 16, seed);
    const auto built = chords_to_stick(fam);
    CHECK(validate_representation(built.representation, built.graph).ok());
    for (std::size_t x = 0; x < fam.chords.size(); ++x)
      for (std::size_t y = x + 1; y < fam.chords.size(); ++y) {
        const Vertex u = built.vertex_of[x], w = built.vertex_of[y];
        const bool crossing = oracle::chords_interleave(fam.chords[x], fam.chords[y]);
        if (u.side == w.side)
          CHECK_FALSE(crossing);
        else
          CHECK(built.graph.adjacent(u, w) == crossing);
      }
  }
}

TEST_CASE("family files") {
  const auto arcs = parse_arc_family("# two arcs\nS a 0.4 0.8\n\nT b 0.9 0.3\n");
  REQUIRE(arcs.s_arcs.size() == 1);
  CHECK(arcs.t_arcs[0].id == "b");
  CHECK(format_arc_family(arcs) == "S a 0.4 0.8\nT b 0.9 0.3\n");
  CHECK_THROWS_AS(parse_arc_family("S a 0.4\n"), ParseError);
  CHECK_THROWS_AS(parse_arc_family("X a 0.4 0.5\n"), ParseError);

  const auto chords = parse_chord_family("c 1 0.9 0.3\nc 2 0.8 0.2\n");
  CHECK(chords.chords.size() == 2);
  CHECK(format_chord_family(chords) == "c 1 0.9 0.3\nc 2 0.8 0.2\n");
  CHECK_THROWS_AS(parse_chord_family("c 1 0.9 zero\n"), ParseError);
}

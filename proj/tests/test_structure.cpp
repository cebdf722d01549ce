#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stick/generators.hpp"
#include "stick/structure.hpp"

using namespace stick;

namespace {

Configuration classify(const char* tokens, int v, int t) {
  const auto rep = parse_representation(tokens);
  return classify_configuration(rep, induced_graph(rep), v, t);
}

}  // namespace

TEST_CASE("neighbourhood partition of J3") {
  const auto g = gen_jk(3);
  const auto p = partition_neighborhoods(g, 1, 0);  // v = A2, t = A1
  CHECK(p.b1 == BSet{0, 3});
  CHECK(p.b2 == BSet{1});
  CHECK(p.b3 == BSet{2, 4});
  CHECK_THROWS_AS(partition_neighborhoods(g, 2, 2), Error);
  CHECK_THROWS_AS(p.part(4), Error);
}

TEST_CASE("mate classes and overlapping mates in J3") {
  const auto g = gen_jk(3);
  CHECK(mate_class(g, 1, 0, 5).word() == "13");
  CHECK(mate_class(g, 1, 0, 2).word() == "13");
  CHECK(overlapping_mates(g, 1, 0, 5, 2, 1));
  CHECK_THROWS_AS(mate_class(g, 1, 0, 1), Error);
  CHECK_THROWS_AS(overlapping_mates(g, 1, 0, 5, 2, 2), Error);
  CHECK_THROWS_AS(overlapping_mates(g, 1, 0, 5, 5, 1), Error);

  const BipartiteGraph k33(3, 3, std::vector<Edge>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}});
  CHECK(mate_class(k33, 0, 1, 2) == MateClass::of({2}));
  CHECK(MateClass().word().empty());
  CHECK(MateClass::of({1, 2, 3}).word() == "123");
}

TEST_CASE("configuration kinds") {
  // a_t before a_v.
  const auto c1 = classify("TA1 TA2 B1 A2 A1 TB1", 0, 1);
  CHECK(c1.kind == ConfigurationKind::C1);
  CHECK(c1.partition.b2 == BSet{0});

  const auto c2 = classify("TA1 TA2 B1 A1 A2 TB1", 0, 1);
  CHECK(c2.kind == ConfigurationKind::C2);
  CHECK(c2.boundaries[2] == Event::a_origin(0));

  const auto c2p = classify("TA1 B1 A1 TB1 TA2 B2 A2 TB2", 0, 1);
  CHECK(c2p.kind == ConfigurationKind::C2Prime);
  CHECK(c2p.boundaries[1] == Event::a_origin(0));

  const auto rep = parse_representation("TA1 TA2 B1 A2 A1 TB1");
  CHECK_THROWS_AS(classify_configuration(rep, induced_graph(rep), 1, 0), AnalysisError);
  CHECK_THROWS_AS(classify_configuration(rep, BipartiteGraph(2, 1), 0, 1), AnalysisError);
}

TEST_CASE("region map of a C1 layout") {
  // v = A1, t = A2; B1 exclusive to v (origin before T(a_t)), B2 common,
  // B3 exclusive to t.
  const char* tokens = "TA1 B1 TA2 B2 B3 A2 TB3 A1 TB1 TB2";
  const auto rep = parse_representation(tokens);
  const auto c = classify_configuration(rep, induced_graph(rep), 0, 1);
  CHECK(c.kind == ConfigurationKind::C1);
  CHECK(c.beta3_1 == BSet{0});
  CHECK(c.region(Event::b_origin(0)) == Region::R0);
  CHECK(c.region(Event::b_origin(1)) == Region::R1);
  CHECK(c.region(Event::b_tip(2)) == Region::R2);
  CHECK(c.region(Event::b_tip(1)) == Region::R3);
  CHECK(table1_violations(c, EventPositions(rep)).empty());
}

TEST_CASE("C2' allows an exclusive tip of v before T(a_t)") {
  const auto rep = parse_representation("TA1 B1 A1 TB1 TA2 A2");
  const auto c = classify_configuration(rep, induced_graph(rep), 0, 1);
  CHECK(c.kind == ConfigurationKind::C2Prime);
  CHECK(c.beta3_2 == BSet{0});
  CHECK(c.region(Event::b_tip(0)) == Region::R1);
  CHECK(table1_violations(c, EventPositions(rep)).empty());
}

TEST_CASE("every valid layout conforms to the configuration table") {
  std::mt19937_64 rng(21);
  int pairs = 0;
  for (int round = 0; round < 3000; ++round) {
    const auto rep = oracle::random_sequence(2 + round % 4, 1 + round % 5, rng);
    const auto g = induced_graph(rep);
    const EventPositions pos(rep);
    for (int v = 0; v < g.a_count(); ++v)
      for (int t = 0; t < g.a_count(); ++t) {
        if (v == t || pos.a_tip(v) > pos.a_tip(t)) continue;
        const auto c = classify_configuration(rep, g, v, t);
        const auto problems = table1_violations(c, pos);
        CHECK_MESSAGE(problems.empty(), format_representation(rep), " v=", v + 1, " t=", t + 1);
        ++pairs;
      }
  }
  CHECK(pairs > 3000);
}

TEST_CASE("placement rules are data") {
  CHECK(placement_rules(MateClass::of({2}), ConfigurationKind::C1).size() == 2);
  CHECK(placement_rules(MateClass::of({3}), ConfigurationKind::C2).size() == 4);
  CHECK(placement_rules(MateClass(), ConfigurationKind::C1).empty());
  CHECK(&placement_rules(MateClass::of({1}), ConfigurationKind::C2Prime) ==
        &placement_rules(MateClass::of({1}), ConfigurationKind::C2));
}

TEST_CASE("a partner sliding across an anchor keeps its placement") {
  // C2, w = {2}; a_s sits in R2 but nothing separates it from a_v.
  const auto rep = parse_representation("TA1 TA3 TA2 B1 A1 B2 A3 TB2 A2 TB1");
  const auto g = induced_graph(rep);
  const auto report = check_table2(rep, g, 0, 1);
  CHECK(report.configuration.kind == ConfigurationKind::C2);
  REQUIRE(report.partners.size() == 1);
  const auto& p = report.partners[0];
  CHECK(p.w == MateClass::of({2}));
  CHECK(p.placement_ok);
}

TEST_CASE("a C1 partner of class 2 can be confined to R2") {
  // Known gap in the placement table: the table offers R1 and R3 only, yet
  // here a_3 is fenced into R2 by the tip of B1 and the origin of B3.
  const auto rep = parse_representation("TA1 TA3 TA2 B1 B2 A2 TB1 A3 B3 A1 TB2 TB3");
  const auto g = induced_graph(rep);
  CHECK(g.a_neighbors(0) == std::vector<int>{1, 2});
  CHECK(g.a_neighbors(1) == std::vector<int>{0, 1});
  CHECK(g.a_neighbors(2) == std::vector<int>{1});
  const auto report = check_table2(rep, g, 0, 1);
  CHECK(report.configuration.kind == ConfigurationKind::C1);
  REQUIRE(report.partners.size() == 1);
  CHECK(report.partners[0].region == Region::R2);
  CHECK(report.partners[0].equivalent == std::vector<Region>{Region::R2});
  CHECK_FALSE(report.partners[0].placement_ok);
}

TEST_CASE("partners sharing a region are nested") {
  std::mt19937_64 rng(33);
  int checked = 0;
  for (int round = 0; round < 2000; ++round) {
    const auto rep = oracle::random_sequence(3 + round % 3, 2 + round % 4, rng);
    const auto g = induced_graph(rep);
    const EventPositions pos(rep);
    for (int v = 0; v < g.a_count(); ++v)
      for (int t = 0; t < g.a_count(); ++t) {
        if (v == t || pos.a_tip(v) > pos.a_tip(t)) continue;
        for (const auto& pair : check_table2(rep, g, v, t).pairs) {
          CHECK_MESSAGE(pair.ok, format_representation(rep));
          ++checked;
        }
      }
  }
  CHECK(checked > 100);
}

TEST_CASE("forbidden partner pairs never occur in a valid layout") {
  std::mt19937_64 rng(44);
  for (int round = 0; round < 2000; ++round) {
    const auto rep = oracle::random_sequence(3 + round % 4, 2 + round % 4, rng);
    const auto report = check_forbidden_pairs(rep, induced_graph(rep));
    CHECK_MESSAGE(report.ok(), format_representation(rep));
  }
}

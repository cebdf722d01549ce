#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "stick/generators.hpp"
#include "stick/recognizer.hpp"

using namespace stick;

namespace {

// Every origin order, no pruning.
bool stick_by_permutations(const BipartiteGraph& g) {
  std::vector<Event> order;
  for (int j = 0; j < g.b_count(); ++j) order.push_back(Event::b_origin(j));
  for (int i = 0; i < g.a_count(); ++i) order.push_back(Event::a_origin(i));
  std::sort(order.begin(), order.end());
  do {
    if (greedy_tips(order, g)) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

const BipartiteGraph kP4(2, 2, std::vector<Edge>{{0, 0}, {1, 0}, {1, 1}});

}  // namespace

TEST_CASE("greedy tips on fixed origin orders") {
  const BipartiteGraph matching(2, 2, std::vector<Edge>{{0, 0}, {1, 1}});
  const std::vector<Event> order{Event::b_origin(0), Event::a_origin(0), Event::b_origin(1), Event::a_origin(1)};
  const auto rep = greedy_tips(order, matching);
  REQUIRE(rep);
  CHECK(format_representation(*rep) == "TA1 B1 A1 TB1 TA2 B2 A2 TB2");

  const std::vector<Event> bad{Event::b_origin(0), Event::b_origin(1), Event::a_origin(0), Event::a_origin(1)};
  CHECK_FALSE(greedy_tips(bad, kP4));

  const std::vector<Event> good{Event::b_origin(1), Event::b_origin(0), Event::a_origin(1), Event::a_origin(0)};
  const auto p4 = greedy_tips(good, kP4);
  REQUIRE(p4);
  CHECK(format_representation(*p4) == "TA2 B2 TA1 B1 A2 TB2 A1 TB1");

  CHECK_THROWS_AS(greedy_tips({Event::b_origin(0)}, kP4), Error);
  CHECK_THROWS_AS(greedy_tips({Event::b_origin(0), Event::b_origin(0), Event::a_origin(0), Event::a_origin(1)}, kP4),
                  Error);
  CHECK_THROWS_AS(greedy_tips({Event::b_tip(0), Event::b_origin(1), Event::a_origin(0), Event::a_origin(1)}, kP4),
                  Error);
}

TEST_CASE("small named graphs") {
  for (int v : {6, 8, 10}) {
    const auto r = recognize(gen_even_cycle(v));
    REQUIRE(r.verdict == Verdict::Yes);
    CHECK(validate_representation(*r.representation, gen_even_cycle(v)).ok());
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto tree = gen_random_tree(12, seed);
    CHECK(recognize(tree).verdict == Verdict::Yes);
  }
  CHECK(recognize(gen_jk(3)).verdict == Verdict::No);
  CHECK(recognize(BipartiteGraph(0, 0)).verdict == Verdict::Yes);
}

TEST_CASE("exhaustive search on tiny graphs") {
  CHECK(exhaustive_recognize_tiny(BipartiteGraph(1, 1, std::vector<Edge>{{0, 0}})).verdict == Verdict::Yes);
  CHECK(exhaustive_recognize_tiny(gen_even_cycle(4)).verdict == Verdict::Yes);
  CHECK(exhaustive_recognize_tiny(gen_path(5)).verdict == Verdict::Yes);
  CHECK_THROWS_AS(exhaustive_recognize_tiny(gen_even_cycle(6)), Error);
}

TEST_CASE("pruned search agrees with brute force on all tiny graphs") {
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; n + m <= 5; ++m)
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * m)); ++mask) {
        const auto g = oracle::from_mask(n, m, mask);
        const auto fast = recognize(g);
        const auto slow = exhaustive_recognize_tiny(g);
        CHECK(fast.verdict == slow.verdict);
        if (fast.verdict == Verdict::Yes) CHECK(validate_representation(*fast.representation, g).ok());
      }
}

TEST_CASE("pruning never loses a representation") {
  // Yes answers certify themselves; every No is rechecked over all origin
  // orders.
  std::mt19937_64 rng(8);
  int no = 0;
  for (int round = 0; round < 600 && no < 4; ++round) {
    const int n = 4 + round % 2, m = 5 - round % 2;
    const auto g = oracle::random_graph(n, m, 0.5, rng);
    const auto r = recognize(g);
    if (r.verdict == Verdict::Yes) {
      CHECK(validate_representation(*r.representation, g).ok());
      continue;
    }
    CHECK(r.verdict == Verdict::No);
    CHECK_FALSE(stick_by_permutations(g));
    ++no;
  }
  CHECK(no > 0);
}

TEST_CASE("budget and determinism") {
  const auto g = gen_jk(3);
  const auto starved = recognize(g, {5});
  CHECK(starved.verdict == Verdict::Unknown);
  CHECK(starved.nodes == 5);
  CHECK_THROWS_AS(recognize(g, {0}), Error);
  const auto t = gen_random_tree(12, 4);
  CHECK(recognize(t).representation == recognize(t).representation);
}

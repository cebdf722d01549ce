#include "stick/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace stick {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Distinct random positions strictly inside (lo, lo + width).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  Rng& rng() { return rng_; }

  Turn inside(Turn lo, Turn width) {
    constexpr int kSteps = 1'000'000;
    for (;;) {
      const Turn t{lo.ticks + width.ticks / kSteps * uniform(rng_, 1, kSteps - 1)};
      if (used_.insert(t.ticks).second) return t;
    }
  }

 private:
  Rng rng_;
  std::set<std::int64_t> used_;
};

bool crossing_graph_bipartite(const ChordFamily& fam) {
  const int k = static_cast<int>(fam.chords.size());
  std::vector<int> color(k, -1);
  for (int s = 0; s < k; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < k; ++y) {
        if (y == x || !chords_cross(fam.chords[x], fam.chords[y])) continue;
        if (color[y] == color[x]) return false;
        if (color[y] == -1) {
          color[y] = 1 - color[x];
          stack.push_back(y);
        }
      }
    }
  }
  return true;
}

}  // namespace

BipartiteGraph gen_path(int k) {
  if (k < 1) throw Error("a path needs at least one vertex");
  std::vector<Edge> edges;
  // Vertex v is A_{v/2} for even v and B_{v/2} for odd v.
  for (int v = 0; v + 1 < k; ++v) edges.emplace_back((v + 1) / 2, v / 2);
  return BipartiteGraph((k + 1) / 2, k / 2, edges);
}

BipartiteGraph gen_even_cycle(int vertices) {
  if (vertices < 4 || vertices % 2 != 0) throw Error("an even cycle needs an even number >= 4 of vertices");
  const int h = vertices / 2;
  std::vector<Edge> edges;
  for (int i = 0; i < h; ++i) {
    edges.emplace_back(i, i);
    edges.emplace_back((i + 1) % h, i);
  }
  return BipartiteGraph(h, h, edges);
}

BipartiteGraph gen_random_tree(int vertices, std::uint64_t seed) {
  if (vertices < 1) throw Error("a tree needs at least one vertex");
  Rng rng(seed);
  std::vector<Vertex> as(vertices);
  int n = 0, m = 0;
  std::vector<Edge> edges;
  as[0] = {Side::A, n++};
  for (int v = 1; v < vertices; ++v) {
    const Vertex parent = as[uniform(rng, 0, v - 1)];
    if (parent.side == Side::A) {
      as[v] = {Side::B, m++};
      edges.emplace_back(parent.index, as[v].index);
    } else {
      as[v] = {Side::A, n++};
      edges.emplace_back(as[v].index, parent.index);
    }
  }
  return BipartiteGraph(n, m, edges);
}

BipartiteGraph gen_jk(int k) {
  if (k < 3) throw Error("J_k needs k >= 3");
  const int size = 2 * k;
  std::vector<Edge> edges;
  for (int i = 0; i < size; ++i)
    for (int d : {0, 1, k}) edges.emplace_back(i, (i + d) % size);
  BipartiteGraph g(size, size, edges);

  for (int t = 0; t < size; ++t) {
    const int v = (t + 1) % size;
    const auto& nt = g.a_neighbors(t);
    const auto& nv = g.a_neighbors(v);
    std::vector<int> only_t, common;
    std::set_difference(nt.begin(), nt.end(), nv.begin(), nv.end(), std::back_inserter(only_t));
    std::set_intersection(nt.begin(), nt.end(), nv.begin(), nv.end(), std::back_inserter(common));
    std::vector<int> want_only{t, (t + k) % size};
    std::sort(want_only.begin(), want_only.end());
    if (only_t != want_only || common != std::vector<int>{(t + 1) % size})
      throw Error("J_k neighbourhood identities fail at t = " + std::to_string(t + 1));
  }
  return g;
}

BipartiteGraph gen_py2() {
  constexpr int kApexA = 0, kApexB = 0, kTopB = 5;
  auto a_i = [](int i) { return i; };        // A1..A4
  auto a_prime = [](int i) { return 4 + i; };  // A'1..A'4
  auto b_i = [](int i) { return i; };        // B1..B4
  std::vector<Edge> edges;
  for (int j = 0; j < 6; ++j) edges.emplace_back(kApexA, j);
  for (int i = 1; i < 9; ++i) edges.emplace_back(i, kApexB);
  for (int i = 1; i <= 4; ++i) {
    edges.emplace_back(a_i(i), kTopB);
    edges.emplace_back(a_i(i), b_i(i));
    edges.emplace_back(a_prime(i), b_i(i));
  }
  BipartiteGraph g(9, 6, edges);

  if (find_hole(g)) throw Error("Py2 reconstruction has a hole");
  std::vector<int> a_rest{1, 2, 3, 4, 5, 6, 7, 8}, b_rest{1, 2, 3, 4, 5};
  const BipartiteGraph rest = induced_subgraph(g, a_rest, b_rest);
  if (!is_forest(rest) || connected_components(rest).size() != 1)
    throw Error("Py2 without its apexes is not a tree");
  auto share = [&](Vertex x, Vertex y) {
    const auto& nx = g.neighbors(x);
    const auto& ny = g.neighbors(y);
    return std::find_first_of(nx.begin(), nx.end(), ny.begin(), ny.end()) != nx.end();
  };
  for (int x = 1; x <= 4; ++x)
    for (int y = x + 1; y <= 4; ++y)
      if (!share({Side::A, a_prime(x)}, {Side::A, a_prime(y)}) || !share({Side::B, b_i(x)}, {Side::B, b_i(y)}))
        throw Error("Py2 pair without a common neighbour");
  return g;
}

BipartiteGraph gen_random_interval_bigraph(int n, int m, std::uint64_t seed) {
  if (n < 0 || m < 0) throw Error("sizes must be non-negative");
  Rng rng(seed);
  std::vector<int> ends(2 * (n + m));
  for (std::size_t k = 0; k < ends.size(); ++k) ends[k] = static_cast<int>(k);
  std::shuffle(ends.begin(), ends.end(), rng);
  auto lo = [&](int v) { return std::min(ends[2 * v], ends[2 * v + 1]); };
  auto hi = [&](int v) { return std::max(ends[2 * v], ends[2 * v + 1]); };
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if (std::max(lo(i), lo(n + j)) <= std::min(hi(i), hi(n + j))) edges.emplace_back(i, j);
  return BipartiteGraph(n, m, edges);
}

BipartiteGraph gen_random_bipartite_permutation(int n, int m, std::uint64_t seed) {
  if (n < 0 || m < 0) throw Error("sizes must be non-negative");
  Rng rng(seed);
  // Slot k on a line holds an A-segment iff line[k]; segments of one side
  // keep their order on both lines.
  auto line = [&] {
    std::vector<bool> slots(n + m, false);
    std::fill(slots.begin(), slots.begin() + n, true);
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<int> a_at, b_at;
    for (int k = 0; k < n + m; ++k) (slots[k] ? a_at : b_at).push_back(k);
    return std::pair{a_at, b_at};
  };
  const auto [top_a, top_b] = line();
  const auto [bot_a, bot_b] = line();
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if ((top_a[i] < top_b[j]) != (bot_a[i] < bot_b[j])) edges.emplace_back(i, j);
  return BipartiteGraph(n, m, edges);
}

ArcFamily gen_random_arc_family(int s_count, int t_count, std::uint64_t seed) {
  Sampler sample(seed);
  const Turn quarter = Turn::fraction(1, 4);
  ArcFamily fam;
  for (int i = 0; i < s_count; ++i)
    fam.s_arcs.push_back({"s" + std::to_string(i + 1), sample.inside(Turn::fraction(1, 4), quarter),
                          sample.inside(Turn::fraction(3, 4), quarter)});
  for (int j = 0; j < t_count; ++j)
    fam.t_arcs.push_back({"t" + std::to_string(j + 1), sample.inside(Turn::fraction(3, 4), quarter),
                          sample.inside(Turn::fraction(1, 4), quarter)});
  return fam;
}

ChordFamily gen_random_chord_family(int count, std::uint64_t seed) {
  Sampler sample(seed);
  const Turn half = Turn::fraction(1, 2);
  ChordFamily fam;
  for (int c = 0; c < count; ++c) {
    Turn bottom = sample.inside({0}, half), top = sample.inside(half, half);
    if (uniform(sample.rng(), 0, 1)) std::swap(bottom, top);
    fam.chords.push_back({"c" + std::to_string(c + 1), bottom, top});
  }
  return fam;
}

ChordFamily gen_random_bipartite_chord_family(int count, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    ChordFamily fam = gen_random_chord_family(count, rng());
    if (crossing_graph_bipartite(fam)) return fam;
  }
  // Two classes of pairwise nested chords: within a class, bottoms rise
  // while tops fall, so no two chords of a class cross.
  Sampler sample(rng());
  const Turn half = Turn::fraction(1, 2);
  std::vector<Turn> bottoms, tops;
  for (int c = 0; c < count; ++c) {
    bottoms.push_back(sample.inside({0}, half));
    tops.push_back(sample.inside(half, half));
  }
  std::vector<int> cls(count);
  for (int& x : cls) x = uniform(sample.rng(), 0, 1);
  std::vector<std::pair<Turn, Turn>> chords;
  for (int k = 0; k < 2; ++k) {
    std::vector<Turn> bs, ts;
    for (int c = 0; c < count; ++c)
      if (cls[c] == k) {
        bs.push_back(bottoms[c]);
        ts.push_back(tops[c]);
      }
    std::sort(bs.begin(), bs.end());
    std::sort(ts.rbegin(), ts.rend());
    for (std::size_t x = 0; x < bs.size(); ++x) chords.emplace_back(bs[x], ts[x]);
  }
  std::shuffle(chords.begin(), chords.end(), sample.rng());
  ChordFamily fam;
  for (int c = 0; c < count; ++c) fam.chords.push_back({"c" + std::to_string(c + 1), chords[c].first, chords[c].second});
  return fam;
}

}  // namespace stick

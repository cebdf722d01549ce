#include "stick/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>

namespace stick {

std::string to_string(Vertex v) {
  return (v.side == Side::A ? "A" : "B") + std::to_string(v.index + 1);
}

BipartiteGraph::BipartiteGraph(int a_count, int b_count) : BipartiteGraph(a_count, b_count, {}) {}

BipartiteGraph::BipartiteGraph(int a_count, int b_count, std::span<const Edge> edges)
    : a_count_(a_count), b_count_(b_count) {
  if (a_count < 0 || b_count < 0) throw Error("negative side size");
  matrix_.assign(static_cast<std::size_t>(a_count) * b_count, 0);
  a_adj_.resize(a_count);
  b_adj_.resize(b_count);
  for (auto [a, b] : edges) {
    if (a < 0 || a >= a_count || b < 0 || b >= b_count) {
      throw Error("edge (" + std::to_string(a + 1) + ", " + std::to_string(b + 1) +
                  ") out of range");
    }
    char& cell = matrix_[static_cast<std::size_t>(a) * b_count + b];
    if (cell) continue;
    cell = 1;
    ++edge_count_;
    a_adj_[a].push_back(b);
    b_adj_[b].push_back(a);
  }
  for (auto& l : a_adj_) std::sort(l.begin(), l.end());
  for (auto& l : b_adj_) std::sort(l.begin(), l.end());
}

bool BipartiteGraph::adjacent(Vertex u, Vertex w) const {
  if (u.side == w.side) return false;
  if (u.side == Side::B) std::swap(u, w);
  return adjacent(u.index, w.index);
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int a = 0; a < a_count_; ++a)
    for (int b : a_adj_[a]) out.emplace_back(a, b);
  return out;
}

BipartiteGraph BipartiteGraph::swapped_sides() const {
  std::vector<Edge> flipped;
  flipped.reserve(edge_count_);
  for (auto [a, b] : edges()) flipped.emplace_back(b, a);
  return BipartiteGraph(b_count_, a_count_, flipped);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_count(std::string_view tok, int line_no) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     std::string(tok) + "'");
  }
  return value;
}

}  // namespace

BipartiteGraph parse_graph(std::string_view text, std::vector<std::string>* warnings) {
  std::optional<std::pair<int, int>> sizes;
  std::vector<Edge> edges;
  std::vector<char> seen;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0].front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (toks[0] == "p") {
      if (sizes) throw ParseError(where + "duplicate header");
      if (toks.size() != 4 || toks[1] != "stick")
        throw ParseError(where + "header must be 'p stick <n> <m>'");
      long n = parse_count(toks[2], line_no);
      long m = parse_count(toks[3], line_no);
      if (n > 1'000'000 || m > 1'000'000 || n * m > 100'000'000)
        throw ParseError(where + "graph too large");
      sizes = {static_cast<int>(n), static_cast<int>(m)};
      seen.assign(static_cast<std::size_t>(n * m), 0);
    } else if (toks[0] == "e") {
      if (!sizes) throw ParseError(where + "edge before header");
      if (toks.size() != 3) throw ParseError(where + "edge must be 'e <i> <j>'");
      long i = parse_count(toks[1], line_no);
      long j = parse_count(toks[2], line_no);
      if (i < 1 || i > sizes->first)
        throw ParseError(where + "A-index " + std::to_string(i) + " out of range");
      if (j < 1 || j > sizes->second)
        throw ParseError(where + "B-index " + std::to_string(j) + " out of range");
      char& s = seen[static_cast<std::size_t>((i - 1) * sizes->second + (j - 1))];
      if (s) {
        if (warnings) warnings->push_back(where + "duplicate edge " + std::to_string(i) + " " +
                                          std::to_string(j) + " ignored");
      } else {
        s = 1;
        edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1));
      }
    } else {
      throw ParseError(where + "unknown line type '" + std::string(toks[0]) + "'");
    }
    if (end == text.size()) break;
  }
  if (!sizes) throw ParseError("missing 'p stick <n> <m>' header");
  return BipartiteGraph(sizes->first, sizes->second, edges);
}

std::string format_graph(const BipartiteGraph& g, std::span<const std::string> comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "p stick " << g.a_count() << ' ' << g.b_count() << '\n';
  for (auto [a, b] : g.edges()) out << "e " << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

std::optional<Hole> find_hole(const BipartiteGraph& g) {
  // For every induced path x - c - y, look for a shortest x..y path avoiding
  // N[c] and the common neighbours of x and y. Such a path has length >= 4
  // and closes an induced cycle through c of length >= 6. Every hole
  // contains such a configuration, so the search is complete.
  const int total = g.vertex_count();
  std::vector<char> blocked(total);
  std::vector<int> parent(total);
  for (int c = 0; c < total; ++c) {
    const Vertex cv = g.vertex(c);
    const auto& nc = g.neighbors(cv);
    const Side outer = opposite(cv.side);
    for (std::size_t ix = 0; ix < nc.size(); ++ix) {
      for (std::size_t iy = ix + 1; iy < nc.size(); ++iy) {
        const int x = g.id({outer, nc[ix]});
        const int y = g.id({outer, nc[iy]});
        std::fill(blocked.begin(), blocked.end(), 0);
        blocked[c] = 1;
        for (int w : nc) blocked[g.id({outer, w})] = 1;
        blocked[x] = blocked[y] = 0;
        for (int w : g.neighbors({outer, nc[ix]}))
          if (g.adjacent(Vertex{outer, nc[iy]}, Vertex{cv.side, w})) blocked[g.id({cv.side, w})] = 1;

        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> queue{x};
        parent[x] = x;
        while (!queue.empty() && parent[y] < 0) {
          const int u = queue.front();
          queue.pop_front();
          const Vertex uv = g.vertex(u);
          for (int w : g.neighbors(uv)) {
            const int wid = g.id({opposite(uv.side), w});
            if (blocked[wid] || parent[wid] >= 0) continue;
            parent[wid] = u;
            queue.push_back(wid);
          }
        }
        if (parent[y] < 0) continue;

        std::vector<Vertex> cycle{cv};
        for (int u = y; u != x; u = parent[u]) cycle.push_back(g.vertex(u));
        cycle.push_back(g.vertex(x));
        if (cycle.front().side != Side::A) std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
        return Hole{std::move(cycle)};
      }
    }
  }
  return std::nullopt;
}

std::vector<std::vector<Vertex>> connected_components(const BipartiteGraph& g) {
  const int total = g.vertex_count();
  std::vector<char> seen(total);
  std::vector<std::vector<Vertex>> out;
  for (int s = 0; s < total; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      const Vertex uv = g.vertex(u);
      comp.push_back(uv);
      for (int w : g.neighbors(uv)) {
        const int wid = g.id({opposite(uv.side), w});
        if (!seen[wid]) {
          seen[wid] = 1;
          stack.push_back(wid);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

BipartiteGraph bipartite_complement(const BipartiteGraph& g) {
  std::vector<Edge> edges;
  for (int a = 0; a < g.a_count(); ++a)
    for (int b = 0; b < g.b_count(); ++b)
      if (!g.adjacent(a, b)) edges.emplace_back(a, b);
  return BipartiteGraph(g.a_count(), g.b_count(), edges);
}

bool is_forest(const BipartiteGraph& g) {
  return g.edge_count() + connected_components(g).size() == static_cast<std::size_t>(g.vertex_count());
}

BipartiteGraph induced_subgraph(const BipartiteGraph& g, std::span<const int> a_keep,
                                std::span<const int> b_keep) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a_keep.size(); ++i)
    for (std::size_t j = 0; j < b_keep.size(); ++j)
      if (g.adjacent(a_keep[i], b_keep[j])) edges.emplace_back(int(i), int(j));
  return BipartiteGraph(static_cast<int>(a_keep.size()), static_cast<int>(b_keep.size()), edges);
}

}  // namespace stick

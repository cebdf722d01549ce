#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stick {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (graph, representation, arc or chord files).
class ParseError : public Error {
 public:
  using Error::Error;
};

enum class Side { A, B };

constexpr Side opposite(Side s) { return s == Side::A ? Side::B : Side::A; }

/// A vertex of a bipartite graph. Indices are 0-based; the text formats
/// use 1-based indices.
struct Vertex {
  Side side = Side::A;
  int index = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// "A3" / "B1" (1-based).
std::string to_string(Vertex v);

using Edge = std::pair<int, int>;  // (A-index, B-index), 0-based

/// Bipartite graph with sides A (size n) and B (size m). Edges only join an
/// A-vertex to a B-vertex. Immutable once constructed.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int a_count, int b_count);
  /// Duplicate edges are merged. Throws Error on out-of-range indices.
  BipartiteGraph(int a_count, int b_count, std::span<const Edge> edges);

  int a_count() const { return a_count_; }
  int b_count() const { return b_count_; }
  int vertex_count() const { return a_count_ + b_count_; }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(int a, int b) const {
    return matrix_[static_cast<std::size_t>(a) * b_count_ + b] != 0;
  }
  bool adjacent(Vertex u, Vertex w) const;

  /// Sorted neighbour lists.
  const std::vector<int>& a_neighbors(int a) const { return a_adj_[a]; }
  const std::vector<int>& b_neighbors(int b) const { return b_adj_[b]; }
  const std::vector<int>& neighbors(Vertex v) const {
    return v.side == Side::A ? a_adj_[v.index] : b_adj_[v.index];
  }

  /// Edges sorted by (a, b).
  std::vector<Edge> edges() const;

  /// The same graph with the roles of A and B exchanged.
  BipartiteGraph swapped_sides() const;

  /// Dense vertex id: A-vertices first, then B-vertices.
  int id(Vertex v) const { return v.side == Side::A ? v.index : a_count_ + v.index; }
  Vertex vertex(int id) const {
    return id < a_count_ ? Vertex{Side::A, id} : Vertex{Side::B, id - a_count_};
  }

  friend bool operator==(const BipartiteGraph& x, const BipartiteGraph& y) {
    return x.a_count_ == y.a_count_ && x.b_count_ == y.b_count_ && x.matrix_ == y.matrix_;
  }

 private:
  int a_count_ = 0;
  int b_count_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<char> matrix_;
  std::vector<std::vector<int>> a_adj_;
  std::vector<std::vector<int>> b_adj_;
};

/// Induced cycle of length >= 6, listed in cyclic order starting on side A.
struct Hole {
  std::vector<Vertex> vertices;
};

/// Parses the line-oriented graph format:
///
///     # comment
///     p stick <n> <m>
///     e <i> <j>
///
/// Duplicate edges are dropped; a message is appended to `warnings` when it
/// is non-null. Throws ParseError on anything else that is malformed.
BipartiteGraph parse_graph(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// Inverse of parse_graph. `comments` are emitted as leading `#` lines.
std::string format_graph(const BipartiteGraph& g, std::span<const std::string> comments = {});

/// Some induced cycle with at least six vertices, if one exists.
std::optional<Hole> find_hole(const BipartiteGraph& g);

/// Connected components; each component is sorted, components are ordered by
/// their smallest vertex (A-vertices before B-vertices).
std::vector<std::vector<Vertex>> connected_components(const BipartiteGraph& g);

/// (i, j) is an edge of the result iff it is not an edge of g.
BipartiteGraph bipartite_complement(const BipartiteGraph& g);

/// True iff the graph has no cycle at all.
bool is_forest(const BipartiteGraph& g);

/// Subgraph induced by the listed vertices, renumbered in the given order
/// within each side.
BipartiteGraph induced_subgraph(const BipartiteGraph& g, std::span<const int> a_keep,
                                std::span<const int> b_keep);

}  // namespace stick

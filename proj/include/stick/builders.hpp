#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stick/graph.hpp"
#include "stick/representation.hpp"
#include "stick/turn.hpp"

namespace stick {

// Circular-arc families in two-clique form.
//
// Positions are turns measured clockwise from the top point p = 0, with
// r = 1/4, q = 1/2, s = 3/4. An arc runs clockwise from `start` to `end`.
// Every S-arc covers s and q and misses p and r; every T-arc covers p and r
// and misses s and q.

struct Arc {
  std::string id;
  Turn start, end;
};

struct ArcFamily {
  std::vector<Arc> s_arcs;  // become A_1, A_2, ...
  std::vector<Arc> t_arcs;  // become B_1, B_2, ...
};

/// Clockwise from `a.start` to `a.end`, endpoints included.
bool arc_contains(const Arc& a, Turn x);

/// Problems with the family, one message per offending arc; empty when valid.
std::vector<std::string> validate_arc_family(const ArcFamily& fam);

struct Built {
  BipartiteGraph graph;
  StickRepresentation representation;
};

/// Input rejected by a builder.
class BuildError : public Error {
 public:
  using Error::Error;
};

/// A_i B_j is an edge iff S_i and T_j are disjoint. Throws BuildError when
/// the family is invalid.
Built arcs_to_stick(const ArcFamily& fam);

// Chord families crossing a horizontal line.
//
// Positions are turns clockwise from the rightmost point q = 0, with the
// leftmost point p = 1/2. The bottom half is (0, 1/2), the top half (1/2, 1).
// Every chord has one endpoint in each half.

struct Chord {
  std::string id;
  Turn e1, e2;
};

struct ChordFamily {
  std::vector<Chord> chords;
};

std::vector<std::string> validate_chord_family(const ChordFamily& fam);

/// Endpoints interleave around the circle.
bool chords_cross(const Chord& x, const Chord& y);

struct BuiltChords {
  BipartiteGraph graph;
  StickRepresentation representation;
  /// For each chord of the input: the vertex it became.
  std::vector<Vertex> vertex_of;
};

/// Two-colours the crossing graph and unfolds the circle at q. Throws
/// BuildError when the family is invalid, the crossing graph is not
/// bipartite, or a crossing pair breaks the expected cyclic order.
BuiltChords chords_to_stick(const ChordFamily& fam);

/// Lines `S <id> <start> <end>` and `T <id> <start> <end>`; `#` comments.
ArcFamily parse_arc_family(std::string_view text);
std::string format_arc_family(const ArcFamily& fam);

/// Lines `c <id> <e1> <e2>`; `#` comments.
ChordFamily parse_chord_family(std::string_view text);
std::string format_chord_family(const ChordFamily& fam);

}  // namespace stick

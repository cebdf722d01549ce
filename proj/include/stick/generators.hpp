#pragma once

#include <cstdint>

#include "stick/builders.hpp"
#include "stick/graph.hpp"

namespace stick {

// Named graphs and seeded random instances. Every random generator is a
// pure function of its arguments.

/// Path on k >= 1 vertices starting at A_1: A1 B1 A2 B2 ...
BipartiteGraph gen_path(int k);

/// Cycle on `vertices` (even, >= 4) vertices: A_i B_i and A_{i+1} B_i.
BipartiteGraph gen_even_cycle(int vertices);

/// Random recursive tree on `vertices` >= 1 vertices; sides by depth parity.
BipartiteGraph gen_random_tree(int vertices, std::uint64_t seed);

/// A_i B_i, A_i B_{i+1}, A_i B_{i+k} (indices mod 2k), k >= 3. Checks the
/// neighbourhood identities of every consecutive pair and throws Error if
/// they fail.
BipartiteGraph gen_jk(int k);

/// The 2-pyramid on 9 + 6 vertices. Numbering: A_1 is the apex A0, A_2..A_5
/// are A1..A4, A_6..A_9 are A'1..A'4; B_1 is the apex B0, B_2..B_6 are
/// B1..B5. Checks its structural properties and throws Error if one fails.
BipartiteGraph gen_py2();

/// Edge iff the two random closed intervals intersect.
BipartiteGraph gen_random_interval_bigraph(int n, int m, std::uint64_t seed);

/// Segments between two parallel lines; A-segments are pairwise parallel, as
/// are B-segments. Edge iff an A-segment crosses a B-segment.
BipartiteGraph gen_random_bipartite_permutation(int n, int m, std::uint64_t seed);

ArcFamily gen_random_arc_family(int s_count, int t_count, std::uint64_t seed);

/// Chords crossing the line, no further structure.
ChordFamily gen_random_chord_family(int count, std::uint64_t seed);

/// Chords crossing the line whose crossing graph is bipartite. Rejection
/// samples first and falls back to two nested chord sequences.
ChordFamily gen_random_bipartite_chord_family(int count, std::uint64_t seed);

}  // namespace stick

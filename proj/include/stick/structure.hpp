#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "stick/graph.hpp"
#include "stick/representation.hpp"

namespace stick {

// Local structure of a pair of A-vertices.
//
// Every function here takes the pair as (v, t) in that order, and the roles
// are NOT symmetric: for the pair (v, t)
//
//     b1 = N(A_t) \ N(A_v)   exclusive neighbours of t
//     b2 = N(A_v) & N(A_t)   common neighbours
//     b3 = N(A_v) \ N(A_t)   exclusive neighbours of v
//
// Functions that look at a representation additionally require the tip of
// A_v to precede the tip of A_t.

/// A set of B-indices, sorted.
using BSet = std::vector<int>;

struct NeighborhoodPartition {
  BSet b1, b2, b3;

  /// Part 1, 2 or 3.
  const BSet& part(int i) const;
};

/// Throws Error when v == t.
NeighborhoodPartition partition_neighborhoods(const BipartiteGraph& g, int v, int t);

/// Subset w of {1,2,3}: i is in w iff N(A_s) meets part i.
class MateClass {
 public:
  MateClass() = default;
  explicit MateClass(unsigned mask) : mask_(mask & 7u) {}
  static MateClass of(std::initializer_list<int> parts);

  bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  bool empty() const { return mask_ == 0; }
  unsigned mask() const { return mask_; }

  /// "13", "123", "" for the empty class.
  std::string word() const;

  friend bool operator==(const MateClass&, const MateClass&) = default;

 private:
  unsigned mask_ = 0;
};

/// Class of A_s with respect to the partition of (v, t). Throws Error when
/// s is v or t.
MateClass mate_class(const BipartiteGraph& g, int v, int t, int s);

/// Same, without the s not in {v, t} restriction.
MateClass mate_class(const BipartiteGraph& g, const NeighborhoodPartition& part, int s);

/// (N(A_p) \ N(A_q)) and (N(A_q) \ N(A_p)) both meet part i. Throws Error if
/// p or q is in {v, t}, p == q, or i is not in both mate classes.
bool overlapping_mates(const BipartiteGraph& g, int v, int t, int p, int q, int i);

/// Same test without precondition checks.
bool overlapping_in_part(const BipartiteGraph& g, const NeighborhoodPartition& part, int p, int q, int i);

// Configurations.

enum class ConfigurationKind { C1, C2, C2Prime };
std::string to_string(ConfigurationKind k);

enum class Region { R0, R1, R2, R3 };
std::string to_string(Region r);

struct RegionEntry {
  Event event;
  Region region;
};

struct Configuration {
  ConfigurationKind kind = ConfigurationKind::C1;
  /// Anchor events left to right (T(a_v) first).
  std::array<Event, 4> boundaries{};
  /// Every origin and tip of N(A_v) u N(A_t), and the origin of every
  /// partner, in line order.
  std::vector<RegionEntry> region_of;
  /// Split of b3 by position; beta3_3 is empty outside C2.
  BSet beta3_1, beta3_2, beta3_3;
  NeighborhoodPartition partition;
  /// Partners of the pair: s not in {v, t}, T(a_s) before T(a_t), and a
  /// common neighbour with A_v or A_t. Ascending.
  std::vector<int> partners;

  std::optional<Region> region(Event e) const;
};

/// Misuse of a representation-level analysis (invalid representation or
/// tips of the pair in the wrong order).
class AnalysisError : public Error {
 public:
  using Error::Error;
};

/// Kind, anchors, region map and b3 split for the pair (v, t).
Configuration classify_configuration(const StickRepresentation& rep, const BipartiteGraph& g, int v, int t);

/// Region boundaries derived from anchor positions: index of the region
/// containing line position `p` (which must differ from every anchor).
Region region_at(const Configuration& c, const EventPositions& pos, int p);

/// Problems with the region map against the configuration's row of the
/// configuration table; empty when it conforms.
std::vector<std::string> table1_violations(const Configuration& c, const EventPositions& pos);

// Partner placement table.

enum class Condition {
  Beta31NonEmpty,         // beta3^1 != {}
  Beta3112NonEmpty,       // beta3^1 u beta3^2 != {}
  Beta2Empty,             // beta2 == {}
  Beta31BeforeTip,        // beta3^1 == {} or beta3^1 < T(a_s) < T(a_t)
  Beta3112BeforeTip,      // (beta3^1 u beta3^2) == {} or ... < T(a_s) < T(a_t)
  CoversBeta2,            // N_w(a_s) contains beta2
};
std::string to_string(Condition c);

struct PlacementRule {
  Region region;
  std::vector<Condition> conditions;  // conjunction; empty = unconditional
};

/// Allowed regions for a B_w-partner in configuration C1 or C2. Empty for
/// classes with no row. C2' uses the C2 rows.
const std::vector<PlacementRule>& placement_rules(MateClass w, ConfigurationKind kind);

struct PartnerCheck {
  int partner = 0;
  MateClass w;
  Region region = Region::R0;          // actual position
  std::vector<Region> equivalent;      // regions reachable without crossing a neighbourhood event
  std::optional<Region> accepted;      // region whose rule matched
  bool placement_ok = false;
  std::vector<std::string> notes;
};

struct PairCheck {
  int p = 0, q = 0;
  Region region = Region::R0;
  bool ok = false;
};

struct Table2Report {
  Configuration configuration;
  std::vector<PartnerCheck> partners;
  std::vector<PairCheck> pairs;
  bool ok() const;
};

/// Checks every partner of (v, t) against the placement table, and every two
/// partners sharing a region against the mutual-inclusion property.
Table2Report check_table2(const StickRepresentation& rep, const BipartiteGraph& g, int v, int t);

struct ForbiddenPairHit {
  int v = 0, t = 0, p = 0, q = 0;
  char rule = 'a';  // 'a': B1-overlapping {13,1}; 'b': B2-overlapping {123,12}
};

struct ForbiddenPairsReport {
  int pairs_checked = 0;
  std::vector<ForbiddenPairHit> hits;
  bool ok() const { return hits.empty(); }
};

/// For every pair with T(a_v) < T(a_t) and b2 non-empty, looks for two
/// partners forming one of the forbidden patterns.
ForbiddenPairsReport check_forbidden_pairs(const StickRepresentation& rep, const BipartiteGraph& g);

}  // namespace stick

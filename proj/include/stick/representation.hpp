#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stick/graph.hpp"

namespace stick {

// Flat Stick representations.
//
// The ground line is read left to right. An A-vertex a owns the interval
// [T(a), a] (tip first, origin last); a B-vertex b owns [b, T(b)] (origin
// first, tip last). A_i and B_j intersect iff T(a_i) < b_j < a_i < T(b_j).
// Representations are purely ordinal: a sequence of events, never
// coordinates.

enum class EventKind { ATip, AOrigin, BOrigin, BTip };

struct Event {
  EventKind kind = EventKind::ATip;
  int vertex = 0;  // 0-based index on the event's side

  Side side() const {
    return kind == EventKind::ATip || kind == EventKind::AOrigin ? Side::A : Side::B;
  }
  bool is_tip() const { return kind == EventKind::ATip || kind == EventKind::BTip; }
  bool is_origin() const { return !is_tip(); }

  static Event a_tip(int i) { return {EventKind::ATip, i}; }
  static Event a_origin(int i) { return {EventKind::AOrigin, i}; }
  static Event b_origin(int j) { return {EventKind::BOrigin, j}; }
  static Event b_tip(int j) { return {EventKind::BTip, j}; }

  friend bool operator==(const Event&, const Event&) = default;
  friend auto operator<=>(const Event&, const Event&) = default;
};

/// Token form: TA3, A3, B2, TB2 (1-based).
std::string to_string(Event e);

/// An event sequence. Construction does not check well-formedness; use
/// well_formedness_violations() or EventPositions for that.
class StickRepresentation {
 public:
  StickRepresentation() = default;
  explicit StickRepresentation(std::vector<Event> events) : events_(std::move(events)) {}

  std::span<const Event> events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }
  const Event& operator[](std::size_t k) const { return events_[k]; }

  friend bool operator==(const StickRepresentation&, const StickRepresentation&) = default;

 private:
  std::vector<Event> events_;
};

/// Malformed representation (missing, duplicate or misordered events).
class RepresentationError : public Error {
 public:
  using Error::Error;
};

/// Position lookup for a well-formed representation. Throws
/// RepresentationError when the sequence is not well formed.
class EventPositions {
 public:
  explicit EventPositions(const StickRepresentation& rep);

  int a_count() const { return static_cast<int>(a_origin_.size()); }
  int b_count() const { return static_cast<int>(b_origin_.size()); }

  int a_tip(int i) const { return a_tip_.at(i); }
  int a_origin(int i) const { return a_origin_.at(i); }
  int b_origin(int j) const { return b_origin_.at(j); }
  int b_tip(int j) const { return b_tip_.at(j); }
  int of(Event e) const;

  /// T(a_i) < b_j < a_i < T(b_j). Throws on unknown vertices.
  bool overlaps(int i, int j) const;

 private:
  std::vector<int> a_tip_, a_origin_, b_origin_, b_tip_;
};

/// Well-formedness problems, empty when the sequence is well formed. With
/// explicit sizes, the vertex set must be exactly A_1..A_n and B_1..B_m;
/// otherwise indices must be contiguous from 1 on each side.
std::vector<std::string> well_formedness_violations(const StickRepresentation& rep,
                                                    std::optional<int> a_count = std::nullopt,
                                                    std::optional<int> b_count = std::nullopt);

/// T(a_i) < b_j < a_i < T(b_j) in `rep`. Throws RepresentationError for
/// unknown vertices or malformed input.
bool overlaps(const StickRepresentation& rep, int i, int j);

struct Violation {
  enum class Kind { Malformed, SpuriousOverlap, MissingOverlap };
  Kind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks well-formedness for exactly the vertices of g, then that the
/// overlap pattern holds precisely on the edges of g. Lists every violation.
ValidationReport validate_representation(const StickRepresentation& rep, const BipartiteGraph& g);

/// The graph whose edges are the overlapping pairs of `rep`.
BipartiteGraph induced_graph(const StickRepresentation& rep);

/// Reverse the line and exchange the roles of A and B. Maps representations
/// of g onto representations of g.swapped_sides().
StickRepresentation reversed_and_swapped(const StickRepresentation& rep);

/// Whitespace separated tokens. Throws ParseError on unknown tokens and on
/// duplicate or missing events.
StickRepresentation parse_representation(std::string_view text);
std::string format_representation(const StickRepresentation& rep);

// Drawing.

enum class RenderStyle { Flat, Slope };

struct Segment {
  Vertex vertex;
  double x1, y1, x2, y2;
};

/// Geometry of the classical drawing: the k-th event sits at ground-line
/// point (k, k) in screen coordinates (y grows downward, so the ground line
/// has slope -1 on screen). A-segments rise vertically from their origin to
/// the height of their tip; B-segments run horizontally to the abscissa of
/// their tip.
std::vector<Segment> slope_layout(const StickRepresentation& rep);

/// Deterministic SVG document. Throws RepresentationError when malformed.
std::string render_svg(const StickRepresentation& rep, RenderStyle style);

}  // namespace stick

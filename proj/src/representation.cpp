#include "stick/representation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace stick {

std::string to_string(Event e) {
  const std::string idx = std::to_string(e.vertex + 1);
  switch (e.kind) {
    case EventKind::ATip: return "TA" + idx;
    case EventKind::AOrigin: return "A" + idx;
    case EventKind::BOrigin: return "B" + idx;
    case EventKind::BTip: return "TB" + idx;
  }
  return "?";
}

namespace {

struct SideSlots {
  std::map<int, int> tip, origin;  // vertex -> position
  std::vector<std::string> duplicates;
};

}  // namespace

std::vector<std::string> well_formedness_violations(const StickRepresentation& rep,
                                                    std::optional<int> a_count,
                                                    std::optional<int> b_count) {
  std::vector<std::string> out;
  SideSlots a, b;
  for (std::size_t k = 0; k < rep.size(); ++k) {
    const Event e = rep[k];
    if (e.vertex < 0) {
      out.push_back("event " + std::to_string(k + 1) + " has a negative index");
      continue;
    }
    SideSlots& s = e.side() == Side::A ? a : b;
    auto& slot = e.is_tip() ? s.tip : s.origin;
    if (!slot.emplace(e.vertex, static_cast<int>(k)).second) out.push_back("duplicate event " + to_string(e));
  }

  auto check_side = [&](SideSlots& s, Side side, std::optional<int> expected) {
    const bool is_a = side == Side::A;
    int count = 0;
    for (auto& [v, p] : s.tip) count = std::max(count, v + 1);
    for (auto& [v, p] : s.origin) count = std::max(count, v + 1);
    if (expected) {
      for (auto& [v, p] : s.tip)
        if (v >= *expected) out.push_back("unknown vertex in event " + to_string(Event{is_a ? EventKind::ATip : EventKind::BTip, v}));
      for (auto& [v, p] : s.origin)
        if (v >= *expected) out.push_back("unknown vertex in event " + to_string(Event{is_a ? EventKind::AOrigin : EventKind::BOrigin, v}));
      count = *expected;
    }
    for (int v = 0; v < count; ++v) {
      const Event tip{is_a ? EventKind::ATip : EventKind::BTip, v};
      const Event origin{is_a ? EventKind::AOrigin : EventKind::BOrigin, v};
      auto t = s.tip.find(v);
      auto o = s.origin.find(v);
      if (t == s.tip.end()) out.push_back("missing event " + to_string(tip));
      if (o == s.origin.end()) out.push_back("missing event " + to_string(origin));
      if (t == s.tip.end() || o == s.origin.end()) continue;
      if (is_a && t->second > o->second)
        out.push_back("tip " + to_string(tip) + " must precede origin " + to_string(origin));
      if (!is_a && t->second < o->second)
        out.push_back("origin " + to_string(origin) + " must precede tip " + to_string(tip));
    }
  };
  check_side(a, Side::A, a_count);
  check_side(b, Side::B, b_count);
  return out;
}

EventPositions::EventPositions(const StickRepresentation& rep) {
  auto problems = well_formedness_violations(rep);
  if (!problems.empty()) throw RepresentationError("malformed representation: " + problems.front());
  int n = 0, m = 0;
  for (const Event& e : rep.events()) {
    int& count = e.side() == Side::A ? n : m;
    count = std::max(count, e.vertex + 1);
  }
  a_tip_.assign(n, -1);
  a_origin_.assign(n, -1);
  b_origin_.assign(m, -1);
  b_tip_.assign(m, -1);
  for (std::size_t k = 0; k < rep.size(); ++k) {
    const Event e = rep[k];
    const int p = static_cast<int>(k);
    switch (e.kind) {
      case EventKind::ATip: a_tip_[e.vertex] = p; break;
      case EventKind::AOrigin: a_origin_[e.vertex] = p; break;
      case EventKind::BOrigin: b_origin_[e.vertex] = p; break;
      case EventKind::BTip: b_tip_[e.vertex] = p; break;
    }
  }
}

int EventPositions::of(Event e) const {
  switch (e.kind) {
    case EventKind::ATip: return a_tip_.at(e.vertex);
    case EventKind::AOrigin: return a_origin_.at(e.vertex);
    case EventKind::BOrigin: return b_origin_.at(e.vertex);
    case EventKind::BTip: return b_tip_.at(e.vertex);
  }
  return -1;
}

bool EventPositions::overlaps(int i, int j) const {
  if (i < 0 || i >= a_count()) throw RepresentationError("unknown vertex A" + std::to_string(i + 1));
  if (j < 0 || j >= b_count()) throw RepresentationError("unknown vertex B" + std::to_string(j + 1));
  return a_tip_[i] < b_origin_[j] && b_origin_[j] < a_origin_[i] && a_origin_[i] < b_tip_[j];
}

bool overlaps(const StickRepresentation& rep, int i, int j) { return EventPositions(rep).overlaps(i, j); }

ValidationReport validate_representation(const StickRepresentation& rep, const BipartiteGraph& g) {
  ValidationReport report;
  for (auto& msg : well_formedness_violations(rep, g.a_count(), g.b_count()))
    report.violations.push_back({Violation::Kind::Malformed, std::move(msg)});
  if (!report.ok()) return report;

  const EventPositions pos(rep);
  for (int i = 0; i < g.a_count(); ++i) {
    for (int j = 0; j < g.b_count(); ++j) {
      const bool over = pos.overlaps(i, j);
      const bool edge = g.adjacent(i, j);
      const std::string pair = "(A" + std::to_string(i + 1) + ", B" + std::to_string(j + 1) + ")";
      if (over && !edge)
        report.violations.push_back({Violation::Kind::SpuriousOverlap, pair + " overlaps but is a non-edge"});
      else if (!over && edge)
        report.violations.push_back({Violation::Kind::MissingOverlap, pair + " is an edge but does not overlap"});
    }
  }
  return report;
}

BipartiteGraph induced_graph(const StickRepresentation& rep) {
  const EventPositions pos(rep);
  std::vector<Edge> edges;
  for (int i = 0; i < pos.a_count(); ++i)
    for (int j = 0; j < pos.b_count(); ++j)
      if (pos.overlaps(i, j)) edges.emplace_back(i, j);
  return BipartiteGraph(pos.a_count(), pos.b_count(), edges);
}

StickRepresentation reversed_and_swapped(const StickRepresentation& rep) {
  std::vector<Event> out;
  out.reserve(rep.size());
  for (auto it = rep.events().rbegin(); it != rep.events().rend(); ++it) {
    EventKind k{};
    switch (it->kind) {
      case EventKind::ATip: k = EventKind::BTip; break;
      case EventKind::AOrigin: k = EventKind::BOrigin; break;
      case EventKind::BOrigin: k = EventKind::AOrigin; break;
      case EventKind::BTip: k = EventKind::ATip; break;
    }
    out.push_back({k, it->vertex});
  }
  return StickRepresentation(std::move(out));
}

StickRepresentation parse_representation(std::string_view text) {
  std::vector<Event> events;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::string_view t = tok;
    EventKind kind{};
    if (t.starts_with("TA")) {
      kind = EventKind::ATip;
      t.remove_prefix(2);
    } else if (t.starts_with("TB")) {
      kind = EventKind::BTip;
      t.remove_prefix(2);
    } else if (t.starts_with("A")) {
      kind = EventKind::AOrigin;
      t.remove_prefix(1);
    } else if (t.starts_with("B")) {
      kind = EventKind::BOrigin;
      t.remove_prefix(1);
    } else {
      throw ParseError("unknown token '" + tok + "'");
    }
    int idx = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), idx);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || idx < 1)
      throw ParseError("bad index in token '" + tok + "'");
    events.push_back({kind, idx - 1});
  }
  StickRepresentation rep(std::move(events));
  auto problems = well_formedness_violations(rep);
  if (!problems.empty()) throw ParseError(problems.front());
  return rep;
}

std::string format_representation(const StickRepresentation& rep) {
  std::string out;
  for (const Event& e : rep.events()) {
    if (!out.empty()) out += ' ';
    out += to_string(e);
  }
  return out;
}

}  // namespace stick

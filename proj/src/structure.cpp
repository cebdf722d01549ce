#include "stick/structure.hpp"

#include <algorithm>

namespace stick {

namespace {

void require_a(const BipartiteGraph& g, int i, const char* what) {
  if (i < 0 || i >= g.a_count()) throw Error(std::string(what) + " is not an A-vertex: " + std::to_string(i + 1));
}

}  // namespace

const BSet& NeighborhoodPartition::part(int i) const {
  switch (i) {
    case 1: return b1;
    case 2: return b2;
    case 3: return b3;
  }
  throw Error("part index must be 1, 2 or 3");
}

NeighborhoodPartition partition_neighborhoods(const BipartiteGraph& g, int v, int t) {
  require_a(g, v, "v");
  require_a(g, t, "t");
  if (v == t) throw Error("partition_neighborhoods needs two distinct vertices");
  const auto& nv = g.a_neighbors(v);
  const auto& nt = g.a_neighbors(t);
  NeighborhoodPartition p;
  std::set_difference(nt.begin(), nt.end(), nv.begin(), nv.end(), std::back_inserter(p.b1));
  std::set_intersection(nv.begin(), nv.end(), nt.begin(), nt.end(), std::back_inserter(p.b2));
  std::set_difference(nv.begin(), nv.end(), nt.begin(), nt.end(), std::back_inserter(p.b3));
  return p;
}

MateClass MateClass::of(std::initializer_list<int> parts) {
  unsigned mask = 0;
  for (int i : parts) mask |= 1u << (i - 1);
  return MateClass(mask);
}

std::string MateClass::word() const {
  std::string w;
  for (int i = 1; i <= 3; ++i)
    if (contains(i)) w += static_cast<char>('0' + i);
  return w;
}

MateClass mate_class(const BipartiteGraph& g, const NeighborhoodPartition& part, int s) {
  unsigned mask = 0;
  for (int i = 1; i <= 3; ++i)
    for (int b : part.part(i))
      if (g.adjacent(s, b)) {
        mask |= 1u << (i - 1);
        break;
      }
  return MateClass(mask);
}

MateClass mate_class(const BipartiteGraph& g, int v, int t, int s) {
  require_a(g, s, "s");
  if (s == v || s == t) throw Error("a mate must differ from both vertices of the pair");
  return mate_class(g, partition_neighborhoods(g, v, t), s);
}

bool overlapping_in_part(const BipartiteGraph& g, const NeighborhoodPartition& part, int p, int q, int i) {
  bool p_only = false, q_only = false;
  for (int b : part.part(i)) {
    const bool np = g.adjacent(p, b), nq = g.adjacent(q, b);
    p_only |= np && !nq;
    q_only |= nq && !np;
  }
  return p_only && q_only;
}

bool overlapping_mates(const BipartiteGraph& g, int v, int t, int p, int q, int i) {
  require_a(g, p, "p");
  require_a(g, q, "q");
  if (p == v || p == t || q == v || q == t) throw Error("mates must differ from both vertices of the pair");
  if (p == q) throw Error("overlapping mates must be distinct");
  if (i < 1 || i > 3) throw Error("part index must be 1, 2 or 3");
  const auto part = partition_neighborhoods(g, v, t);
  if (!mate_class(g, part, p).contains(i) || !mate_class(g, part, q).contains(i))
    throw Error("part " + std::to_string(i) + " is not in both mate classes");
  return overlapping_in_part(g, part, p, q, i);
}

std::string to_string(ConfigurationKind k) {
  switch (k) {
    case ConfigurationKind::C1: return "C1";
    case ConfigurationKind::C2: return "C2";
    case ConfigurationKind::C2Prime: return "C2'";
  }
  return "?";
}

std::string to_string(Region r) { return "R" + std::to_string(static_cast<int>(r)); }

std::optional<Region> Configuration::region(Event e) const {
  for (const auto& entry : region_of)
    if (entry.event == e) return entry.region;
  return std::nullopt;
}

Region region_at(const Configuration& c, const EventPositions& pos, int p) {
  int r = 0;
  for (int k = 1; k < 4; ++k)
    if (p > pos.of(c.boundaries[k])) r = k;
  return static_cast<Region>(r);
}

Configuration classify_configuration(const StickRepresentation& rep, const BipartiteGraph& g, int v, int t) {
  require_a(g, v, "v");
  require_a(g, t, "t");
  if (v == t) throw AnalysisError("the pair needs two distinct vertices");
  const auto report = validate_representation(rep, g);
  if (!report.ok()) throw AnalysisError("invalid representation: " + report.violations.front().message);
  const EventPositions pos(rep);
  if (pos.a_tip(v) > pos.a_tip(t))
    throw AnalysisError("T(a_v) must precede T(a_t); swap the pair");

  Configuration c;
  c.partition = partition_neighborhoods(g, v, t);
  const Event tv = Event::a_tip(v), tt = Event::a_tip(t), av = Event::a_origin(v), at = Event::a_origin(t);
  if (pos.of(at) < pos.of(av)) {
    c.kind = ConfigurationKind::C1;
    c.boundaries = {tv, tt, at, av};
  } else if (pos.of(av) < pos.of(tt)) {
    c.kind = ConfigurationKind::C2Prime;
    c.boundaries = {tv, av, tt, at};
  } else {
    c.kind = ConfigurationKind::C2;
    c.boundaries = {tv, tt, av, at};
  }

  for (int b : c.partition.b3) {
    const int origin = pos.b_origin(b), tip = pos.b_tip(b);
    switch (c.kind) {
      case ConfigurationKind::C1:
        (origin < pos.of(tt) ? c.beta3_1 : c.beta3_2).push_back(b);
        break;
      case ConfigurationKind::C2:
        if (origin > pos.of(tt))
          c.beta3_3.push_back(b);
        else
          (tip > pos.of(at) ? c.beta3_1 : c.beta3_2).push_back(b);
        break;
      case ConfigurationKind::C2Prime:
        (tip > pos.of(at) ? c.beta3_1 : c.beta3_2).push_back(b);
        break;
    }
  }

  for (int s = 0; s < g.a_count(); ++s) {
    if (s == v || s == t || pos.a_tip(s) > pos.a_tip(t)) continue;
    if (!mate_class(g, c.partition, s).empty()) c.partners.push_back(s);
  }

  std::vector<std::pair<int, Event>> events;
  for (int i = 1; i <= 3; ++i)
    for (int b : c.partition.part(i)) {
      events.emplace_back(pos.b_origin(b), Event::b_origin(b));
      events.emplace_back(pos.b_tip(b), Event::b_tip(b));
    }
  for (int s : c.partners) events.emplace_back(pos.a_origin(s), Event::a_origin(s));
  std::sort(events.begin(), events.end());
  for (auto& [p, e] : events) c.region_of.push_back({e, region_at(c, pos, p)});
  return c;
}

std::vector<std::string> table1_violations(const Configuration& c, const EventPositions& pos) {
  using R = Region;
  std::vector<std::string> out;
  for (int k = 0; k + 1 < 4; ++k)
    if (pos.of(c.boundaries[k]) > pos.of(c.boundaries[k + 1])) out.push_back("anchors out of order");

  auto expect = [&](const BSet& set, const char* name, std::initializer_list<R> origin_in,
                    std::initializer_list<R> tip_in) {
    for (int b : set) {
      for (auto [e, allowed] : {std::pair{Event::b_origin(b), origin_in}, std::pair{Event::b_tip(b), tip_in}}) {
        const int p = pos.of(e);
        if (p < pos.of(c.boundaries[0])) {
          out.push_back(to_string(e) + " precedes T(a_v)");
          continue;
        }
        const R r = region_at(c, pos, p);
        if (std::find(allowed.begin(), allowed.end(), r) == allowed.end())
          out.push_back(to_string(e) + " (" + name + ") lies in " + to_string(r));
      }
    }
  };

  const auto& part = c.partition;
  switch (c.kind) {
    case ConfigurationKind::C1:
      expect(part.b1, "beta1", {R::R1}, {R::R2});
      expect(part.b2, "beta2", {R::R1}, {R::R3});
      expect(c.beta3_1, "beta3^1", {R::R0}, {R::R3});
      expect(c.beta3_2, "beta3^2", {R::R2}, {R::R3});
      if (!c.beta3_3.empty()) out.push_back("beta3^3 must be empty in C1");
      break;
    case ConfigurationKind::C2:
      expect(part.b1, "beta1", {R::R2}, {R::R3});
      expect(part.b2, "beta2", {R::R1}, {R::R3});
      expect(c.beta3_1, "beta3^1", {R::R0}, {R::R3});
      expect(c.beta3_2, "beta3^2", {R::R0}, {R::R2});
      expect(c.beta3_3, "beta3^3", {R::R1}, {R::R2});
      break;
    case ConfigurationKind::C2Prime:
      if (!part.b2.empty()) out.push_back("beta2 must be empty in C2'");
      expect(part.b1, "beta1", {R::R2}, {R::R3});
      expect(part.b2, "beta2", {}, {});
      expect(c.beta3_1, "beta3^1", {R::R0}, {R::R3});
      // A beta3 tip may sit on either side of T(a_t): the two placements are
      // indistinguishable to the pair, and the row leaves R1 empty.
      expect(c.beta3_2, "beta3^2", {R::R0}, {R::R1, R::R2});
      if (!c.beta3_3.empty()) out.push_back("beta3^3 must be empty in C2'");
      break;
  }
  return out;
}

ForbiddenPairsReport check_forbidden_pairs(const StickRepresentation& rep, const BipartiteGraph& g) {
  const auto report = validate_representation(rep, g);
  if (!report.ok()) throw AnalysisError("invalid representation: " + report.violations.front().message);
  const EventPositions pos(rep);
  ForbiddenPairsReport out;
  const MateClass w13 = MateClass::of({1, 3}), w1 = MateClass::of({1});
  const MateClass w123 = MateClass::of({1, 2, 3}), w12 = MateClass::of({1, 2});
  for (int v = 0; v < g.a_count(); ++v) {
    for (int t = 0; t < g.a_count(); ++t) {
      if (v == t || pos.a_tip(v) > pos.a_tip(t)) continue;
      const auto part = partition_neighborhoods(g, v, t);
      if (part.b2.empty()) continue;
      ++out.pairs_checked;
      std::vector<std::pair<int, MateClass>> partners;
      for (int s = 0; s < g.a_count(); ++s) {
        if (s == v || s == t || pos.a_tip(s) > pos.a_tip(t)) continue;
        const MateClass w = mate_class(g, part, s);
        if (!w.empty()) partners.emplace_back(s, w);
      }
      for (std::size_t x = 0; x < partners.size(); ++x) {
        for (std::size_t y = x + 1; y < partners.size(); ++y) {
          auto [p, wp] = partners[x];
          auto [q, wq] = partners[y];
          const bool in_a = (wp == w13 || wp == w1) && (wq == w13 || wq == w1);
          const bool in_b = (wp == w123 || wp == w12) && (wq == w123 || wq == w12);
          if (in_a && overlapping_in_part(g, part, p, q, 1)) out.hits.push_back({v, t, p, q, 'a'});
          if (in_b && overlapping_in_part(g, part, p, q, 2)) out.hits.push_back({v, t, p, q, 'b'});
        }
      }
    }
  }
  return out;
}

}  // namespace stick

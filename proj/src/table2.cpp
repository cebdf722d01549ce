#include <algorithm>
#include <map>

#include "stick/structure.hpp"

namespace stick {

std::string to_string(Condition c) {
  switch (c) {
    case Condition::Beta31NonEmpty: return "beta3^1 nonempty";
    case Condition::Beta3112NonEmpty: return "beta3^1 u beta3^2 nonempty";
    case Condition::Beta2Empty: return "beta2 empty";
    case Condition::Beta31BeforeTip: return "beta3^1 before T(a_s)";
    case Condition::Beta3112BeforeTip: return "beta3^1 u beta3^2 before T(a_s)";
    case Condition::CoversBeta2: return "N(a_s) covers beta2";
  }
  return "?";
}

namespace {

using R = Region;
using C = Condition;
using Rules = std::vector<PlacementRule>;

const std::map<unsigned, Rules>& c1_rows() {
  static const std::map<unsigned, Rules> rows = {
      {MateClass::of({1, 3}).mask(), {{R::R1, {C::Beta31NonEmpty}}, {R::R2, {C::Beta2Empty}}}},
      {MateClass::of({1, 2}).mask(),
       {{R::R1, {C::Beta31BeforeTip}}, {R::R2, {C::Beta31BeforeTip, C::CoversBeta2}}}},
      {MateClass::of({2, 3}).mask(), {{R::R1, {C::Beta31NonEmpty}}, {R::R2, {C::CoversBeta2}}, {R::R3, {}}}},
      {MateClass::of({1}).mask(), {{R::R1, {C::Beta31BeforeTip}}, {R::R2, {C::Beta31BeforeTip, C::Beta2Empty}}}},
      {MateClass::of({2}).mask(), {{R::R1, {C::Beta31BeforeTip}}, {R::R3, {}}}},
      {MateClass::of({3}).mask(),
       {{R::R0, {C::Beta31NonEmpty}}, {R::R1, {C::Beta31NonEmpty}}, {R::R2, {C::Beta2Empty}}, {R::R3, {}}}},
      {MateClass::of({1, 2, 3}).mask(), {{R::R1, {C::Beta31NonEmpty}}, {R::R2, {C::CoversBeta2}}}},
  };
  return rows;
}

const std::map<unsigned, Rules>& c2_rows() {
  static const std::map<unsigned, Rules> rows = {
      {MateClass::of({1, 3}).mask(), {{R::R2, {C::Beta2Empty}}, {R::R3, {C::Beta31NonEmpty}}}},
      {MateClass::of({1, 2}).mask(), {{R::R2, {C::Beta31BeforeTip, C::CoversBeta2}}, {R::R3, {}}}},
      {MateClass::of({2, 3}).mask(), {{R::R1, {}}, {R::R2, {C::CoversBeta2}}, {R::R3, {C::Beta31NonEmpty}}}},
      {MateClass::of({1}).mask(), {{R::R2, {C::Beta31BeforeTip, C::Beta2Empty}}, {R::R3, {}}}},
      {MateClass::of({2}).mask(), {{R::R1, {C::Beta3112BeforeTip}}, {R::R3, {}}}},
      {MateClass::of({3}).mask(),
       {{R::R0, {C::Beta3112NonEmpty}}, {R::R1, {}}, {R::R2, {C::Beta2Empty}}, {R::R3, {C::Beta31NonEmpty}}}},
      {MateClass::of({1, 2, 3}).mask(), {{R::R2, {C::CoversBeta2}}, {R::R3, {}}}},
  };
  return rows;
}

bool subset(const BSet& x, const BSet& y) { return std::includes(y.begin(), y.end(), x.begin(), x.end()); }

BSet minus(const BSet& x, const BSet& y) {
  BSet out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

struct Context {
  const BipartiteGraph& g;
  const EventPositions& pos;
  const Configuration& c;
};

bool holds(const Context& ctx, Condition cond, int s) {
  auto before_tip = [&](std::initializer_list<const BSet*> sets) {
    for (const BSet* set : sets)
      for (int b : *set)
        if (ctx.pos.b_origin(b) > ctx.pos.a_tip(s)) return false;
    return true;
  };
  switch (cond) {
    case C::Beta31NonEmpty: return !ctx.c.beta3_1.empty();
    case C::Beta3112NonEmpty: return !ctx.c.beta3_1.empty() || !ctx.c.beta3_2.empty();
    case C::Beta2Empty: return ctx.c.partition.b2.empty();
    case C::Beta31BeforeTip: return before_tip({&ctx.c.beta3_1});
    case C::Beta3112BeforeTip: return before_tip({&ctx.c.beta3_1, &ctx.c.beta3_2});
    case C::CoversBeta2:
      for (int b : ctx.c.partition.b2)
        if (!ctx.g.adjacent(s, b)) return false;
      return true;
  }
  return false;
}

// Regions reachable from line position p by sliding across anchors (other
// than T(a_v)) without passing any event of the neighbourhoods.
std::vector<Region> equivalent_regions(const Context& ctx, int p) {
  std::vector<std::pair<int, int>> marks;  // position, anchor index or -1
  for (int k = 0; k < 4; ++k) marks.emplace_back(ctx.pos.of(ctx.c.boundaries[k]), k);
  for (int i = 1; i <= 3; ++i)
    for (int b : ctx.c.partition.part(i)) {
      marks.emplace_back(ctx.pos.b_origin(b), -1);
      marks.emplace_back(ctx.pos.b_tip(b), -1);
    }
  std::sort(marks.begin(), marks.end());

  std::vector<Region> out{region_at(ctx.c, ctx.pos, p)};
  auto at = std::lower_bound(marks.begin(), marks.end(), std::pair{p, -2});
  for (auto it = at; it != marks.begin();) {
    --it;
    if (it->second < 1) break;
    out.push_back(static_cast<Region>(it->second - 1));
  }
  for (auto it = at; it != marks.end(); ++it) {
    if (it->second < 1) break;
    out.push_back(static_cast<Region>(it->second));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BSet neighbours_in(const BipartiteGraph& g, int s, const BSet& universe) {
  BSet out;
  for (int b : universe)
    if (g.adjacent(s, b)) out.push_back(b);
  return out;
}

}  // namespace

const std::vector<PlacementRule>& placement_rules(MateClass w, ConfigurationKind kind) {
  static const Rules none;
  const auto& rows = kind == ConfigurationKind::C1 ? c1_rows() : c2_rows();
  auto it = rows.find(w.mask());
  return it == rows.end() ? none : it->second;
}

bool Table2Report::ok() const {
  for (const auto& p : partners)
    if (!p.placement_ok) return false;
  for (const auto& p : pairs)
    if (!p.ok) return false;
  return true;
}

Table2Report check_table2(const StickRepresentation& rep, const BipartiteGraph& g, int v, int t) {
  Table2Report report;
  report.configuration = classify_configuration(rep, g, v, t);
  const Configuration& c = report.configuration;
  const EventPositions pos(rep);
  const Context ctx{g, pos, c};

  for (int s : c.partners) {
    PartnerCheck pc;
    pc.partner = s;
    pc.w = mate_class(g, c.partition, s);
    pc.region = region_at(c, pos, pos.a_origin(s));
    pc.equivalent = equivalent_regions(ctx, pos.a_origin(s));
    const auto& rules = placement_rules(pc.w, c.kind);
    if (rules.empty()) pc.notes.push_back("no row for class " + pc.w.word());
    for (Region r : pc.equivalent) {
      for (const PlacementRule& rule : rules) {
        if (rule.region != r) continue;
        bool all = true;
        for (Condition cond : rule.conditions) {
          if (!holds(ctx, cond, s)) {
            all = false;
            pc.notes.push_back(to_string(r) + ": " + to_string(cond) + " fails");
          }
        }
        if (all && !pc.accepted) pc.accepted = r;
      }
    }
    pc.placement_ok = pc.accepted.has_value();
    if (!pc.placement_ok && !rules.empty()) pc.notes.push_back("no allowed region matches");
    report.partners.push_back(std::move(pc));
  }

  // Partners sharing a region: one neighbourhood dominates the other, up to
  // the part of R0 each tip already cuts off.
  BSet universe;
  for (int i = 1; i <= 3; ++i) universe.insert(universe.end(), c.partition.part(i).begin(), c.partition.part(i).end());
  std::sort(universe.begin(), universe.end());

  for (std::size_t x = 0; x < report.partners.size(); ++x) {
    for (std::size_t y = x + 1; y < report.partners.size(); ++y) {
      const auto& ps = report.partners[x];
      const auto& pr = report.partners[y];
      if (ps.region != pr.region || ps.region == Region::R0) continue;
      const Region ri = ps.region;
      BSet xs, ys;  // tips in R_i, origins in R_i
      for (int b : universe) {
        if (region_at(c, pos, pos.b_tip(b)) == ri) xs.push_back(b);
        if (region_at(c, pos, pos.b_origin(b)) == ri) ys.push_back(b);
      }
      auto r0_before = [&](int s) {
        BSet out;
        for (int b : universe) {
          const int o = pos.b_origin(b);
          if (o > pos.of(c.boundaries[0]) && region_at(c, pos, o) == Region::R0 && o < pos.a_tip(s)) out.push_back(b);
        }
        return out;
      };
      auto dominated = [&](int s, int r) {
        const BSet sy = neighbours_in(g, s, ys), ry = neighbours_in(g, r, ys);
        const BSet sx = minus(neighbours_in(g, s, xs), r0_before(r));
        const BSet rx = minus(neighbours_in(g, r, xs), r0_before(s));
        return subset(sy, ry) && subset(rx, sx);
      };
      const bool ok = dominated(ps.partner, pr.partner) || dominated(pr.partner, ps.partner);
      report.pairs.push_back({ps.partner, pr.partner, ri, ok});
    }
  }
  return report;
}

}  // namespace stick

#include "stick/builders.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace stick {

namespace {

constexpr Turn kP = Turn::fraction(0, 4), kR = Turn::fraction(1, 4), kQ = Turn::fraction(2, 4),
               kS = Turn::fraction(3, 4);
constexpr Turn kHalf = Turn::fraction(1, 2);

bool arcs_meet(const Arc& x, const Arc& y) { return arc_contains(x, y.start) || arc_contains(y, x.start); }

StickRepresentation discretize(std::vector<std::pair<std::int64_t, Event>> points) {
  std::sort(points.begin(), points.end());
  for (std::size_t k = 1; k < points.size(); ++k)
    if (points[k].first == points[k - 1].first)
      throw BuildError("coinciding images for " + to_string(points[k - 1].second) + " and " +
                       to_string(points[k].second));
  std::vector<Event> events;
  for (auto& [x, e] : points) events.push_back(e);
  return StickRepresentation(std::move(events));
}

void check_built(const StickRepresentation& rep, const BipartiteGraph& g) {
  const auto report = validate_representation(rep, g);
  if (!report.ok()) throw BuildError("unfolded layout does not represent the graph: " + report.violations.front().message);
}

std::vector<std::vector<std::string>> tokenized_lines(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string tok; ls >> tok;) toks.push_back(tok);
    out.push_back(std::move(toks));
  }
  return out;
}

}  // namespace

bool arc_contains(const Arc& a, Turn x) {
  if (a.start <= a.end) return a.start <= x && x <= a.end;
  return x >= a.start || x <= a.end;
}

std::vector<std::string> validate_arc_family(const ArcFamily& fam) {
  std::vector<std::string> out;
  std::map<std::int64_t, std::string> seen;
  auto check = [&](const Arc& a, const char* kind, bool is_s) {
    const std::string name = std::string(kind) + " " + a.id;
    bool in_range = true;
    for (Turn x : {a.start, a.end}) {
      if (x.ticks < 0 || x.ticks >= Turn::kPerTurn) {
        out.push_back(name + ": position " + to_string(x) + " outside [0, 1)");
        in_range = false;
        continue;
      }
      if (x == kP || x == kR || x == kQ || x == kS) out.push_back(name + ": endpoint on an anchor point");
      auto [it, fresh] = seen.emplace(x.ticks, name);
      if (!fresh) out.push_back(name + ": endpoint " + to_string(x) + " shared with " + it->second);
    }
    if (!in_range) return;
    const std::pair<Turn, const char*> anchors[] = {{kP, "p"}, {kR, "r"}, {kQ, "q"}, {kS, "s"}};
    for (auto [pt, label] : anchors) {
      const bool want = is_s ? (pt == kQ || pt == kS) : (pt == kP || pt == kR);
      if (arc_contains(a, pt) != want)
        out.push_back(name + (want ? ": does not contain " : ": contains ") + label);
    }
  };
  for (const Arc& a : fam.s_arcs) check(a, "S", true);
  for (const Arc& a : fam.t_arcs) check(a, "T", false);
  return out;
}

Built arcs_to_stick(const ArcFamily& fam) {
  const auto problems = validate_arc_family(fam);
  if (!problems.empty()) throw BuildError("invalid arc family: " + problems.front());
  const int n = static_cast<int>(fam.s_arcs.size()), m = static_cast<int>(fam.t_arcs.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if (!arcs_meet(fam.s_arcs[i], fam.t_arcs[j])) edges.emplace_back(i, j);
  BipartiteGraph g(n, m, edges);

  // Fold the bottom half onto the top across the line sr, then read the top
  // half from s towards r.
  std::vector<std::pair<std::int64_t, Event>> points;
  for (int i = 0; i < n; ++i) {
    const Arc& a = fam.s_arcs[i];
    points.emplace_back(a.end.ticks - kS.ticks, Event::a_tip(i));
    points.emplace_back(kS.ticks - a.start.ticks, Event::a_origin(i));
  }
  for (int j = 0; j < m; ++j) {
    const Arc& b = fam.t_arcs[j];
    points.emplace_back(b.start.ticks - kS.ticks, Event::b_origin(j));
    points.emplace_back(kS.ticks - b.end.ticks, Event::b_tip(j));
  }
  Built out{std::move(g), discretize(std::move(points))};
  check_built(out.representation, out.graph);
  return out;
}

std::vector<std::string> validate_chord_family(const ChordFamily& fam) {
  std::vector<std::string> out;
  std::map<std::int64_t, std::string> seen;
  for (const Chord& c : fam.chords) {
    const std::string name = "chord " + c.id;
    bool in_range = true;
    for (Turn x : {c.e1, c.e2}) {
      if (x.ticks <= 0 || x.ticks >= Turn::kPerTurn || x == kHalf) {
        out.push_back(name + ": position " + to_string(x) + " not inside an open half");
        in_range = false;
      }
      auto [it, fresh] = seen.emplace(x.ticks, name);
      if (!fresh && it->second != name) out.push_back(name + ": endpoint " + to_string(x) + " shared with " + it->second);
      if (!fresh && it->second == name) out.push_back(name + ": both endpoints coincide");
    }
    if (in_range && (c.e1 < kHalf) == (c.e2 < kHalf)) out.push_back(name + ": does not cross the line");
  }
  return out;
}

bool chords_cross(const Chord& x, const Chord& y) {
  const Turn lo = std::min(x.e1, x.e2), hi = std::max(x.e1, x.e2);
  auto inside = [&](Turn t) { return lo < t && t < hi; };
  return inside(y.e1) != inside(y.e2);
}

BuiltChords chords_to_stick(const ChordFamily& fam) {
  const auto problems = validate_chord_family(fam);
  if (!problems.empty()) throw BuildError("invalid chord family: " + problems.front());
  const int k = static_cast<int>(fam.chords.size());
  auto bottom = [&](int c) { return std::min(fam.chords[c].e1, fam.chords[c].e2); };
  auto top = [&](int c) { return std::max(fam.chords[c].e1, fam.chords[c].e2); };

  std::vector<std::vector<int>> adj(k);
  for (int x = 0; x < k; ++x)
    for (int y = x + 1; y < k; ++y)
      if (chords_cross(fam.chords[x], fam.chords[y])) {
        adj[x].push_back(y);
        adj[y].push_back(x);
      }

  // Each component is anchored at its chord whose bottom endpoint lies
  // closest to p; that chord goes to side A.
  std::vector<int> color(k, -1);
  for (int seed = 0; seed < k; ++seed) {
    if (color[seed] != -1) continue;
    std::vector<int> comp{seed};
    std::vector<char> mark(k, 0);
    mark[seed] = 1;
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (int y : adj[comp[h]])
        if (!mark[y]) {
          mark[y] = 1;
          comp.push_back(y);
        }
    const int anchor = *std::max_element(comp.begin(), comp.end(), [&](int x, int y) { return bottom(x) < bottom(y); });
    std::queue<int> queue;
    color[anchor] = 0;
    queue.push(anchor);
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop();
      for (int y : adj[x]) {
        if (color[y] == -1) {
          color[y] = 1 - color[x];
          queue.push(y);
        } else if (color[y] == color[x]) {
          throw BuildError("crossing graph is not bipartite (chords " + fam.chords[x].id + " and " +
                           fam.chords[y].id + ")");
        }
      }
    }
  }

  BuiltChords out;
  int n = 0, m = 0;
  for (int c = 0; c < k; ++c) out.vertex_of.push_back(color[c] == 0 ? Vertex{Side::A, n++} : Vertex{Side::B, m++});

  std::vector<Edge> edges;
  for (int x = 0; x < k; ++x) {
    for (int y : adj[x]) {
      if (color[x] != 0) continue;
      // A-chord [x y0] and B-chord [z t]: p, z, x, q, t, y0 in clockwise order.
      if (!(top(y) < top(x) && bottom(y) < bottom(x)))
        throw BuildError("chords " + fam.chords[x].id + " (A) and " + fam.chords[y].id +
                         " (B) break the cyclic order p, z, x, q, t, y");
      edges.emplace_back(out.vertex_of[x].index, out.vertex_of[y].index);
    }
  }
  out.graph = BipartiteGraph(n, m, edges);

  std::vector<std::pair<std::int64_t, Event>> points;
  for (int c = 0; c < k; ++c) {
    const Vertex v = out.vertex_of[c];
    const std::int64_t near = Turn::kPerTurn - top(c).ticks, far = Turn::kPerTurn - bottom(c).ticks;
    if (v.side == Side::A) {
      points.emplace_back(near, Event::a_tip(v.index));
      points.emplace_back(far, Event::a_origin(v.index));
    } else {
      points.emplace_back(near, Event::b_origin(v.index));
      points.emplace_back(far, Event::b_tip(v.index));
    }
  }
  out.representation = discretize(std::move(points));
  check_built(out.representation, out.graph);
  return out;
}

ArcFamily parse_arc_family(std::string_view text) {
  ArcFamily fam;
  int line_no = 0;
  for (const auto& toks : tokenized_lines(text)) {
    ++line_no;
    if (toks.empty() || toks[0].front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (toks.size() != 4 || (toks[0] != "S" && toks[0] != "T"))
      throw ParseError(where + "expected 'S <id> <start> <end>' or 'T <id> <start> <end>'");
    try {
      Arc a{toks[1], parse_turn(toks[2]), parse_turn(toks[3])};
      (toks[0] == "S" ? fam.s_arcs : fam.t_arcs).push_back(std::move(a));
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
  }
  return fam;
}

std::string format_arc_family(const ArcFamily& fam) {
  std::string out;
  for (const Arc& a : fam.s_arcs) out += "S " + a.id + ' ' + to_string(a.start) + ' ' + to_string(a.end) + '\n';
  for (const Arc& a : fam.t_arcs) out += "T " + a.id + ' ' + to_string(a.start) + ' ' + to_string(a.end) + '\n';
  return out;
}

ChordFamily parse_chord_family(std::string_view text) {
  ChordFamily fam;
  int line_no = 0;
  for (const auto& toks : tokenized_lines(text)) {
    ++line_no;
    if (toks.empty() || toks[0].front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (toks.size() != 4 || toks[0] != "c") throw ParseError(where + "expected 'c <id> <e1> <e2>'");
    try {
      fam.chords.push_back({toks[1], parse_turn(toks[2]), parse_turn(toks[3])});
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
  }
  return fam;
}

std::string format_chord_family(const ChordFamily& fam) {
  std::string out;
  for (const Chord& c : fam.chords) out += "c " + c.id + ' ' + to_string(c.e1) + ' ' + to_string(c.e2) + '\n';
  return out;
}

}  // namespace stick

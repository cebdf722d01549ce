#include "stick/obstructions.hpp"

namespace stick {

std::string to_string(ObstructionCase c) { return c == ObstructionCase::I ? "i" : "ii"; }

namespace {

bool in_case_i(MateClass w) { return w == MateClass::of({1, 3}) || w == MateClass::of({1}); }
bool in_case_ii(MateClass w) { return w == MateClass::of({1, 2, 3}) || w == MateClass::of({1, 2}); }

std::optional<NonStickCertificate> certify_side(const BipartiteGraph& g, Orientation orientation) {
  if (g.a_count() == 0) return std::nullopt;
  NonStickCertificate cert;
  cert.orientation = orientation;
  for (int t = 0; t < g.a_count(); ++t) {
    std::optional<Witness> found;
    for (int v = 0; v < g.a_count() && !found; ++v) {
      if (v == t) continue;
      const auto obs = pair_obstructions(g, v, t);
      if (obs.empty()) continue;
      const auto part = partition_neighborhoods(g, v, t);
      const auto& o = obs.front();
      found = Witness{t, v, o.kind, o.p, o.q, mate_class(g, part, o.p), mate_class(g, part, o.q),
                      o.kind == ObstructionCase::I ? 1 : 2};
    }
    if (!found) return std::nullopt;
    cert.witnesses.push_back(*found);
  }
  return cert;
}

}  // namespace

std::vector<PairObstruction> pair_obstructions(const BipartiteGraph& g, int v, int t) {
  const auto part = partition_neighborhoods(g, v, t);
  std::vector<PairObstruction> out;
  if (part.b2.empty()) return out;
  std::vector<MateClass> w(g.a_count());
  for (int s = 0; s < g.a_count(); ++s)
    if (s != v && s != t) w[s] = mate_class(g, part, s);
  // Case I witnesses come first, then case II; pairs in lexicographic order.
  for (ObstructionCase kind : {ObstructionCase::I, ObstructionCase::II}) {
    const bool first = kind == ObstructionCase::I;
    for (int p = 0; p < g.a_count(); ++p) {
      if (p == v || p == t || !(first ? in_case_i(w[p]) : in_case_ii(w[p]))) continue;
      for (int q = 0; q < g.a_count(); ++q) {
        if (q == p || q == v || q == t || !(first ? in_case_i(w[q]) : in_case_ii(w[q]))) continue;
        if (overlapping_in_part(g, part, p, q, first ? 1 : 2)) out.push_back({kind, p, q});
      }
    }
  }
  return out;
}

std::optional<NonStickCertificate> certify_non_stick(const BipartiteGraph& g, bool try_role_swap) {
  if (auto cert = certify_side(g, Orientation::ASide)) return cert;
  if (try_role_swap) return certify_side(g.swapped_sides(), Orientation::BSide);
  return std::nullopt;
}

std::vector<std::string> certificate_problems(const BipartiteGraph& input, const NonStickCertificate& cert) {
  const BipartiteGraph g = cert.orientation == Orientation::ASide ? input : input.swapped_sides();
  std::vector<std::string> out;
  const int n = g.a_count();
  if (n == 0) out.push_back("the side has no vertices");
  if (static_cast<int>(cert.witnesses.size()) != n)
    out.push_back("expected " + std::to_string(n) + " witnesses, got " + std::to_string(cert.witnesses.size()));
  std::vector<bool> seen(n, false);
  for (const Witness& w : cert.witnesses) {
    const std::string tag = "witness for t=" + std::to_string(w.t + 1) + ": ";
    auto valid = [n](int x) { return x >= 0 && x < n; };
    if (!valid(w.t) || !valid(w.v) || !valid(w.p) || !valid(w.q)) {
      out.push_back(tag + "index out of range");
      continue;
    }
    if (seen[w.t]) out.push_back(tag + "duplicate");
    seen[w.t] = true;
    if (w.v == w.t || w.p == w.q || w.p == w.v || w.p == w.t || w.q == w.v || w.q == w.t) {
      out.push_back(tag + "vertices are not distinct");
      continue;
    }
    const auto part = partition_neighborhoods(g, w.v, w.t);
    if (part.b2.empty()) out.push_back(tag + "no common neighbour");
    const MateClass wp = mate_class(g, part, w.p), wq = mate_class(g, part, w.q);
    if (wp != w.w_p || wq != w.w_q) out.push_back(tag + "recorded mate classes are wrong");
    const bool case_i = w.kind == ObstructionCase::I;
    if (w.overlap_index != (case_i ? 1 : 2)) out.push_back(tag + "overlap index does not match the case");
    const bool classes_ok = case_i ? in_case_i(wp) && in_case_i(wq) : in_case_ii(wp) && in_case_ii(wq);
    if (!classes_ok) out.push_back(tag + "mate classes not allowed for case " + to_string(w.kind));
    else if (!overlapping_in_part(g, part, w.p, w.q, w.overlap_index))
      out.push_back(tag + "mates are not overlapping");
  }
  return out;
}

}  // namespace stick

#include "stick/recognizer.hpp"

#include <algorithm>

namespace stick {

std::optional<StickRepresentation> greedy_tips(const std::vector<Event>& origin_order, const BipartiteGraph& g) {
  const int n = g.a_count(), m = g.b_count();
  std::vector<int> pa(n, -1), pb(m, -1);
  if (static_cast<int>(origin_order.size()) != n + m) throw Error("origin order must list all n+m origins");
  for (std::size_t k = 0; k < origin_order.size(); ++k) {
    const Event e = origin_order[k];
    if (!e.is_origin()) throw Error("origin order contains a tip: " + to_string(e));
    auto& slots = e.side() == Side::A ? pa : pb;
    if (e.vertex < 0 || e.vertex >= static_cast<int>(slots.size()) || slots[e.vertex] != -1)
      throw Error("origin order is not a permutation of the origins");
    slots[e.vertex] = static_cast<int>(k);
  }

  std::vector<int> left(n), right(m);
  for (int i = 0; i < n; ++i) {
    left[i] = pa[i];
    for (int j : g.a_neighbors(i)) {
      if (pb[j] > pa[i]) return std::nullopt;
      left[i] = std::min(left[i], pb[j]);
    }
  }
  for (int j = 0; j < m; ++j) {
    right[j] = pb[j];
    for (int i : g.b_neighbors(j)) right[j] = std::max(right[j], pa[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if (!g.adjacent(i, j) && pb[j] < pa[i] && left[i] <= pb[j] && pa[i] <= right[j]) return std::nullopt;

  // Gap k lies just before origin k: B-tips hanging off origin k-1, then
  // A-tips leaning on origin k.
  const int total = n + m;
  std::vector<std::vector<int>> b_tips(total + 1), a_tips(total + 1);
  for (int j = 0; j < m; ++j) b_tips[right[j] + 1].push_back(j);
  for (int i = 0; i < n; ++i) a_tips[left[i]].push_back(i);
  std::vector<Event> events;
  events.reserve(2 * total);
  for (int k = 0; k <= total; ++k) {
    for (int j : b_tips[k]) events.push_back(Event::b_tip(j));
    for (int i : a_tips[k]) events.push_back(Event::a_tip(i));
    if (k < total) events.push_back(origin_order[k]);
  }
  return StickRepresentation(std::move(events));
}

namespace {

class Search {
 public:
  Search(const BipartiteGraph& g, SearchBudget budget)
      : g_(g), budget_(budget), pa_(g.a_count(), -1), pb_(g.b_count(), -1),
        placed_nbrs_(g.a_count(), 0), open_(g.b_count(), 0) {
    for (int j = 0; j < g.b_count(); ++j) open_[j] = static_cast<int>(g.b_neighbors(j).size());
  }

  RecognitionResult run() {
    RecognitionResult r;
    const bool found = dfs();
    r.nodes = nodes_;
    if (found) {
      r.verdict = Verdict::Yes;
      r.representation = greedy_tips(order_, g_);
    } else {
      r.verdict = exhausted_ ? Verdict::Unknown : Verdict::No;
    }
    return r;
  }

 private:
  bool spend() {
    if (nodes_ >= budget_.max_nodes) {
      exhausted_ = true;
      return false;
    }
    ++nodes_;
    return true;
  }

  // Placing a_i now is consistent with every B-origin already on the line.
  bool a_fits(int i) const {
    if (placed_nbrs_[i] != static_cast<int>(g_.a_neighbors(i).size())) return false;
    const int here = static_cast<int>(order_.size());
    int left = here;
    for (int j : g_.a_neighbors(i)) left = std::min(left, pb_[j]);
    for (int j = 0; j < g_.b_count(); ++j)
      if (pb_[j] >= left && !g_.adjacent(i, j) && open_[j] > 0) return false;
    return true;
  }

  bool dfs() {
    const int here = static_cast<int>(order_.size());
    if (here == g_.a_count() + g_.b_count()) return true;
    for (int j = 0; j < g_.b_count(); ++j) {
      if (pb_[j] != -1) continue;
      if (!spend()) return false;
      pb_[j] = here;
      order_.push_back(Event::b_origin(j));
      for (int i : g_.b_neighbors(j)) ++placed_nbrs_[i];
      if (dfs()) return true;
      for (int i : g_.b_neighbors(j)) --placed_nbrs_[i];
      order_.pop_back();
      pb_[j] = -1;
      if (exhausted_) return false;
    }
    for (int i = 0; i < g_.a_count(); ++i) {
      if (pa_[i] != -1) continue;
      if (!spend()) return false;
      if (!a_fits(i)) continue;
      pa_[i] = here;
      order_.push_back(Event::a_origin(i));
      for (int j : g_.a_neighbors(i)) --open_[j];
      if (dfs()) return true;
      for (int j : g_.a_neighbors(i)) ++open_[j];
      order_.pop_back();
      pa_[i] = -1;
      if (exhausted_) return false;
    }
    return false;
  }

  const BipartiteGraph& g_;
  SearchBudget budget_;
  std::vector<int> pa_, pb_;
  std::vector<int> placed_nbrs_;  // per A: B-neighbours already placed
  std::vector<int> open_;         // per B: A-neighbours not yet placed
  std::vector<Event> order_;
  std::int64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

RecognitionResult recognize(const BipartiteGraph& g, SearchBudget budget) {
  if (budget.max_nodes < 1) throw Error("search budget must be at least 1");
  return Search(g, budget).run();
}

RecognitionResult exhaustive_recognize_tiny(const BipartiteGraph& g) {
  const int n = g.a_count(), m = g.b_count();
  if (n + m > 5) throw Error("exhaustive recognition is limited to n + m <= 5");
  std::vector<int> state_a(n, 0), state_b(m, 0);  // events of the vertex already placed
  std::vector<Event> seq;
  RecognitionResult result;
  result.verdict = Verdict::No;

  auto rec = [&](auto&& self) -> bool {
    if (static_cast<int>(seq.size()) == 2 * (n + m)) {
      ++result.nodes;
      StickRepresentation rep(seq);
      if (!validate_representation(rep, g).ok()) return false;
      result.verdict = Verdict::Yes;
      result.representation = std::move(rep);
      return true;
    }
    for (int i = 0; i < n; ++i) {
      if (state_a[i] == 2) continue;
      seq.push_back(state_a[i] == 0 ? Event::a_tip(i) : Event::a_origin(i));
      ++state_a[i];
      if (self(self)) return true;
      --state_a[i];
      seq.pop_back();
    }
    for (int j = 0; j < m; ++j) {
      if (state_b[j] == 2) continue;
      seq.push_back(state_b[j] == 0 ? Event::b_origin(j) : Event::b_tip(j));
      ++state_b[j];
      if (self(self)) return true;
      --state_b[j];
      seq.pop_back();
    }
    return false;
  };
  rec(rec);
  return result;
}

}  // namespace stick

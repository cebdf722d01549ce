#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stick/representation.hpp"

namespace stick {

struct SearchBudget {
  std::int64_t max_nodes = 10'000'000;
};

enum class Verdict { Yes, No, Unknown };

struct RecognitionResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<StickRepresentation> representation;  // set iff Yes
  std::int64_t nodes = 0;
};

/// Extremal tip placement for a fixed order of the n+m origins. Returns a
/// representation of g with exactly this origin order when one exists.
/// Throws Error unless `origin_order` lists every origin of g once.
std::optional<StickRepresentation> greedy_tips(const std::vector<Event>& origin_order, const BipartiteGraph& g);

/// Depth-first search over origin orders. Deterministic.
RecognitionResult recognize(const BipartiteGraph& g, SearchBudget budget = {});

/// Brute force over all well-formed event sequences. Throws Error when
/// n + m > 5.
RecognitionResult exhaustive_recognize_tiny(const BipartiteGraph& g);

}  // namespace stick

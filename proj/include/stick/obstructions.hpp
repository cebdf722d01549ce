#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stick/structure.hpp"

namespace stick {

enum class ObstructionCase { I, II };
std::string to_string(ObstructionCase c);

struct PairObstruction {
  ObstructionCase kind = ObstructionCase::I;
  int p = 0, q = 0;
};

/// Every ordered pair of mates (p, q) of (v, t) that is B1-overlapping with
/// both classes in {13, 1} (case I) or B2-overlapping with both classes in
/// {123, 12} (case II). Empty when b2 is empty. Throws Error when v == t.
std::vector<PairObstruction> pair_obstructions(const BipartiteGraph& g, int v, int t);

enum class Orientation { ASide, BSide };

struct Witness {
  int t = 0, v = 0;
  ObstructionCase kind = ObstructionCase::I;
  int p = 0, q = 0;
  MateClass w_p, w_q;
  int overlap_index = 1;
};

struct NonStickCertificate {
  /// BSide means the witnesses refer to g.swapped_sides(): t, v, p, q index
  /// B-vertices of g.
  Orientation orientation = Orientation::ASide;
  std::vector<Witness> witnesses;  // one per vertex of the side, ascending t
};

/// A-side first; the side-swapped graph only when `try_role_swap`. A side
/// with no vertices never yields a certificate.
std::optional<NonStickCertificate> certify_non_stick(const BipartiteGraph& g, bool try_role_swap = false);

/// Re-derives every invariant of the certificate from g. Empty when valid.
std::vector<std::string> certificate_problems(const BipartiteGraph& g, const NonStickCertificate& cert);

}  // namespace stick

#pragma once
// Pairing-based coloring for instances whose edges all have size near
// sqrt(n): useful pairs, complement-line-graph matchings, and the full case
// ladder that produces <= n colors with color classes of size <= 2.

#include "efl/types.hpp"

#include <optional>

namespace efl {

struct PairingPlan {
  std::vector<std::pair<EdgeId, EdgeId>> pairs;  // edges sharing a color
};

// e != f, e and f intersect, and they have at most n-2 common line-graph
// neighbors.
bool useful_pair(const LinearHypergraph& H, EdgeId e, EdgeId f);

// Colors paired edges together and everything else distinctly.
// Throws PairNotDisjoint when a pair's edges intersect (or an edge repeats),
// PlanTooSmall when e(H) > n and |pairs| < e(H) - n.
EdgeColoring pair_color(const LinearHypergraph& H, const PairingPlan& plan);

struct ChainResult {
  std::vector<EdgeId> chain;  // 2t pairwise-intersecting edges, consecutive
                              // pairs useful
  std::vector<std::pair<EdgeId, EdgeId>> matching;  // t disjoint color-pairs
};

// Finds a chain of 2t pairwise-intersecting edges with consecutive useful
// pairs plus the greedy companion selection turning it into a
// complement-line-graph matching of size t.
std::optional<ChainResult> useful_chain(const LinearHypergraph& H, int t);

// Full pairing colorer: proper, <= n colors, class sizes <= 2.
// Requires every |e| >= (1 - delta) sqrt(n).  Falls back to exact
// complement-matching search at n <= 12; otherwise throws
// CaseLadderExhausted.
EdgeColoring extremal_color(const LinearHypergraph& H, double delta);

// Greedy maximal matching in the complement line graph (edge-index order).
std::vector<std::pair<EdgeId, EdgeId>> complement_greedy_matching(
    const LinearHypergraph& H);

// Best-effort maximum matching of the complement line graph with a target
// size (branch and bound with a node cap); nullopt if no matching of size
// >= target was found.
std::optional<std::vector<std::pair<EdgeId, EdgeId>>> complement_matching_exact(
    const LinearHypergraph& H, int target, int64_t node_cap = 5'000'000);

}  // namespace efl

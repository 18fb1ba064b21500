#pragma once

#include <optional>

#include "dpcstar/graph.hpp"
#include "dpcstar/network.hpp"

namespace dpcstar {

enum class Verdict { Processed, Inconsistent };

struct SolveOutcome {
    Verdict verdict = Verdict::Inconsistent;
    Network network;  // transformed, equivalent network when Processed
    std::vector<std::pair<int, int>> fill_edges;
    long revisions = 0;  // executed triple updates
};

/// Single-pass strong directional path-consistency: processes variables from
/// the last position down, pruning earlier domains and tightening every pair
/// of earlier neighbors through the processed variable. When Processed, the
/// output graph is triangulated with the reverse ordering as a PEO, and the
/// output is strongly DPC relative to `order`.
SolveOutcome dpc(Network n, const Ordering& order);

/// Variant that additionally prunes the processed variable's domain against
/// all earlier neighbors and restricts the incident relations to the current
/// domains before composing. Decides consistency and yields backtrack-free
/// extraction for networks over majority-closed languages.
SolveOutcome dpc_star(Network n, const Ordering& order);

struct Extraction {
    std::optional<Assignment> solution;
    int failed_variable = -1;  // first variable whose candidate set emptied
};

/// Greedy assignment along `order`: each variable takes the least active value
/// supported by all earlier assigned neighbors. Never backtracks; a failure
/// signals an input outside the majority-closed languages (or ordering misuse).
Extraction extract_solution(const SolveOutcome& out, const Ordering& order);

/// Default algorithm ordering: reverse of a perfect elimination ordering when
/// the constraint graph is chordal, declaration order otherwise.
Ordering default_order(const Network& n);

}  // namespace dpcstar

#pragma once

#include <span>

#include "dpcstar/graph.hpp"
#include "dpcstar/network.hpp"

namespace dpcstar {

enum class Propagation { Ok, Inconsistent };

/// Arc-consistency over the active sets; worklist processed in lexicographic
/// (variable, neighbor) order. Preserves the solution set.
Propagation enforce_ac(Network& n);

/// Whether every tuple of the end constraint extends through the chain of
/// consecutive constraints (missing intermediate constraints are universal).
/// The constraint between the endpoints must be present.
bool is_path_consistent(const Network& n, std::span<const int> path);

/// Strong path-consistency fixpoint over the eagerly completed graph plus
/// arc-consistency; the reference decider used as comparison baseline.
/// Preserves the solution set. `revisions` counts executed triple updates.
Propagation enforce_strong_pc(Network& n, long* revisions = nullptr);

/// Directional arc-consistency toward later variables plus directional
/// path-consistency through later common neighbors, relative to `order`.
bool is_strongly_dpc(const Network& n, const Ordering& order);

}  // namespace dpcstar

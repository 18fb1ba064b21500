#pragma once

#include <cstdint>
#include <optional>

#include "dpcstar/majority.hpp"
#include "dpcstar/network.hpp"

namespace dpcstar {

struct GenParams {
    int n = 1;          // variables
    int d = 1;          // domain size
    double density = 0;   // non-universal constraints as a share of n(n-1)/2
    double looseness = 0; // allowed tuples as a share of d^2 (target, pre-repair)
    std::uint64_t seed = 0;
};

/// Deterministic seed derivation (splitmix-style).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

/// Random majority table: repeated argument when one exists, uniformly random
/// value on the all-distinct triples.
MajorityTable gen_majority_op(int d, std::uint64_t seed);

struct MajorityClosedInstance {
    Network network;
    MajorityOperation op;  // one component per variable domain
    Assignment planted;
    double achieved_looseness = 0;
};

/// Plants a random solution, draws random tuples toward the target looseness,
/// and repairs every relation by majority closure. Consistent by construction;
/// closure may overshoot the looseness, the achieved value is reported.
MajorityClosedInstance gen_majority_closed_network(const GenParams& p);

struct TreePreservingInstance {
    Network network;
    std::vector<TreeDomain> trees;  // one per variable
    Assignment planted;
    double achieved_looseness = 0;
};

/// Random tree per domain; relations start from the planted tuple plus random
/// subtree-to-subtree blocks, then are repaired to be tree-preserving in both
/// directions and arc-consistent. Consistent by construction.
TreePreservingInstance gen_tree_preserving_network(const GenParams& p);

/// Removes tuples (re-closing under op) until the oracle certifies
/// inconsistency; relations stay closed. Empty when the attempt budget runs out.
std::optional<Network> gen_inconsistent_variant(const Network& n,
                                                const MajorityOperation& op,
                                                std::uint64_t seed,
                                                int max_attempts = 64);

/// Uniform random instance with no language structure (test fodder).
Network gen_random_network(const GenParams& p);

}  // namespace dpcstar

#pragma once

#include <optional>

#include "dpcstar/network.hpp"

namespace dpcstar {

/// A constraint language: relations over a fixed set of declared domains.
struct Language {
    struct Entry {
        int source = 0;
        int target = 0;
        Relation relation;
    };
    std::vector<Domain> domains;
    std::vector<Entry> relations;
};

/// Validates endpoints and shapes; throws on mismatch.
void validate_language(const Language& l);

/// The network with x removed. A single incident constraint prunes the
/// neighbor's domain to the supported values; otherwise the incident
/// constraints are compiled pairwise into the neighborhood by
/// composition-intersection (absent pairs read as universal).
Network eliminate(const Network& n, int x);

struct VepCheck {
    bool holds = true;
    /// A non-extendable solution of eliminate(n, x), over that network's variables.
    std::optional<Assignment> counterexample;
};

/// Enumerates all solutions of eliminate(n, x) and tests each for extension.
/// With weak = true the check holds vacuously unless x is arc-consistent
/// relative to every incident constraint.
VepCheck check_vep_instance(const Network& n, int x, bool weak,
                            long long space_bound = 0);

struct HellyCheck {
    bool holds = true;
    int target_domain = -1;
    struct Item {
        int relation_index;
        int source_value;
    };
    /// Pairwise-intersecting image family with empty total intersection.
    std::vector<Item> witness;
};

/// For each target domain, searches the nonempty images R(a) for a
/// pairwise-intersecting subfamily (size 3 up to the domain size; repeats
/// allowed, identical image sets deduplicated) with empty intersection.
HellyCheck check_helly(const Language& l);

}  // namespace dpcstar

#pragma once

#include <stdexcept>
#include <vector>

#include "dpcstar/network.hpp"

namespace dpcstar {

struct OracleBoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Search-space bound for the oracle, from DPCSTAR_MAX_ORACLE (default 1e8).
long long oracle_space_bound();

/// Exhaustive chronological backtracking in declaration order, no propagation.
/// Complete up to `limit` solutions (limit < 0 enumerates all). Throws
/// OracleBoundExceeded when the product of active domain sizes exceeds the bound.
std::vector<Assignment> enumerate_solutions(const Network& n, long limit,
                                            long long space_bound = 0);

bool oracle_consistent(const Network& n, long long space_bound = 0);

/// Whether a consistent partial assignment extends to a full solution.
bool extends_to_solution(const Network& n, const Assignment& partial,
                         long long space_bound = 0);

/// Every partial solution on every variable subset of size <= max_subset
/// extends to a full solution.
bool check_global_consistency(const Network& n, int max_subset,
                              long long space_bound = 0);

/// The full solution set as an n-ary relation over the declaration order.
NaryRelation solution_relation(const Network& n, long long space_bound = 0);

}  // namespace dpcstar

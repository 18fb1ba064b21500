#pragma once

#include <map>
#include <string>

#include "dpcstar/elimination.hpp"
#include "dpcstar/relation.hpp"

namespace dpcstar {

/// Ternary operation on one domain, as a full d^3 lookup table indexed
/// row-major by (x, y, z).
class MajorityTable {
public:
    MajorityTable() = default;
    MajorityTable(int domain_size, std::vector<int> table);

    int domain_size() const { return d_; }
    int apply(int x, int y, int z) const {
        return table_[(std::size_t(x) * d_ + y) * d_ + z];
    }
    /// phi(e,d,d) = phi(d,e,d) = phi(d,d,e) = d for all d, e (full enumeration).
    bool satisfies_majority_axioms() const;
    const std::vector<int>& table() const { return table_; }
    bool operator==(const MajorityTable&) const = default;

private:
    int d_ = 0;
    std::vector<int> table_;
};

/// Multi-sorted majority operation: one component per named domain.
struct MajorityOperation {
    std::map<std::string, MajorityTable> components;
};

/// Full triple enumeration of the closure condition.
bool is_closed_under(const Relation& r, const MajorityTable& source_op,
                     const MajorityTable& target_op);

/// Least superset of r closed under the componentwise operation.
Relation close_under(Relation r, const MajorityTable& source_op,
                     const MajorityTable& target_op);

/// A tree over the values of one domain.
class TreeDomain {
public:
    TreeDomain() = default;
    TreeDomain(int size, std::vector<std::pair<int, int>> edges);

    int size() const { return size_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

    std::vector<int> path(int u, int v) const;
    /// The unique vertex on all three pairwise paths.
    int median(int a, int b, int c) const;
    /// Empty sets count as connected.
    bool connected_subset(const ValueSet& s) const;
    /// Minimal subtree containing s.
    ValueSet span(const ValueSet& s) const;

    bool operator==(const TreeDomain&) const = default;

private:
    int size_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// The median operation of the tree, tabulated.
MajorityTable standard_tree_majority(const TreeDomain& t);

/// Exact check by enumeration of the connected subsets of the source tree;
/// exponential in the source domain size (intended for small domains).
bool is_tree_preserving(const Relation& r, const TreeDomain& source_tree,
                        const TreeDomain& target_tree);

/// Polynomial check: every row nonempty and connected, and the union of the
/// rows across each source-tree edge connected. Agrees with the exact check
/// whenever every source value has a nonempty image.
bool is_tree_preserving_total(const Relation& r, const TreeDomain& source_tree,
                              const TreeDomain& target_tree);

enum class TreeEquivalence { Agree, Disagree, PreconditionFailed };

/// Cross-validates closure under the standard tree majorities against
/// tree-preservation in both directions. Requires r nonempty and
/// arc-consistent both ways; reports a violated precondition distinctly.
TreeEquivalence tree_closure_equivalence(const Relation& r, const TreeDomain& ti,
                                         const TreeDomain& tj);

/// Every tuple whose unary and binary projections lie in the projections of r
/// is itself in r. Arity at most 4.
bool is_2_decomposable(const NaryRelation& r);

/// The pairwise projection constraints ((i, j), pi_ij(r)) for i < j. Valid as
/// a replacement of r exactly when r is 2-decomposable.
std::vector<std::pair<std::pair<int, int>, Relation>> binarize(const NaryRelation& r);

struct ClosureCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Least superset of l closed under inverse, intersection, composition, and
/// restriction by definable unary sets (seeded with the full domains and the
/// singletons of existing tuples, closed under relational images). Throws
/// ClosureCapExceeded past max_relations.
Language binary_closure(const Language& l, int max_relations = 4096);

}  // namespace dpcstar

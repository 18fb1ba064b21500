#pragma once

#include <optional>
#include <vector>

#include "dpcstar/network.hpp"

namespace dpcstar {

/// A permutation of variables with O(1) lookup in both directions.
/// Position 0 is the first variable of the algorithm ordering; the elimination
/// order used by the solvers is the reverse of this sequence.
class Ordering {
public:
    Ordering() = default;
    explicit Ordering(std::vector<int> sequence);
    static Ordering identity(int n);

    int size() const { return int(seq_.size()); }
    int at(int position) const { return seq_.at(position); }
    int position_of(int v) const { return pos_.at(v); }
    Ordering reversed() const;
    const std::vector<int>& sequence() const { return seq_; }

    bool operator==(const Ordering&) const = default;

private:
    std::vector<int> seq_;
    std::vector<int> pos_;
};

/// Undirected constraint graph; vertices are variable indices.
class ConstraintGraph {
public:
    explicit ConstraintGraph(int vertices = 0);
    /// Edges are the stored constraint scopes of the network.
    static ConstraintGraph of(const Network& n);

    int vertex_count() const { return int(adj_.size()); }
    bool adjacent(int u, int v) const { return adj_.at(u).contains(v); }
    void add_edge(int u, int v);
    const ValueSet& adjacency(int v) const { return adj_.at(v); }
    std::vector<std::pair<int, int>> edges() const;
    int edge_count() const;

    bool operator==(const ConstraintGraph&) const = default;

private:
    std::vector<ValueSet> adj_;
};

/// True iff `elimination` is a perfect elimination ordering of g: for every
/// vertex, its neighbors later in the sequence form a clique.
bool is_peo(const ConstraintGraph& g, const Ordering& elimination);

/// Maximum cardinality search visit order, lowest index breaking ties.
std::vector<int> mcs_order(const ConstraintGraph& g);

/// A perfect elimination ordering when g is chordal (reverse MCS order,
/// verified by is_peo), absent otherwise.
std::optional<Ordering> find_peo(const ConstraintGraph& g);

bool is_triangulated(const ConstraintGraph& g);

/// Graph with the fill edges produced by simulated elimination along the
/// reverse of `ord` (last position eliminated first).
ConstraintGraph fill_along(const ConstraintGraph& g, const Ordering& ord);

/// Maximum earlier-neighbor count at elimination time along the reverse of `ord`.
int induced_width(const ConstraintGraph& g, const Ordering& ord);

}  // namespace dpcstar

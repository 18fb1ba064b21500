#include "dpcstar/consistency.hpp"

#include <set>

namespace dpcstar {

Propagation enforce_ac(Network& n) {
    std::set<std::pair<int, int>> work;  // (i, j): revise active(i) against constraint(i, j)
    for (auto [i, j] : n.constraint_scopes()) {
        work.insert({i, j});
        work.insert({j, i});
    }
    while (!work.empty()) {
        auto [i, j] = *work.begin();
        work.erase(work.begin());
        ValueSet supported = n.constraint(i, j).preimage(n.active(j));
        if (n.active(i).subset_of(supported)) continue;
        n.restrict_active(i, supported);
        if (n.active(i).empty()) return Propagation::Inconsistent;
        for (int k : n.neighbors(i))
            if (k != j) work.insert({k, i});
    }
    return Propagation::Ok;
}

bool is_path_consistent(const Network& n, std::span<const int> path) {
    if (path.size() < 2) throw std::invalid_argument("is_path_consistent: malformed path");
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (path[i] == path[i + 1])
            throw std::invalid_argument("is_path_consistent: malformed path");
    const int front = path.front(), back = path.back();
    if (!n.has_constraint(front, back))
        throw std::invalid_argument("is_path_consistent: end constraint missing");
    Relation chain = n.constraint_or_universal(path[0], path[1]);
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        chain = compose(chain, n.constraint_or_universal(path[i], path[i + 1]));
    return n.constraint(front, back).subset_of(chain);
}

namespace {

// Dense working state for the strong-PC fixpoint: every pair materialized,
// both orientations kept in sync, relations maintained inside the active products.
struct PcState {
    int n;
    std::vector<ValueSet> active;
    std::vector<std::vector<Relation>> rel;  // rel[i][j] oriented i -> j, i != j

    explicit PcState(const Network& net) : n(net.variable_count()) {
        active.reserve(n);
        for (int v = 0; v < n; ++v) active.push_back(net.active(v));
        rel.assign(n, std::vector<Relation>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                rel[i][j] = net.has_constraint(i, j)
                                ? net.constraint(i, j)
                                : Relation::product(active[i], active[j]);
            }
    }

    void write(int i, int j, const Relation& r) {
        rel[i][j] = r;
        rel[j][i] = r.inverse();
    }
};

}  // namespace

Propagation enforce_strong_pc(Network& n, long* revisions) {
    const int nv = n.variable_count();
    long revs = 0;
    PcState st(n);
    auto finish = [&](Propagation verdict) {
        for (int v = 0; v < nv; ++v) n.set_active(v, st.active[v]);
        auto original = n.constraint_scopes();
        for (const auto& [i, j] : original) n.set_constraint(i, j, st.rel[i][j]);
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j)
                if (!n.has_constraint(i, j) &&
                    !st.rel[i][j].covers_product(st.active[i], st.active[j]))
                    n.set_constraint(i, j, st.rel[i][j]);
        if (revisions) *revisions = revs;
        return verdict;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        // Arc phase: prune domains, then keep the relations inside the products.
        bool arc_changed = true;
        while (arc_changed) {
            arc_changed = false;
            for (int i = 0; i < nv; ++i)
                for (int j = 0; j < nv; ++j) {
                    if (i == j) continue;
                    ValueSet supported = st.rel[i][j].preimage(st.active[j]);
                    if (!st.active[i].subset_of(supported)) {
                        st.active[i] &= supported;
                        if (st.active[i].empty()) return finish(Propagation::Inconsistent);
                        arc_changed = changed = true;
                    }
                }
        }
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j) {
                Relation masked = st.rel[i][j];
                masked.restrict_to(st.active[i], st.active[j]);
                if (masked != st.rel[i][j]) {
                    st.write(i, j, masked);
                    changed = true;
                }
            }
        // Path phase over all triples of the completed graph.
        for (int k = 0; k < nv; ++k)
            for (int i = 0; i < nv; ++i) {
                if (i == k) continue;
                for (int j = i + 1; j < nv; ++j) {
                    if (j == k) continue;
                    ++revs;
                    // Both legs covering their products compose to the full
                    // product, which cannot tighten a masked relation.
                    if (st.rel[i][k].covers_product(st.active[i], st.active[k]) &&
                        st.rel[k][j].covers_product(st.active[k], st.active[j]))
                        continue;
                    Relation tightened = st.rel[i][j] & compose(st.rel[i][k], st.rel[k][j]);
                    if (tightened != st.rel[i][j]) {
                        if (tightened.empty()) return finish(Propagation::Inconsistent);
                        st.write(i, j, tightened);
                        changed = true;
                    }
                }
            }
    }
    return finish(Propagation::Ok);
}

bool is_strongly_dpc(const Network& n, const Ordering& order) {
    if (order.size() != n.variable_count())
        throw std::invalid_argument("is_strongly_dpc: ordering does not cover the variables");
    auto scopes = n.constraint_scopes();
    // Directional arc-consistency: earlier variable supported in the later one.
    for (auto [i, j] : scopes) {
        int lo = order.position_of(i) < order.position_of(j) ? i : j;
        int hi = lo == i ? j : i;
        if (!n.active(lo).subset_of(n.constraint(lo, hi).preimage(n.active(hi))))
            return false;
    }
    // Directional path-consistency through every later common neighbor.
    for (auto [i, j] : scopes) {
        int pi = order.position_of(i), pj = order.position_of(j);
        for (int k = 0; k < n.variable_count(); ++k) {
            if (k == i || k == j) continue;
            int pk = order.position_of(k);
            if (pk < pi || pk < pj) continue;
            if (!n.has_constraint(i, k) || !n.has_constraint(j, k)) continue;
            if (!n.constraint(i, j).subset_of(
                    compose(n.constraint(i, k), n.constraint(k, j))))
                return false;
        }
    }
    return true;
}

}  // namespace dpcstar

#include "dpcstar/dpc.hpp"

#include <algorithm>

namespace dpcstar {

namespace {

void require_cover(const Network& n, const Ordering& ord) {
    if (ord.size() != n.variable_count())
        throw std::invalid_argument("ordering does not cover the variables");
}

// Working copy with every present relation kept in both orientations, so the
// elimination loops never invert or copy through the constraint store.
struct DenseState {
    int n;
    std::vector<ValueSet> active;
    std::vector<ValueSet> adjacency;
    std::vector<Relation> rel;  // index i * n + j, oriented i -> j when present

    explicit DenseState(const Network& net) : n(net.variable_count()) {
        active.reserve(n);
        for (int v = 0; v < n; ++v) active.push_back(net.active(v));
        adjacency.assign(n, ValueSet(n));
        rel.assign(std::size_t(n) * n, Relation());
        for (auto [i, j] : net.constraint_scopes()) {
            Relation r = net.constraint(i, j);
            rel[std::size_t(j) * n + i] = r.inverse();
            rel[std::size_t(i) * n + j] = std::move(r);
            adjacency[i].insert(j);
            adjacency[j].insert(i);
        }
    }

    bool present(int i, int j) const { return adjacency[i].contains(j); }
    Relation& at(int i, int j) { return rel[std::size_t(i) * n + j]; }

    void write(int i, int j, Relation r) {
        at(j, i) = r.inverse();
        at(i, j) = std::move(r);
    }
    void add(int i, int j, Relation r) {
        adjacency[i].insert(j);
        adjacency[j].insert(i);
        write(i, j, std::move(r));
    }

    std::vector<int> earlier_neighbors(const Ordering& ord, int k) const {
        std::vector<int> out;
        const int pk = ord.position_of(k);
        adjacency[k].for_each([&](int u) {
            if (ord.position_of(u) < pk) out.push_back(u);
        });
        std::sort(out.begin(), out.end(), [&](int a, int b) {
            return ord.position_of(a) < ord.position_of(b);
        });
        return out;
    }

    void store_into(Network& net) const {
        for (int v = 0; v < n; ++v) net.set_active(v, active[v]);
        for (int i = 0; i < n; ++i)
            adjacency[i].for_each([&](int j) {
                if (i < j) net.set_constraint(i, j, rel[std::size_t(i) * n + j]);
            });
    }
};

}  // namespace

SolveOutcome dpc(Network n, const Ordering& order) {
    require_cover(n, order);
    SolveOutcome out;
    DenseState st(n);
    auto finish = [&](Verdict v) {
        out.verdict = v;
        st.store_into(n);
        out.network = std::move(n);
        return std::move(out);
    };
    for (int kp = st.n - 1; kp >= 0; --kp) {
        const int k = order.at(kp);
        const std::vector<int> earlier = st.earlier_neighbors(order, k);
        for (int i : earlier) {
            st.active[i] &= st.at(i, k).preimage(st.active[k]);
            if (st.active[i].empty()) return finish(Verdict::Inconsistent);
        }
        for (std::size_t a = 0; a < earlier.size(); ++a) {
            const int i = earlier[a];
            for (std::size_t b = a + 1; b < earlier.size(); ++b) {
                const int j = earlier[b];
                if (!st.present(i, j)) {
                    st.add(i, j, Relation::product(st.active[i], st.active[j]));
                    out.fill_edges.emplace_back(std::min(i, j), std::max(i, j));
                }
                ++out.revisions;
                Relation tightened = st.at(i, j) & compose(st.at(i, k), st.at(k, j));
                if (tightened.empty()) return finish(Verdict::Inconsistent);
                if (tightened != st.at(i, j)) st.write(i, j, std::move(tightened));
            }
        }
    }
    return finish(Verdict::Processed);
}

SolveOutcome dpc_star(Network n, const Ordering& order) {
    require_cover(n, order);
    SolveOutcome out;
    // Neither loop revisits untouched state, so degenerate emptiness is
    // screened up front to keep the verdict aligned with consistency.
    if (n.trivially_inconsistent()) {
        out.network = std::move(n);
        return out;
    }
    DenseState st(n);
    auto finish = [&](Verdict v) {
        out.verdict = v;
        st.store_into(n);
        out.network = std::move(n);
        return std::move(out);
    };
    for (int kp = st.n - 1; kp >= 0; --kp) {
        const int k = order.at(kp);
        const std::vector<int> earlier = st.earlier_neighbors(order, k);
        if (earlier.size() == 1) {
            const int i = earlier[0];
            st.active[i] &= st.at(i, k).preimage(st.active[k]);
            if (st.active[i].empty()) return finish(Verdict::Inconsistent);
            continue;
        }
        for (int i : earlier) {
            st.active[k] &= st.at(i, k).image(st.active[i]);
            if (st.active[k].empty()) return finish(Verdict::Inconsistent);
        }
        for (std::size_t a = 0; a < earlier.size(); ++a) {
            const int i = earlier[a];
            st.at(i, k).restrict_to(st.active[i], st.active[k]);
            st.at(k, i).restrict_to(st.active[k], st.active[i]);
            const bool rik_full = st.at(i, k).covers_product(st.active[i], st.active[k]);
            for (std::size_t b = 0; b < a; ++b) {
                const int j = earlier[b];
                st.at(j, k).restrict_to(st.active[j], st.active[k]);
                st.at(k, j).restrict_to(st.active[k], st.active[j]);
                if (!st.present(i, j)) {
                    st.add(i, j, Relation::product(st.active[i], st.active[j]));
                    out.fill_edges.emplace_back(std::min(i, j), std::max(i, j));
                }
                ++out.revisions;
                Relation& rij = st.at(i, j);
                if (rik_full &&
                    st.at(j, k).covers_product(st.active[j], st.active[k])) {
                    // Restricted legs covering their products compose exactly
                    // to the product of the active sets.
                    Relation tightened = rij;
                    tightened.restrict_to(st.active[i], st.active[j]);
                    if (tightened.empty()) return finish(Verdict::Inconsistent);
                    if (tightened != rij) st.write(i, j, std::move(tightened));
                } else {
                    Relation tightened = rij & compose(st.at(i, k), st.at(k, j));
                    if (tightened.empty()) return finish(Verdict::Inconsistent);
                    if (tightened != rij) st.write(i, j, std::move(tightened));
                }
            }
        }
    }
    return finish(Verdict::Processed);
}

Extraction extract_solution(const SolveOutcome& out, const Ordering& order) {
    if (out.verdict != Verdict::Processed)
        throw std::logic_error("extract_solution: outcome is not Processed");
    const Network& n = out.network;
    require_cover(n, order);
    Extraction ex;
    Assignment a(n.variable_count());
    for (int kp = 0; kp < n.variable_count(); ++kp) {
        const int v = order.at(kp);
        ValueSet candidates = n.active(v);
        for (int u : n.neighbors(v)) {
            if (order.position_of(u) >= kp) continue;
            candidates &= n.constraint(u, v).image_of(a.value(u));
        }
        if (candidates.empty()) {
            ex.failed_variable = v;
            return ex;
        }
        a.bind(v, candidates.first());
    }
    ex.solution = std::move(a);
    return ex;
}

Ordering default_order(const Network& n) {
    if (auto peo = find_peo(ConstraintGraph::of(n))) return peo->reversed();
    return Ordering::identity(n.variable_count());
}

}  // namespace dpcstar

#include "dpcstar/graph.hpp"

#include <algorithm>

namespace dpcstar {

Ordering::Ordering(std::vector<int> sequence) : seq_(std::move(sequence)) {
    pos_.assign(seq_.size(), -1);
    for (std::size_t p = 0; p < seq_.size(); ++p) {
        int v = seq_[p];
        if (v < 0 || v >= int(seq_.size()) || pos_[v] != -1)
            throw std::invalid_argument("Ordering: not a permutation");
        pos_[v] = int(p);
    }
}

Ordering Ordering::identity(int n) {
    std::vector<int> seq(n);
    for (int i = 0; i < n; ++i) seq[i] = i;
    return Ordering(std::move(seq));
}

Ordering Ordering::reversed() const {
    std::vector<int> seq(seq_.rbegin(), seq_.rend());
    return Ordering(std::move(seq));
}

ConstraintGraph::ConstraintGraph(int vertices) {
    adj_.reserve(vertices);
    for (int i = 0; i < vertices; ++i) adj_.emplace_back(vertices);
}

ConstraintGraph ConstraintGraph::of(const Network& n) {
    ConstraintGraph g(n.variable_count());
    for (auto [i, j] : n.constraint_scopes()) g.add_edge(i, j);
    return g;
}

void ConstraintGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("ConstraintGraph: self-loop");
    adj_.at(u).insert(v);
    adj_.at(v).insert(u);
}

std::vector<std::pair<int, int>> ConstraintGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

int ConstraintGraph::edge_count() const {
    int c = 0;
    for (const auto& a : adj_) c += a.count();
    return c / 2;
}

bool is_peo(const ConstraintGraph& g, const Ordering& elimination) {
    if (elimination.size() != g.vertex_count())
        throw std::invalid_argument("is_peo: ordering does not cover the vertices");
    const int n = g.vertex_count();
    for (int p = 0; p < n; ++p) {
        int v = elimination.at(p);
        std::vector<int> later;
        g.adjacency(v).for_each([&](int w) {
            if (elimination.position_of(w) > p) later.push_back(w);
        });
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                if (!g.adjacent(later[a], later[b])) return false;
    }
    return true;
}

std::vector<int> mcs_order(const ConstraintGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> weight(n, 0), order;
    std::vector<bool> visited(n, false);
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!visited[v] && (best < 0 || weight[v] > weight[best])) best = v;
        visited[best] = true;
        order.push_back(best);
        g.adjacency(best).for_each([&](int w) {
            if (!visited[w]) ++weight[w];
        });
    }
    return order;
}

std::optional<Ordering> find_peo(const ConstraintGraph& g) {
    std::vector<int> order = mcs_order(g);
    std::reverse(order.begin(), order.end());
    Ordering peo(std::move(order));
    if (is_peo(g, peo)) return peo;
    return std::nullopt;
}

bool is_triangulated(const ConstraintGraph& g) {
    return find_peo(g).has_value();
}

namespace {

// Shared elimination simulation; returns the max earlier-neighbor count and,
// when out != nullptr, accumulates fill edges there.
int simulate_elimination(const ConstraintGraph& g, const Ordering& ord, ConstraintGraph* out) {
    if (ord.size() != g.vertex_count())
        throw std::invalid_argument("ordering does not cover the vertices");
    const int n = g.vertex_count();
    std::vector<ValueSet> adj;
    adj.reserve(n);
    for (int v = 0; v < n; ++v) adj.push_back(g.adjacency(v));
    int width = 0;
    for (int p = n - 1; p >= 0; --p) {
        int v = ord.at(p);
        std::vector<int> earlier;
        adj[v].for_each([&](int w) {
            if (ord.position_of(w) < p) earlier.push_back(w);
        });
        width = std::max(width, int(earlier.size()));
        for (std::size_t a = 0; a < earlier.size(); ++a)
            for (std::size_t b = a + 1; b < earlier.size(); ++b) {
                adj[earlier[a]].insert(earlier[b]);
                adj[earlier[b]].insert(earlier[a]);
                if (out) out->add_edge(earlier[a], earlier[b]);
            }
    }
    return width;
}

}  // namespace

ConstraintGraph fill_along(const ConstraintGraph& g, const Ordering& ord) {
    ConstraintGraph out(g.vertex_count());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    simulate_elimination(g, ord, &out);
    return out;
}

int induced_width(const ConstraintGraph& g, const Ordering& ord) {
    return simulate_elimination(g, ord, nullptr);
}

}  // namespace dpcstar

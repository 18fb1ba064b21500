#include "dpcstar/generators.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "dpcstar/oracle.hpp"

namespace dpcstar {

namespace {

struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Lemire bounded draw; bias is negligible at these ranges.
    int below(int n) { return int((unsigned __int128)next() * (unsigned)n >> 64); }
};

Domain make_domain(const std::string& name, int d) {
    Domain dom;
    dom.name = name;
    for (int v = 0; v < d; ++v) dom.values.push_back(std::to_string(v));
    return dom;
}

Network blank_network(int n, int d) {
    Network net;
    for (int v = 0; v < n; ++v) {
        std::string name = "v" + std::to_string(v + 1);
        net.add_variable(name, make_domain(name, d));
    }
    return net;
}

std::vector<std::pair<int, int>> pick_scopes(int n, double density, SplitMix& rng) {
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
    for (std::size_t i = all.size(); i > 1; --i)
        std::swap(all[i - 1], all[rng.below(int(i))]);
    const int want = int(std::ceil(density * (double(n) * (n - 1) / 2.0)));
    all.resize(std::min<std::size_t>(all.size(), std::max(0, want)));
    std::sort(all.begin(), all.end());
    return all;
}

long target_tuples(int d, double looseness) {
    long t = std::lround(looseness * double(d) * d);
    return std::clamp(t, 1L, long(d) * d);
}

ValueSet random_subtree(const TreeDomain& t, SplitMix& rng, int max_size) {
    ValueSet s(t.size());
    int root = rng.below(t.size());
    s.insert(root);
    std::vector<int> frontier(t.neighbors(root));
    int want = 1 + rng.below(std::max(1, max_size));
    while (s.count() < want && !frontier.empty()) {
        int pick = rng.below(int(frontier.size()));
        int v = frontier[pick];
        frontier.erase(frontier.begin() + pick);
        if (s.contains(v)) continue;
        s.insert(v);
        for (int u : t.neighbors(v))
            if (!s.contains(u)) frontier.push_back(u);
    }
    return s;
}

// Breadth-first order with parents, rooted at `root`.
std::pair<std::vector<int>, std::vector<int>> bfs_order(const TreeDomain& t, int root) {
    std::vector<int> order, parent(t.size(), -1);
    std::deque<int> queue{root};
    parent[root] = root;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        order.push_back(x);
        for (int y : t.neighbors(x))
            if (parent[y] < 0) {
                parent[y] = x;
                queue.push_back(y);
            }
    }
    return {order, parent};
}

// Monotone repair toward a total, doubly tree-preserving relation: every value
// gets a nonempty image, rows become subtrees, and rows across each tree edge
// stay connected; then the same on the inverse, until stable.
Relation repair_tree_preserving(Relation r, const TreeDomain& ti, const TreeDomain& tj,
                                int root_i, int root_j) {
    auto pass = [](Relation& rel, const TreeDomain& src, const TreeDomain& tgt,
                   int root) {
        bool changed = false;
        auto [order, parent] = bfs_order(src, root);
        for (int u : order) {
            if (!rel.image_of(u).empty()) continue;
            int donor = rel.image_of(parent[u]).first();
            rel.insert(u, donor);
            changed = true;
        }
        for (int u = 0; u < src.size(); ++u) {
            ValueSet row = rel.image_of(u);
            ValueSet spanned = tgt.span(row);
            if (spanned != row) {
                rel.insert_product(ValueSet::single(src.size(), u), spanned);
                changed = true;
            }
        }
        for (auto [u, v] : src.edges()) {
            ValueSet joint = rel.image_of(u) | rel.image_of(v);
            if (tgt.connected_subset(joint)) continue;
            ValueSet bridged = rel.image_of(u);
            bridged.insert(rel.image_of(v).first());
            rel.insert_product(ValueSet::single(src.size(), u), tgt.span(bridged));
            changed = true;
        }
        return changed;
    };
    bool changed = true;
    while (changed) {
        changed = pass(r, ti, tj, root_i);
        Relation inv = r.inverse();
        if (pass(inv, tj, ti, root_j)) {
            r = inv.inverse();
            changed = true;
        }
    }
    return r;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    SplitMix rng{seed ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xc2b2ae3d27d4eb4fULL)};
    rng.next();
    return rng.next();
}

MajorityTable gen_majority_op(int d, std::uint64_t seed) {
    if (d < 1) throw std::invalid_argument("gen_majority_op: empty domain");
    SplitMix rng{mix_seed(seed, 0x6d61, 0x6f70)};
    std::vector<int> table(std::size_t(d) * d * d);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                int& out = table[(std::size_t(x) * d + y) * d + z];
                if (x == y || x == z) out = x;
                else if (y == z) out = y;
                else out = rng.below(d);
            }
    return MajorityTable(d, std::move(table));
}

MajorityClosedInstance gen_majority_closed_network(const GenParams& p) {
    SplitMix rng{mix_seed(p.seed, 0x6d63, p.n)};
    MajorityClosedInstance out;
    out.network = blank_network(p.n, p.d);
    out.planted = Assignment(p.n);
    std::vector<MajorityTable> ops;
    for (int v = 0; v < p.n; ++v) {
        ops.push_back(gen_majority_op(p.d, mix_seed(p.seed, 0x6f70, v)));
        out.op.components[out.network.variable_name(v)] = ops.back();
        out.planted.bind(v, rng.below(p.d));
    }
    const long target = target_tuples(p.d, p.looseness);
    double loose_sum = 0;
    auto scopes = pick_scopes(p.n, p.density, rng);
    for (auto [i, j] : scopes) {
        Relation r(p.d, p.d);
        r.insert(out.planted.value(i), out.planted.value(j));
        int guard = 0;
        while (r.count() < target && guard++ < 8 * p.d * p.d)
            r.insert(rng.below(p.d), rng.below(p.d));
        r = close_under(std::move(r), ops[i], ops[j]);
        loose_sum += double(r.count()) / (double(p.d) * p.d);
        out.network.set_constraint(i, j, std::move(r));
    }
    out.achieved_looseness = scopes.empty() ? 0 : loose_sum / double(scopes.size());
    return out;
}

TreePreservingInstance gen_tree_preserving_network(const GenParams& p) {
    SplitMix rng{mix_seed(p.seed, 0x7470, p.n)};
    TreePreservingInstance out;
    out.network = blank_network(p.n, p.d);
    out.planted = Assignment(p.n);
    for (int v = 0; v < p.n; ++v) {
        std::vector<std::pair<int, int>> edges;
        for (int t = 1; t < p.d; ++t) edges.emplace_back(rng.below(t), t);
        out.trees.emplace_back(p.d, std::move(edges));
        out.planted.bind(v, rng.below(p.d));
    }
    const long target = target_tuples(p.d, p.looseness);
    const int block = std::max(1, int(std::lround(std::sqrt(double(target)))));
    double loose_sum = 0;
    auto scopes = pick_scopes(p.n, p.density, rng);
    for (auto [i, j] : scopes) {
        Relation r(p.d, p.d);
        r.insert(out.planted.value(i), out.planted.value(j));
        int guard = 0;
        while (r.count() < target && guard++ < 4 * p.d)
            r.insert_product(random_subtree(out.trees[i], rng, block),
                             random_subtree(out.trees[j], rng, block));
        r = repair_tree_preserving(std::move(r), out.trees[i], out.trees[j],
                                   out.planted.value(i), out.planted.value(j));
        if (!is_tree_preserving_total(r, out.trees[i], out.trees[j]) ||
            !is_tree_preserving_total(r.inverse(), out.trees[j], out.trees[i]))
            throw std::logic_error("gen_tree_preserving_network: repair failed");
        loose_sum += double(r.count()) / (double(p.d) * p.d);
        out.network.set_constraint(i, j, std::move(r));
    }
    out.achieved_looseness = scopes.empty() ? 0 : loose_sum / double(scopes.size());
    return out;
}

std::optional<Network> gen_inconsistent_variant(const Network& n,
                                                const MajorityOperation& op,
                                                std::uint64_t seed, int max_attempts) {
    SplitMix rng{mix_seed(seed, 0x6976, n.variable_count())};
    Network work = n;
    auto scopes = work.constraint_scopes();
    if (scopes.empty()) return std::nullopt;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        auto [i, j] = scopes[rng.below(int(scopes.size()))];
        Relation r = work.constraint(i, j);
        auto ts = r.tuples();
        if (ts.empty()) continue;
        auto [a, b] = ts[rng.below(int(ts.size()))];
        r.erase(a, b);
        r = close_under(std::move(r), op.components.at(work.domain(i).name),
                        op.components.at(work.domain(j).name));
        if (r.contains(a, b)) continue;  // closure restored the tuple
        work.set_constraint(i, j, std::move(r));
        if (!oracle_consistent(work)) return work;
    }
    return std::nullopt;
}

Network gen_random_network(const GenParams& p) {
    SplitMix rng{mix_seed(p.seed, 0x726e, p.n)};
    Network net = blank_network(p.n, p.d);
    const long target = target_tuples(p.d, p.looseness);
    for (auto [i, j] : pick_scopes(p.n, p.density, rng)) {
        Relation r(p.d, p.d);
        int guard = 0;
        while (r.count() < target && guard++ < 8 * p.d * p.d)
            r.insert(rng.below(p.d), rng.below(p.d));
        net.set_constraint(i, j, std::move(r));
    }
    return net;
}

}  // namespace dpcstar

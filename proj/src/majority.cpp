#include "dpcstar/majority.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace dpcstar {

MajorityTable::MajorityTable(int domain_size, std::vector<int> table)
    : d_(domain_size), table_(std::move(table)) {
    if (d_ < 0 || table_.size() != std::size_t(d_) * d_ * d_)
        throw std::invalid_argument("MajorityTable: table size mismatch");
    for (int v : table_)
        if (v < 0 || v >= d_) throw std::invalid_argument("MajorityTable: value out of range");
}

bool MajorityTable::satisfies_majority_axioms() const {
    for (int d = 0; d < d_; ++d)
        for (int e = 0; e < d_; ++e)
            if (apply(e, d, d) != d || apply(d, e, d) != d || apply(d, d, e) != d)
                return false;
    return true;
}

bool is_closed_under(const Relation& r, const MajorityTable& source_op,
                     const MajorityTable& target_op) {
    if (r.source_size() != source_op.domain_size() ||
        r.target_size() != target_op.domain_size())
        throw std::invalid_argument("is_closed_under: operation domain mismatch");
    const auto ts = r.tuples();
    const std::size_t m = ts.size();
    // Triples with a repeated tuple map to that tuple by the majority axioms.
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (b == a) continue;
            for (std::size_t c = 0; c < m; ++c) {
                if (c == a || c == b) continue;
                int x = source_op.apply(ts[a].first, ts[b].first, ts[c].first);
                int y = target_op.apply(ts[a].second, ts[b].second, ts[c].second);
                if (!r.contains(x, y)) return false;
            }
        }
    return true;
}

Relation close_under(Relation r, const MajorityTable& source_op,
                     const MajorityTable& target_op) {
    if (r.source_size() != source_op.domain_size() ||
        r.target_size() != target_op.domain_size())
        throw std::invalid_argument("close_under: operation domain mismatch");
    std::vector<std::pair<int, int>> ts = r.tuples();
    std::size_t fresh = 0;  // tuples at index >= fresh are new this round
    while (fresh < ts.size()) {
        const std::size_t begin_fresh = fresh, end = ts.size();
        fresh = end;
        for (std::size_t a = 0; a < end; ++a)
            for (std::size_t b = 0; b < end; ++b) {
                if (b == a) continue;
                for (std::size_t c = 0; c < end; ++c) {
                    if (c == a || c == b) continue;
                    if (a < begin_fresh && b < begin_fresh && c < begin_fresh) continue;
                    int x = source_op.apply(ts[a].first, ts[b].first, ts[c].first);
                    int y = target_op.apply(ts[a].second, ts[b].second, ts[c].second);
                    if (!r.contains(x, y)) {
                        r.insert(x, y);
                        ts.emplace_back(x, y);
                    }
                }
            }
    }
    return r;
}

TreeDomain::TreeDomain(int size, std::vector<std::pair<int, int>> edges)
    : size_(size), edges_(std::move(edges)), adj_(size) {
    if (size_ < 1) throw std::invalid_argument("TreeDomain: empty domain");
    if (int(edges_.size()) != size_ - 1)
        throw std::invalid_argument("TreeDomain: a tree needs exactly size-1 edges");
    for (auto [u, v] : edges_) {
        if (u < 0 || u >= size_ || v < 0 || v >= size_ || u == v)
            throw std::invalid_argument("TreeDomain: bad edge");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    ValueSet all(size_, true);
    if (!connected_subset(all)) throw std::invalid_argument("TreeDomain: not connected");
}

std::vector<int> TreeDomain::path(int u, int v) const {
    std::vector<int> parent(size_, -1);
    std::deque<int> queue{u};
    parent[u] = u;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == v) break;
        for (int y : adj_[x])
            if (parent[y] < 0) {
                parent[y] = x;
                queue.push_back(y);
            }
    }
    std::vector<int> out;
    for (int x = v; x != u; x = parent[x]) out.push_back(x);
    out.push_back(u);
    std::reverse(out.begin(), out.end());
    return out;
}

int TreeDomain::median(int a, int b, int c) const {
    ValueSet pab(size_), pbc(size_), pac(size_);
    for (int x : path(a, b)) pab.insert(x);
    for (int x : path(b, c)) pbc.insert(x);
    for (int x : path(a, c)) pac.insert(x);
    ValueSet inter = pab & pbc & pac;
    return inter.first();
}

bool TreeDomain::connected_subset(const ValueSet& s) const {
    if (s.universe() != size_) throw std::invalid_argument("TreeDomain: set size mismatch");
    int start = s.first();
    if (start < 0) return true;
    ValueSet seen(size_);
    seen.insert(start);
    std::deque<int> queue{start};
    int reached = 1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : adj_[x])
            if (s.contains(y) && !seen.contains(y)) {
                seen.insert(y);
                ++reached;
                queue.push_back(y);
            }
    }
    return reached == s.count();
}

ValueSet TreeDomain::span(const ValueSet& s) const {
    if (s.universe() != size_) throw std::invalid_argument("TreeDomain: set size mismatch");
    if (s.count() <= 1) return s;
    // Peel leaves outside s; what survives is the minimal spanning subtree.
    std::vector<int> degree(size_);
    std::vector<bool> alive(size_, true);
    for (int v = 0; v < size_; ++v) degree[v] = int(adj_[v].size());
    std::deque<int> peel;
    for (int v = 0; v < size_; ++v)
        if (degree[v] <= 1 && !s.contains(v)) peel.push_back(v);
    while (!peel.empty()) {
        int v = peel.front();
        peel.pop_front();
        alive[v] = false;
        for (int u : adj_[v])
            if (alive[u] && --degree[u] <= 1 && !s.contains(u)) peel.push_back(u);
    }
    ValueSet out(size_);
    for (int v = 0; v < size_; ++v)
        if (alive[v]) out.insert(v);
    return out;
}

MajorityTable standard_tree_majority(const TreeDomain& t) {
    const int d = t.size();
    std::vector<int> table(std::size_t(d) * d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                table[(std::size_t(a) * d + b) * d + c] = t.median(a, b, c);
    return MajorityTable(d, std::move(table));
}

bool is_tree_preserving(const Relation& r, const TreeDomain& source_tree,
                        const TreeDomain& target_tree) {
    if (r.source_size() != source_tree.size() || r.target_size() != target_tree.size())
        throw std::invalid_argument("is_tree_preserving: tree size mismatch");
    const int d = source_tree.size();
    if (d > 20)
        throw std::invalid_argument("is_tree_preserving: source domain too large to enumerate");
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << d); ++mask) {
        ValueSet s(d);
        for (int v = 0; v < d; ++v)
            if ((mask >> v) & 1) s.insert(v);
        if (!source_tree.connected_subset(s)) continue;
        if (!target_tree.connected_subset(r.image(s))) return false;
    }
    return true;
}

bool is_tree_preserving_total(const Relation& r, const TreeDomain& source_tree,
                              const TreeDomain& target_tree) {
    if (r.source_size() != source_tree.size() || r.target_size() != target_tree.size())
        throw std::invalid_argument("is_tree_preserving_total: tree size mismatch");
    for (int a = 0; a < r.source_size(); ++a)
        if (!target_tree.connected_subset(r.image_of(a))) return false;
    for (auto [u, v] : source_tree.edges())
        if (!target_tree.connected_subset(r.image_of(u) | r.image_of(v))) return false;
    return true;
}

TreeEquivalence tree_closure_equivalence(const Relation& r, const TreeDomain& ti,
                                         const TreeDomain& tj) {
    if (r.empty()) return TreeEquivalence::PreconditionFailed;
    ValueSet full_i(r.source_size(), true), full_j(r.target_size(), true);
    if (r.preimage(full_j) != full_i) return TreeEquivalence::PreconditionFailed;
    if (r.inverse().preimage(full_i) != full_j) return TreeEquivalence::PreconditionFailed;
    const bool closed =
        is_closed_under(r, standard_tree_majority(ti), standard_tree_majority(tj));
    const bool preserving = is_tree_preserving(r, ti, tj) &&
                            is_tree_preserving(r.inverse(), tj, ti);
    return closed == preserving ? TreeEquivalence::Agree : TreeEquivalence::Disagree;
}

namespace {

long encode(const std::vector<int>& tuple, const std::vector<int>& sizes) {
    long code = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) code = code * sizes[i] + tuple[i];
    return code;
}

void check_arity(const NaryRelation& r) {
    if (r.arity() < 1 || r.arity() > 4)
        throw std::invalid_argument("relation arity must be between 1 and 4");
    for (const auto& t : r.tuples) {
        if (int(t.size()) != r.arity())
            throw std::invalid_argument("tuple arity mismatch");
        for (std::size_t i = 0; i < t.size(); ++i)
            if (t[i] < 0 || t[i] >= r.domain_sizes[i])
                throw std::invalid_argument("tuple value out of range");
    }
}

}  // namespace

bool is_2_decomposable(const NaryRelation& r) {
    check_arity(r);
    const int m = r.arity();
    std::unordered_set<long> members;
    for (const auto& t : r.tuples) members.insert(encode(t, r.domain_sizes));
    std::vector<ValueSet> unary;
    for (int i = 0; i < m; ++i) unary.emplace_back(r.domain_sizes[i]);
    std::vector<std::vector<Relation>> binary(m, std::vector<Relation>(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            binary[i][j] = Relation(r.domain_sizes[i], r.domain_sizes[j]);
    for (const auto& t : r.tuples) {
        for (int i = 0; i < m; ++i) unary[i].insert(t[i]);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) binary[i][j].insert(t[i], t[j]);
    }
    std::vector<int> t(m, 0);
    while (true) {
        bool passes = true;
        for (int i = 0; i < m && passes; ++i)
            if (!unary[i].contains(t[i])) passes = false;
        for (int i = 0; i < m && passes; ++i)
            for (int j = i + 1; j < m && passes; ++j)
                if (!binary[i][j].contains(t[i], t[j])) passes = false;
        if (passes && !members.count(encode(t, r.domain_sizes))) return false;
        int i = 0;
        for (; i < m; ++i) {
            if (++t[i] < r.domain_sizes[i]) break;
            t[i] = 0;
        }
        if (i == m) break;
    }
    return true;
}

std::vector<std::pair<std::pair<int, int>, Relation>> binarize(const NaryRelation& r) {
    check_arity(r);
    std::vector<std::pair<std::pair<int, int>, Relation>> out;
    for (int i = 0; i < r.arity(); ++i)
        for (int j = i + 1; j < r.arity(); ++j) {
            Relation proj(r.domain_sizes[i], r.domain_sizes[j]);
            for (const auto& t : r.tuples) proj.insert(t[i], t[j]);
            out.push_back({{i, j}, std::move(proj)});
        }
    return out;
}

namespace {

using Key = std::vector<std::uint64_t>;

Key relation_key(const Relation& r) {
    Key k;
    k.reserve(2 + std::size_t(r.source_size()));
    k.push_back(std::uint64_t(r.source_size()));
    k.push_back(std::uint64_t(r.target_size()));
    for (auto [a, b] : r.tuples()) k.push_back((std::uint64_t(a) << 32) | std::uint64_t(b));
    return k;
}

Key set_key(const ValueSet& s) {
    return Key(s.words().begin(), s.words().end());
}

}  // namespace

Language binary_closure(const Language& l, int max_relations) {
    validate_language(l);
    Language out;
    out.domains = l.domains;

    std::map<std::pair<int, int>, std::set<Key>> seen_rel;
    std::map<int, std::set<Key>> seen_set;
    std::vector<Language::Entry> rels;
    std::vector<std::pair<int, ValueSet>> sets;  // (domain, unary set)

    auto add_rel = [&](int src, int tgt, Relation r) {
        if (seen_rel[{src, tgt}].insert(relation_key(r)).second) {
            rels.push_back({src, tgt, std::move(r)});
            if (int(rels.size()) > max_relations)
                throw ClosureCapExceeded("binary_closure: relation cap exceeded");
        }
    };
    auto add_set = [&](int dom, ValueSet s) {
        if (seen_set[dom].insert(set_key(s)).second) sets.emplace_back(dom, std::move(s));
    };

    for (const auto& e : l.relations) {
        add_rel(e.source, e.target, e.relation);
        for (auto [a, b] : e.relation.tuples()) {
            add_set(e.source, ValueSet::single(l.domains[e.source].size(), a));
            add_set(e.target, ValueSet::single(l.domains[e.target].size(), b));
        }
    }
    for (int d = 0; d < int(l.domains.size()); ++d)
        add_set(d, ValueSet(l.domains[d].size(), true));

    // Round-based fixpoint: combine everything, keeping only unseen results.
    std::size_t done_rels = 0, done_sets = 0;
    while (done_rels < rels.size() || done_sets < sets.size()) {
        const std::size_t rel_end = rels.size(), set_end = sets.size();
        for (std::size_t a = 0; a < rel_end; ++a) {
            const auto ea = rels[a];
            if (a >= done_rels) add_rel(ea.target, ea.source, ea.relation.inverse());
            for (std::size_t b = 0; b < rel_end; ++b) {
                if (a < done_rels && b < done_rels) continue;
                const Language::Entry eb = rels[b];  // copy: add_rel may reallocate
                if (ea.source == eb.source && ea.target == eb.target)
                    add_rel(ea.source, ea.target, ea.relation & eb.relation);
                if (ea.target == eb.source)
                    add_rel(ea.source, eb.target, compose(ea.relation, eb.relation));
            }
            for (std::size_t s = 0; s < set_end; ++s) {
                if (a < done_rels && s < done_sets) continue;
                const auto [dom, vs] = sets[s];  // copy: add_set may reallocate
                if (dom == ea.target) {
                    add_set(ea.source, ea.relation.preimage(vs));
                    Relation restricted = ea.relation;
                    restricted.restrict_to(ValueSet(l.domains[ea.source].size(), true), vs);
                    add_rel(ea.source, ea.target, std::move(restricted));
                }
                if (dom == ea.source) {
                    Relation restricted = ea.relation;
                    restricted.restrict_to(vs, ValueSet(l.domains[ea.target].size(), true));
                    add_rel(ea.source, ea.target, std::move(restricted));
                }
            }
        }
        done_rels = rel_end;
        done_sets = set_end;
    }

    out.relations = std::move(rels);
    return out;
}

}  // namespace dpcstar

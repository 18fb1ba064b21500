#include "dpcstar/oracle.hpp"

#include <cstdlib>

namespace dpcstar {

long long oracle_space_bound() {
    if (const char* env = std::getenv("DPCSTAR_MAX_ORACLE")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return 100'000'000LL;
}

namespace {

void check_space(const Network& n, long long bound) {
    if (bound == 0) bound = oracle_space_bound();
    long long space = 1;
    for (int v = 0; v < n.variable_count(); ++v) {
        space *= std::max(1, n.active(v).count());
        if (space > bound) throw OracleBoundExceeded("oracle: search space above bound");
    }
}

// Oriented lookup table so the search does not repeatedly invert relations.
struct ConstraintTable {
    std::vector<std::vector<std::pair<int, Relation>>> into;  // per variable: (earlier var, rel earlier->var)

    explicit ConstraintTable(const Network& n) : into(n.variable_count()) {
        for (auto [i, j] : n.constraint_scopes()) {
            into[j].emplace_back(i, n.constraint(i, j));
        }
    }
};

// Depth-first extension of `a` over the unbound variables, ascending values.
bool search(const Network& n, const ConstraintTable& table, Assignment& a, int v,
            long limit, std::vector<Assignment>* out) {
    const int nv = n.variable_count();
    while (v < nv && a.bound(v)) ++v;
    if (v == nv) {
        if (out) out->push_back(a);
        return !out || (limit >= 0 && long(out->size()) >= limit);
    }
    bool stop = false;
    n.active(v).for_each([&](int val) {
        if (stop) return;
        bool ok = true;
        for (const auto& [u, rel] : table.into[v])
            if (a.bound(u) && !rel.contains(a.value(u), val)) {
                ok = false;
                break;
            }
        // Pre-bound later variables (partial extension checks) still need their
        // constraints toward v honoured.
        if (ok) {
            for (int w = v + 1; w < nv && ok; ++w)
                for (const auto& [u, rel] : table.into[w]) {
                    if (u == v && a.bound(w) && !rel.contains(val, a.value(w))) {
                        ok = false;
                        break;
                    }
                }
        }
        if (!ok) return;
        a.bind(v, val);
        stop = search(n, table, a, v + 1, limit, out);
        a.unbind(v);
    });
    return stop;
}

}  // namespace

std::vector<Assignment> enumerate_solutions(const Network& n, long limit,
                                            long long space_bound) {
    check_space(n, space_bound);
    std::vector<Assignment> out;
    if (limit == 0) return out;
    Assignment a(n.variable_count());
    ConstraintTable table(n);
    search(n, table, a, 0, limit, &out);
    return out;
}

bool oracle_consistent(const Network& n, long long space_bound) {
    return !enumerate_solutions(n, 1, space_bound).empty();
}

bool extends_to_solution(const Network& n, const Assignment& partial,
                         long long space_bound) {
    if (!is_solution(n, partial)) return false;
    check_space(n, space_bound);
    Assignment a = partial;
    ConstraintTable table(n);
    return search(n, table, a, 0, 1, nullptr);
}

bool check_global_consistency(const Network& n, int max_subset, long long space_bound) {
    const int nv = n.variable_count();
    std::vector<int> subset;
    // Enumerate subsets of size 1..max_subset and all partial solutions on them.
    auto partials_ok = [&](const std::vector<int>& vars) {
        Assignment a(nv);
        // odometer over active values of `vars`
        std::vector<std::vector<int>> vals;
        for (int v : vars) vals.push_back(n.active(v).values());
        std::vector<std::size_t> idx(vars.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < vars.size(); ++i) a.bind(vars[i], vals[i][idx[i]]);
            if (is_solution(n, a) && !extends_to_solution(n, a, space_bound)) return false;
            std::size_t i = 0;
            for (; i < vars.size(); ++i) {
                if (++idx[i] < vals[i].size()) break;
                idx[i] = 0;
            }
            if (i == vars.size()) break;
        }
        return true;
    };
    // Recursive subset enumeration.
    auto rec = [&](auto&& self, int start) -> bool {
        if (!subset.empty() && !partials_ok(subset)) return false;
        if (int(subset.size()) == max_subset) return true;
        for (int v = start; v < nv; ++v) {
            if (n.active(v).empty()) continue;
            subset.push_back(v);
            if (!self(self, v + 1)) return false;
            subset.pop_back();
        }
        return true;
    };
    return rec(rec, 0);
}

NaryRelation solution_relation(const Network& n, long long space_bound) {
    NaryRelation r;
    for (int v = 0; v < n.variable_count(); ++v) r.domain_sizes.push_back(n.domain(v).size());
    for (const Assignment& a : enumerate_solutions(n, -1, space_bound)) {
        std::vector<int> t(n.variable_count());
        for (int v = 0; v < n.variable_count(); ++v) t[v] = a.value(v);
        r.tuples.push_back(std::move(t));
    }
    return r;
}

}  // namespace dpcstar

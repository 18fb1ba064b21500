#include "dpcstar/elimination.hpp"

#include <algorithm>
#include <map>

#include "dpcstar/oracle.hpp"

namespace dpcstar {

void validate_language(const Language& l) {
    for (const auto& e : l.relations) {
        if (e.source < 0 || e.source >= int(l.domains.size()) || e.target < 0 ||
            e.target >= int(l.domains.size()))
            throw std::invalid_argument("Language: relation endpoint out of range");
        if (e.relation.source_size() != l.domains[e.source].size() ||
            e.relation.target_size() != l.domains[e.target].size())
            throw std::invalid_argument("Language: relation shape does not match domains");
    }
}

Network eliminate(const Network& n, int x) {
    if (x < 0 || x >= n.variable_count())
        throw std::invalid_argument("eliminate: unknown variable");
    const std::vector<int> incident = n.neighbors(x);
    std::vector<int> keep;
    std::vector<int> remap(n.variable_count(), -1);
    for (int v = 0; v < n.variable_count(); ++v)
        if (v != x) {
            remap[v] = int(keep.size());
            keep.push_back(v);
        }
    Network out = n.restricted(keep);
    if (incident.size() == 1) {
        const int i = incident[0];
        out.restrict_active(remap[i], n.constraint(i, x).preimage(n.active(x)));
    } else if (incident.size() >= 2) {
        for (std::size_t a = 0; a < incident.size(); ++a)
            for (std::size_t b = a + 1; b < incident.size(); ++b) {
                const int i = incident[a], j = incident[b];
                Relation composed = compose(n.constraint(i, x), n.constraint(x, j));
                out.set_constraint(remap[i], remap[j],
                                   n.constraint_or_universal(i, j) & composed);
            }
    }
    return out;
}

VepCheck check_vep_instance(const Network& n, int x, bool weak, long long space_bound) {
    if (x < 0 || x >= n.variable_count())
        throw std::invalid_argument("check_vep_instance: unknown variable");
    const std::vector<int> incident = n.neighbors(x);
    if (weak) {
        for (int i : incident)
            if (!n.active(x).subset_of(n.constraint(x, i).preimage(n.active(i))))
                return {};  // side condition fails; holds vacuously
    }
    Network reduced = eliminate(n, x);
    // Map reduced indices back to n's indices (order is preserved).
    std::vector<int> back;
    for (int v = 0; v < n.variable_count(); ++v)
        if (v != x) back.push_back(v);
    for (const Assignment& sol : enumerate_solutions(reduced, -1, space_bound)) {
        ValueSet candidates = n.active(x);
        for (int i : incident)
            candidates &= n.constraint(i, x).image_of(sol.value(
                int(std::lower_bound(back.begin(), back.end(), i) - back.begin())));
        if (candidates.empty()) return {.holds = false, .counterexample = sol};
    }
    return {};
}

HellyCheck check_helly(const Language& l) {
    validate_language(l);
    for (int t = 0; t < int(l.domains.size()); ++t) {
        // Deduplicated nonempty images into domain t, with a representative
        // (relation, source value) for each distinct set.
        std::vector<ValueSet> sets;
        std::vector<HellyCheck::Item> reps;
        std::map<std::vector<std::uint64_t>, bool> seen;
        for (int r = 0; r < int(l.relations.size()); ++r) {
            const auto& e = l.relations[r];
            if (e.target != t) continue;
            for (int a = 0; a < e.relation.source_size(); ++a) {
                ValueSet img = e.relation.image_of(a);
                if (img.empty()) continue;
                std::vector<std::uint64_t> key(img.words().begin(), img.words().end());
                if (seen.emplace(std::move(key), true).second) {
                    sets.push_back(std::move(img));
                    reps.push_back({r, a});
                }
            }
        }
        const int m = int(sets.size());
        if (m < 3) continue;
        std::vector<std::vector<bool>> meets(m, std::vector<bool>(m));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) meets[a][b] = sets[a].intersects(sets[b]);
        const int depth_cap = std::min(m, l.domains[t].size());
        std::vector<int> chosen;
        // DFS over pairwise-intersecting subfamilies; the first empty running
        // intersection at size >= 3 is a witness.
        auto dfs = [&](auto&& self, int start, const ValueSet& inter) -> bool {
            for (int c = start; c < m; ++c) {
                bool pairwise = true;
                for (int p : chosen)
                    if (!meets[p][c]) {
                        pairwise = false;
                        break;
                    }
                if (!pairwise) continue;
                ValueSet next = inter & sets[c];
                chosen.push_back(c);
                if (int(chosen.size()) >= 3 && next.empty()) return true;
                if (int(chosen.size()) < depth_cap && self(self, c + 1, next)) return true;
                chosen.pop_back();
            }
            return false;
        };
        ValueSet full(l.domains[t].size(), true);
        if (dfs(dfs, 0, full)) {
            HellyCheck out;
            out.holds = false;
            out.target_domain = t;
            for (int c : chosen) out.witness.push_back(reps[c]);
            return out;
        }
    }
    return {};
}

}  // namespace dpcstar

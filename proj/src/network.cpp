#include "dpcstar/network.hpp"

#include <algorithm>
#include <set>

namespace dpcstar {

int Network::add_variable(std::string name, Domain domain) {
    if (variable_index(name) >= 0)
        throw std::invalid_argument("Network: duplicate variable " + name);
    std::set<std::string> seen(domain.values.begin(), domain.values.end());
    if (int(seen.size()) != domain.size())
        throw std::invalid_argument("Network: duplicate values in domain " + domain.name);
    names_.push_back(std::move(name));
    active_.emplace_back(domain.size(), true);
    domains_.push_back(std::move(domain));
    return int(names_.size()) - 1;
}

int Network::variable_index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return int(i);
    return -1;
}

void Network::check_var(int v) const {
    if (v < 0 || v >= variable_count())
        throw std::out_of_range("Network: variable index out of range");
}

std::pair<int, int> Network::key(int i, int j) const {
    check_var(i);
    check_var(j);
    if (i == j) throw std::invalid_argument("Network: self-loop scope");
    return {std::min(i, j), std::max(i, j)};
}

void Network::set_active(int v, ValueSet s) {
    check_var(v);
    if (s.universe() != domain(v).size())
        throw std::invalid_argument("Network: active set size mismatch");
    active_[v] = std::move(s);
}

void Network::restrict_active(int v, const ValueSet& keep) {
    check_var(v);
    active_[v] &= keep;
}

bool Network::has_constraint(int i, int j) const {
    return constraints_.count(key(i, j)) != 0;
}

Relation Network::constraint(int i, int j) const {
    auto it = constraints_.find(key(i, j));
    if (it == constraints_.end())
        throw std::invalid_argument("Network: no constraint between " + names_.at(i) +
                                    " and " + names_.at(j));
    return i < j ? it->second : it->second.inverse();
}

Relation Network::constraint_or_universal(int i, int j) const {
    auto it = constraints_.find(key(i, j));
    if (it == constraints_.end()) return Relation::product(active_[i], active_[j]);
    return i < j ? it->second : it->second.inverse();
}

void Network::set_constraint(int i, int j, Relation r) {
    auto k = key(i, j);
    if (r.source_size() != domain(i).size() || r.target_size() != domain(j).size())
        throw std::invalid_argument("Network: relation dimensions do not match domains");
    constraints_[k] = (i < j) ? std::move(r) : r.inverse();
}

void Network::remove_constraint(int i, int j) {
    constraints_.erase(key(i, j));
}

std::vector<std::pair<int, int>> Network::constraint_scopes() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(constraints_.size());
    for (const auto& [k, r] : constraints_) out.push_back(k);
    return out;
}

std::vector<int> Network::neighbors(int v) const {
    check_var(v);
    std::vector<int> out;
    for (const auto& [k, r] : constraints_) {
        if (k.first == v) out.push_back(k.second);
        else if (k.second == v) out.push_back(k.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Network::trivially_inconsistent() const {
    for (const auto& a : active_)
        if (a.empty()) return true;
    for (const auto& [k, r] : constraints_)
        if (r.empty()) return true;
    return false;
}

Network Network::restricted(const std::vector<int>& variables) const {
    Network out;
    std::vector<int> remap(variable_count(), -1);
    for (int v : variables) {
        check_var(v);
        if (remap[v] >= 0) throw std::invalid_argument("Network: duplicate variable in restriction");
        remap[v] = out.add_variable(names_[v], domains_[v]);
        out.active_[remap[v]] = active_[v];
    }
    for (const auto& [k, r] : constraints_) {
        int i = remap[k.first], j = remap[k.second];
        if (i >= 0 && j >= 0) out.set_constraint(i, j, r);
    }
    return out;
}

bool is_solution(const Network& n, const Assignment& a) {
    if (a.size() != n.variable_count())
        throw std::invalid_argument("is_solution: assignment references unknown variables");
    for (int v = 0; v < n.variable_count(); ++v)
        if (a.bound(v) && !n.active(v).contains(a.value(v))) return false;
    for (auto [i, j] : n.constraint_scopes()) {
        if (!a.bound(i) || !a.bound(j)) continue;
        if (!n.constraint(i, j).contains(a.value(i), a.value(j))) return false;
    }
    return true;
}

}  // namespace dpcstar

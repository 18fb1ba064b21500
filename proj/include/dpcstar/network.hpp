#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpcstar/relation.hpp"

namespace dpcstar {

/// A named finite domain. The order of the value labels fixes matrix indexing.
struct Domain {
    std::string name;
    std::vector<std::string> values;

    int size() const { return int(values.size()); }
    /// Index of a label, -1 when unknown.
    int index_of(std::string_view label) const {
        for (std::size_t i = 0; i < values.size(); ++i)
            if (values[i] == label) return int(i);
        return -1;
    }
    bool operator==(const Domain&) const = default;
};

/// Partial map from variable index to value index (-1 = unbound).
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(int variable_count) : values_(variable_count, -1) {}

    int size() const { return int(values_.size()); }
    bool bound(int v) const { return values_.at(v) >= 0; }
    int value(int v) const { return values_.at(v); }
    void bind(int v, int value) { values_.at(v) = value; }
    void unbind(int v) { values_.at(v) = -1; }
    int bound_count() const {
        int c = 0;
        for (int x : values_) c += (x >= 0);
        return c;
    }
    bool total() const {
        for (int x : values_) if (x < 0) return false;
        return true;
    }
    bool operator==(const Assignment&) const = default;

private:
    std::vector<int> values_;
};

/// Binary constraint network: variables with per-variable domains, an active-value
/// set per variable, and at most one constraint per unordered pair of variables.
/// The store is canonical in the lower variable index; reading the opposite
/// orientation always yields the inverse relation. Missing constraints are
/// implicitly universal (over the active sets) and never materialized here.
class Network {
public:
    int add_variable(std::string name, Domain domain);

    int variable_count() const { return int(names_.size()); }
    const std::string& variable_name(int v) const { return names_.at(v); }
    /// Index of a variable name, -1 when unknown.
    int variable_index(std::string_view name) const;
    const Domain& domain(int v) const { return domains_.at(v); }

    const ValueSet& active(int v) const { return active_.at(v); }
    void set_active(int v, ValueSet s);
    void restrict_active(int v, const ValueSet& keep);

    bool has_constraint(int i, int j) const;
    /// The relation oriented i -> j; throws when absent.
    Relation constraint(int i, int j) const;
    /// As above, with absent pairs read as the product of the active sets.
    Relation constraint_or_universal(int i, int j) const;
    void set_constraint(int i, int j, Relation r);
    void remove_constraint(int i, int j);

    /// Canonical scopes (i < j), ascending.
    std::vector<std::pair<int, int>> constraint_scopes() const;
    std::vector<int> neighbors(int v) const;

    /// Some active set or some stored relation is empty.
    bool trivially_inconsistent() const;

    /// Subnetwork over the given variables (kept in the given order); keeps
    /// exactly the constraints with both endpoints retained.
    Network restricted(const std::vector<int>& variables) const;

    bool operator==(const Network&) const = default;

private:
    void check_var(int v) const;
    std::pair<int, int> key(int i, int j) const;

    std::vector<std::string> names_;
    std::vector<Domain> domains_;
    std::vector<ValueSet> active_;
    std::map<std::pair<int, int>, Relation> constraints_;
};

/// True iff every bound value is active and every constraint whose scope is
/// fully bound is satisfied; partial assignments check partial solutions.
bool is_solution(const Network& n, const Assignment& a);

}  // namespace dpcstar

#include "dpcstar/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dpcstar {

namespace {

using Json = nlohmann::ordered_json;

int label_index(const Domain& dom, const std::string& label, const char* where) {
    int idx = dom.index_of(label);
    if (idx < 0)
        throw ParseError(std::string(where) + ": unknown value label '" + label +
                         "' in domain " + dom.name);
    return idx;
}

}  // namespace

NetworkFile parse_network_file(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("variables") || !doc.contains("domains"))
        throw ParseError("network file needs 'variables' and 'domains'");

    NetworkFile out;
    for (const auto& v : doc.at("variables")) {
        std::string name = v.get<std::string>();
        const auto& dom = doc.at("domains");
        if (!dom.contains(name)) throw ParseError("no domain for variable " + name);
        Domain d;
        d.name = name;
        for (const auto& label : dom.at(name)) d.values.push_back(label.get<std::string>());
        if (d.values.empty()) throw ParseError("empty domain for variable " + name);
        try {
            out.network.add_variable(name, std::move(d));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }

    if (doc.contains("constraints")) {
        for (const auto& c : doc.at("constraints")) {
            const auto& scope = c.at("scope");
            if (scope.size() != 2) throw ParseError("constraint scope must have two variables");
            int i = out.network.variable_index(scope[0].get<std::string>());
            int j = out.network.variable_index(scope[1].get<std::string>());
            if (i < 0 || j < 0) throw ParseError("constraint scope names unknown variable");
            if (i == j) throw ParseError("constraint scope is a self-loop");
            if (out.network.has_constraint(i, j))
                throw ParseError("duplicate constraint between " +
                                 out.network.variable_name(i) + " and " +
                                 out.network.variable_name(j));
            Relation r(out.network.domain(i).size(), out.network.domain(j).size());
            for (const auto& t : c.at("tuples")) {
                if (t.size() != 2) throw ParseError("constraint tuple must have two labels");
                r.insert(label_index(out.network.domain(i), t[0].get<std::string>(), "tuple"),
                         label_index(out.network.domain(j), t[1].get<std::string>(), "tuple"));
            }
            out.network.set_constraint(i, j, std::move(r));
        }
    }

    if (doc.contains("trees")) {
        for (const auto& [name, edges] : doc.at("trees").items()) {
            int v = out.network.variable_index(name);
            if (v < 0) throw ParseError("tree for unknown variable " + name);
            const Domain& dom = out.network.domain(v);
            std::vector<std::pair<int, int>> es;
            for (const auto& e : edges) {
                if (e.size() != 2) throw ParseError("tree edge must have two labels");
                es.emplace_back(label_index(dom, e[0].get<std::string>(), "tree"),
                                label_index(dom, e[1].get<std::string>(), "tree"));
            }
            try {
                out.trees.emplace(name, TreeDomain(dom.size(), std::move(es)));
            } catch (const std::invalid_argument& e) {
                throw ParseError("tree for " + name + ": " + e.what());
            }
        }
    }

    if (doc.contains("majority")) {
        for (const auto& [name, table] : doc.at("majority").items()) {
            int v = out.network.variable_index(name);
            if (v < 0) throw ParseError("majority table for unknown domain " + name);
            const Domain& dom = out.network.domain(v);
            const std::size_t d = dom.size();
            if (table.size() != d * d * d)
                throw ParseError("majority table for " + name + " must have d^3 entries");
            std::vector<int> entries;
            entries.reserve(table.size());
            for (const auto& label : table)
                entries.push_back(label_index(dom, label.get<std::string>(), "majority"));
            MajorityTable op(dom.size(), std::move(entries));
            if (!op.satisfies_majority_axioms())
                throw ParseError("majority table for " + name + " violates the majority axioms");
            out.majority.components.emplace(name, std::move(op));
        }
    }
    return out;
}

std::string serialize_network_file(const NetworkFile& f) {
    const Network& n = f.network;
    Json doc;
    doc["variables"] = Json::array();
    for (int v = 0; v < n.variable_count(); ++v)
        doc["variables"].push_back(n.variable_name(v));
    doc["domains"] = Json::object();
    for (int v = 0; v < n.variable_count(); ++v)
        doc["domains"][n.variable_name(v)] = n.domain(v).values;
    doc["constraints"] = Json::array();
    for (auto [i, j] : n.constraint_scopes()) {
        Json c;
        c["scope"] = {n.variable_name(i), n.variable_name(j)};
        c["tuples"] = Json::array();
        for (auto [a, b] : n.constraint(i, j).tuples())
            c["tuples"].push_back({n.domain(i).values[a], n.domain(j).values[b]});
        doc["constraints"].push_back(std::move(c));
    }
    if (!f.trees.empty()) {
        doc["trees"] = Json::object();
        for (const auto& [name, tree] : f.trees) {
            int v = n.variable_index(name);
            if (v < 0) throw std::invalid_argument("serialize: tree for unknown variable");
            Json edges = Json::array();
            for (auto [a, b] : tree.edges())
                edges.push_back({n.domain(v).values[a], n.domain(v).values[b]});
            doc["trees"][name] = std::move(edges);
        }
    }
    if (!f.majority.components.empty()) {
        doc["majority"] = Json::object();
        for (const auto& [name, op] : f.majority.components) {
            int v = n.variable_index(name);
            if (v < 0) throw std::invalid_argument("serialize: majority table for unknown domain");
            Json table = Json::array();
            for (int entry : op.table()) table.push_back(n.domain(v).values[entry]);
            doc["majority"][name] = std::move(table);
        }
    }
    return doc.dump(2) + "\n";
}

NetworkFile load_network_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_network_file(buf.str());
}

void save_network_file(const NetworkFile& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_network_file(f);
}

}  // namespace dpcstar

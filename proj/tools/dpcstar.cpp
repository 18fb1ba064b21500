// Command-line surface for the directional path-consistency toolkit:
//   solve  - run dpc / dpcstar / pc / oracle on a network file
//   check  - structural and language properties with witnesses
//   gen    - seeded random instance families
//   bench  - parameter sweeps as CSV
//
// Orderings given as explicit lists are elimination orders (first name is
// eliminated first); the algorithms receive the reverse.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dpcstar/bench.hpp"
#include "dpcstar/consistency.hpp"
#include "dpcstar/dpc.hpp"
#include "dpcstar/io.hpp"
#include "dpcstar/oracle.hpp"

namespace {

using namespace dpcstar;

constexpr int kExitConsistent = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExtraction = 3;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

// "declaration", "reverse-mcs", or a comma-separated elimination order.
Ordering resolve_order(const Network& n, const std::string& spec) {
    if (spec == "declaration") return Ordering::identity(n.variable_count());
    if (spec == "reverse-mcs") return default_order(n);
    std::vector<int> elimination;
    for (const auto& name : split(spec, ',')) {
        int v = n.variable_index(name);
        if (v < 0) throw std::invalid_argument("order names unknown variable " + name);
        elimination.push_back(v);
    }
    return Ordering(std::move(elimination)).reversed();
}

void print_assignment(const Network& n, const Assignment& a) {
    for (int v = 0; v < n.variable_count(); ++v)
        std::cout << "  " << n.variable_name(v) << " = "
                  << n.domain(v).values[a.value(v)] << "\n";
}

int cmd_solve(const std::string& file, const std::string& algo,
              const std::string& order_spec, bool extract) {
    NetworkFile nf = load_network_file(file);
    Network& net = nf.network;
    if (algo == "oracle") {
        bool ok = oracle_consistent(net);
        std::cout << (ok ? "Consistent" : "Inconsistent") << "\n";
        return ok ? kExitConsistent : kExitInconsistent;
    }
    if (algo == "pc") {
        bool ok = enforce_strong_pc(net) == Propagation::Ok;
        std::cout << (ok ? "Ok" : "Inconsistent") << "\n";
        return ok ? kExitConsistent : kExitInconsistent;
    }
    const Ordering order = resolve_order(net, order_spec);
    SolveOutcome out = algo == "dpc" ? dpc(net, order) : dpc_star(net, order);
    if (out.verdict == Verdict::Inconsistent) {
        std::cout << "Inconsistent\n";
        return kExitInconsistent;
    }
    if (extract) {
        if (algo != "dpcstar") {
            std::cerr << "--extract is only meaningful with --algo dpcstar\n";
            return kExitUsage;
        }
        Extraction ex = extract_solution(out, order);
        if (!ex.solution) {
            std::cerr << "extraction failed at variable "
                      << out.network.variable_name(ex.failed_variable)
                      << ": empty candidate set (input not majority-closed, or "
                         "ordering misuse)\n";
            return kExitExtraction;
        }
        if (!is_solution(nf.network, *ex.solution))
            throw std::logic_error("extracted assignment failed verification");
        std::cout << "Processed\n";
        print_assignment(out.network, *ex.solution);
        return kExitConsistent;
    }
    std::cout << "Processed\n";
    return kExitConsistent;
}

int cmd_check(const std::string& file, const std::string& property,
              const std::string& order_spec) {
    NetworkFile nf = load_network_file(file);
    const Network& net = nf.network;
    const ConstraintGraph graph = ConstraintGraph::of(net);

    auto tree_for = [&](int v) -> const TreeDomain& {
        auto it = nf.trees.find(net.variable_name(v));
        if (it == nf.trees.end())
            throw ParseError("missing tree for variable " + net.variable_name(v));
        return it->second;
    };
    auto majority_for = [&](int v) -> const MajorityTable& {
        auto it = nf.majority.components.find(net.domain(v).name);
        if (it == nf.majority.components.end())
            throw ParseError("missing majority table for domain " + net.domain(v).name);
        return it->second;
    };

    if (property == "chordal") {
        auto peo = find_peo(graph);
        std::cout << "chordal: " << (peo ? "true" : "false") << "\n";
        if (peo) {
            std::cout << "peo:";
            for (int v : peo->sequence()) std::cout << " " << net.variable_name(v);
            std::cout << "\n";
        }
        return peo ? 0 : 1;
    }
    if (property == "peo") {
        if (order_spec.empty()) throw ParseError("property peo needs --order");
        std::vector<int> seq;
        for (const auto& name : split(order_spec, ',')) {
            int v = net.variable_index(name);
            if (v < 0) throw ParseError("order names unknown variable " + name);
            seq.push_back(v);
        }
        bool ok = is_peo(graph, Ordering(std::move(seq)));
        std::cout << "peo: " << (ok ? "true" : "false") << "\n";
        return ok ? 0 : 1;
    }
    if (property == "strongly-dpc") {
        if (order_spec.empty()) throw ParseError("property strongly-dpc needs --order");
        bool ok = is_strongly_dpc(net, resolve_order(net, order_spec));
        std::cout << "strongly-dpc: " << (ok ? "true" : "false") << "\n";
        return ok ? 0 : 1;
    }
    if (property == "helly") {
        Language lang;
        for (int v = 0; v < net.variable_count(); ++v) lang.domains.push_back(net.domain(v));
        for (auto [i, j] : net.constraint_scopes())
            lang.relations.push_back({i, j, net.constraint(i, j)});
        HellyCheck res = check_helly(lang);
        std::cout << "helly: " << (res.holds ? "holds" : "witness") << "\n";
        if (!res.holds) {
            for (const auto& item : res.witness) {
                const auto& e = lang.relations[item.relation_index];
                std::cout << "  relation " << net.variable_name(e.source) << "->"
                          << net.variable_name(e.target) << " at value "
                          << net.domain(e.source).values[item.source_value] << "\n";
            }
        }
        return res.holds ? 0 : 1;
    }
    if (property == "majority-closed") {
        for (auto [i, j] : net.constraint_scopes()) {
            if (!is_closed_under(net.constraint(i, j), majority_for(i), majority_for(j))) {
                std::cout << "majority-closed: false (constraint "
                          << net.variable_name(i) << "," << net.variable_name(j)
                          << ")\n";
                return 1;
            }
        }
        std::cout << "majority-closed: true\n";
        return 0;
    }
    if (property == "tree-preserving") {
        for (auto [i, j] : net.constraint_scopes()) {
            if (net.domain(i).size() > 16 || net.domain(j).size() > 16)
                throw ParseError("tree-preserving check limited to domains of size <= 16");
            const Relation r = net.constraint(i, j);
            if (!is_tree_preserving(r, tree_for(i), tree_for(j)) ||
                !is_tree_preserving(r.inverse(), tree_for(j), tree_for(i))) {
                std::cout << "tree-preserving: false (constraint "
                          << net.variable_name(i) << "," << net.variable_name(j)
                          << ")\n";
                return 1;
            }
        }
        std::cout << "tree-preserving: true\n";
        return 0;
    }
    if (property == "2decomposable") {
        if (net.variable_count() > 4)
            throw ParseError("2decomposable checks the solution relation; at most 4 variables");
        bool ok = is_2_decomposable(solution_relation(net));
        std::cout << "2decomposable: " << (ok ? "true" : "false") << "\n";
        return ok ? 0 : 1;
    }
    throw ParseError("unknown property " + property);
}

int cmd_gen(const std::string& family, const GenParams& params, bool inconsistent,
            const std::string& out_path) {
    NetworkFile nf;
    if (family == "majority-closed") {
        MajorityClosedInstance inst = gen_majority_closed_network(params);
        nf.network = std::move(inst.network);
        nf.majority = std::move(inst.op);
        if (inconsistent) {
            auto variant = gen_inconsistent_variant(nf.network, nf.majority, params.seed + 1);
            if (!variant) {
                std::cerr << "could not derive an inconsistent variant\n";
                return 1;
            }
            nf.network = std::move(*variant);
        }
        std::cerr << "achieved looseness " << inst.achieved_looseness << "\n";
    } else if (family == "tree-preserving") {
        if (inconsistent) {
            std::cerr << "--inconsistent is only supported for family majority-closed\n";
            return kExitUsage;
        }
        TreePreservingInstance inst = gen_tree_preserving_network(params);
        nf.network = std::move(inst.network);
        for (int v = 0; v < nf.network.variable_count(); ++v)
            nf.trees.emplace(nf.network.variable_name(v), inst.trees[v]);
        std::cerr << "achieved looseness " << inst.achieved_looseness << "\n";
    } else {
        std::cerr << "unknown family " << family << "\n";
        return kExitUsage;
    }
    if (out_path.empty() || out_path == "-")
        std::cout << serialize_network_file(nf);
    else
        save_network_file(nf, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Directional path-consistency toolkit for binary constraint networks"};
    app.require_subcommand(1);

    std::string file, algo = "dpcstar", order = "reverse-mcs", property;
    bool extract = false;

    auto* solve = app.add_subcommand("solve", "Decide a network file");
    solve->add_option("file", file, "network JSON file")->required();
    solve->add_option("--algo", algo, "dpc | dpcstar | pc | oracle")
        ->check(CLI::IsMember({"dpc", "dpcstar", "pc", "oracle"}));
    solve->add_option("--order", order,
                      "elimination order (comma list) | reverse-mcs | declaration");
    solve->add_flag("--extract", extract, "print a verified solution (dpcstar)");

    auto* check = app.add_subcommand("check", "Check a property of a network file");
    check->add_option("file", file, "network JSON file")->required();
    check
        ->add_option("--property", property,
                     "chordal | peo | helly | majority-closed | tree-preserving | "
                     "2decomposable | strongly-dpc")
        ->required();
    std::string check_order;
    check->add_option("--order", check_order, "ordering for peo / strongly-dpc");

    GenParams params;
    std::string family = "majority-closed", out_path;
    bool inconsistent = false;
    auto* gen = app.add_subcommand("gen", "Generate a random instance");
    gen->add_option("--family", family, "majority-closed | tree-preserving");
    gen->add_option("--n", params.n, "variables")->required();
    gen->add_option("--d", params.d, "domain size")->required();
    gen->add_option("--rho", params.density, "constraint density in [0,1]");
    gen->add_option("--l", params.looseness, "constraint looseness in [0,1]");
    gen->add_option("--seed", params.seed, "random seed");
    gen->add_flag("--inconsistent", inconsistent, "derive an inconsistent variant");
    gen->add_option("--out", out_path, "output path (default stdout)");

    BenchSpec spec;
    std::string sweep_list, algo_list = "dpcstar,pc";
    bool no_timing = false;
    auto* bench = app.add_subcommand("bench", "Sweep one parameter, emit CSV");
    bench->add_option("--family", spec.family, "majority-closed | tree-preserving");
    bench->add_option("--sweep", spec.sweep, "swept parameter: n | d | rho | l")->required();
    bench->add_option("--values", sweep_list, "comma list of swept values")->required();
    bench->add_option("--n", spec.base.n, "fixed variable count");
    bench->add_option("--d", spec.base.d, "fixed domain size");
    bench->add_option("--rho", spec.base.density, "fixed density");
    bench->add_option("--l", spec.base.looseness, "fixed looseness");
    bench->add_option("--reps", spec.reps, "instances per point");
    bench->add_option("--seed", spec.base.seed, "base seed");
    bench->add_option("--algo", algo_list, "comma list of algorithms");
    bench->add_flag("--no-timing", no_timing,
                    "write time_ms as 0 for byte-reproducible CSV");
    bench->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(file, algo, order, extract);
        if (check->parsed()) return cmd_check(file, property, check_order);
        if (gen->parsed()) return cmd_gen(family, params, inconsistent, out_path);
        if (bench->parsed()) {
            for (const auto& v : split(sweep_list, ',')) spec.sweep_values.push_back(std::stod(v));
            spec.algos = split(algo_list, ',');
            spec.measure_time = !no_timing;
            std::string csv = run_bench_csv(spec);
            if (out_path.empty() || out_path == "-") {
                std::cout << csv;
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw std::runtime_error("cannot write " + out_path);
                f << csv;
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

#include "dpcstar/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "dpcstar/consistency.hpp"
#include "dpcstar/dpc.hpp"
#include "dpcstar/oracle.hpp"

namespace dpcstar {

namespace {

struct RunResult {
    std::string result;
    double time_ms = 0;
    long revisions = 0;
};

std::string fmt(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

GenParams point_params(const BenchSpec& spec, double value) {
    GenParams p = spec.base;
    if (spec.sweep == "n") p.n = int(std::lround(value));
    else if (spec.sweep == "d") p.d = int(std::lround(value));
    else if (spec.sweep == "rho") p.density = value;
    else if (spec.sweep == "l") p.looseness = value;
    else throw std::invalid_argument("bench: sweep must be one of n, d, rho, l");
    return p;
}

Network make_instance(const BenchSpec& spec, const GenParams& p) {
    if (spec.family == "tree-preserving") return gen_tree_preserving_network(p).network;
    if (spec.family == "majority-closed") return gen_majority_closed_network(p).network;
    throw std::invalid_argument("bench: unknown family " + spec.family);
}

RunResult run_algo(const std::string& algo, const Network& instance, bool measure) {
    using Clock = std::chrono::steady_clock;
    RunResult out;
    const Ordering order = default_order(instance);
    const auto start = Clock::now();
    if (algo == "dpc" || algo == "dpcstar") {
        SolveOutcome res =
            algo == "dpc" ? dpc(instance, order) : dpc_star(instance, order);
        out.result = res.verdict == Verdict::Processed ? "processed" : "inconsistent";
        out.revisions = res.revisions;
    } else if (algo == "pc") {
        Network work = instance;
        out.result = enforce_strong_pc(work, &out.revisions) == Propagation::Ok
                         ? "ok"
                         : "inconsistent";
    } else if (algo == "oracle") {
        try {
            out.result = oracle_consistent(instance) ? "consistent" : "inconsistent";
        } catch (const OracleBoundExceeded&) {
            out.result = "bound-exceeded";
        }
    } else {
        throw std::invalid_argument("bench: unknown algo " + algo);
    }
    if (measure) {
        out.time_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
    return out;
}

}  // namespace

std::string run_bench_csv(const BenchSpec& spec) {
    if (spec.sweep_values.empty())
        throw std::invalid_argument("bench: no sweep points");
    if (spec.reps < 1) throw std::invalid_argument("bench: reps must be positive");
    for (const auto& a : spec.algos)
        if (a != "dpc" && a != "dpcstar" && a != "pc" && a != "oracle")
            throw std::invalid_argument("bench: unknown algo " + a);
    if (spec.family != "tree-preserving" && spec.family != "majority-closed")
        throw std::invalid_argument("bench: unknown family " + spec.family);
    for (double v : spec.sweep_values) point_params(spec, v);  // validates the sweep key

    const int points = int(spec.sweep_values.size());
    const int tasks = points * spec.reps;
    std::vector<std::vector<RunResult>> results(tasks);  // per task, per algo

#pragma omp parallel for schedule(dynamic, 1)
    for (int task = 0; task < tasks; ++task) {
        const int pt = task / spec.reps, rep = task % spec.reps;
        GenParams p = point_params(spec, spec.sweep_values[pt]);
        p.seed = mix_seed(spec.base.seed, pt, rep);
        const Network instance = make_instance(spec, p);
        for (const auto& algo : spec.algos)
            results[task].push_back(run_algo(algo, instance, spec.measure_time));
    }

    std::ostringstream csv;
    csv << "algo,family,n,d,rho,l,seed,rep,result,time_ms,revisions\n";
    for (int pt = 0; pt < points; ++pt) {
        const GenParams p = point_params(spec, spec.sweep_values[pt]);
        const std::string fixed = spec.family + "," + std::to_string(p.n) + "," +
                                  std::to_string(p.d) + "," + fmt(p.density, 3) + "," +
                                  fmt(p.looseness, 3) + ",";
        for (std::size_t ai = 0; ai < spec.algos.size(); ++ai) {
            double time_sum = 0, rev_sum = 0;
            for (int rep = 0; rep < spec.reps; ++rep) {
                const RunResult& r = results[pt * spec.reps + rep][ai];
                csv << spec.algos[ai] << "," << fixed
                    << mix_seed(spec.base.seed, pt, rep) << "," << rep << ","
                    << r.result << "," << fmt(r.time_ms, 3) << "," << r.revisions
                    << "\n";
                time_sum += r.time_ms;
                rev_sum += double(r.revisions);
            }
            csv << spec.algos[ai] << "," << fixed << spec.base.seed << ",mean,,"
                << fmt(time_sum / spec.reps, 3) << "," << fmt(rev_sum / spec.reps, 1)
                << "\n";
        }
    }
    return csv.str();
}

}  // namespace dpcstar

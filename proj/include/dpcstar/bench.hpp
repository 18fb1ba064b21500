#pragma once

#include <string>
#include <vector>

#include "dpcstar/generators.hpp"

namespace dpcstar {

/// One sweep over n, d, rho, or l with the other three parameters fixed.
/// Instances derive per-(point, rep) seeds from the base seed, so the instance
/// stream, results, and revision counts are reproducible; with measure_time
/// off the time column is pinned to zero and the CSV is byte-stable.
struct BenchSpec {
    std::string family = "majority-closed";  // or "tree-preserving"
    std::vector<std::string> algos = {"dpcstar"};
    std::string sweep = "n";  // n | d | rho | l
    std::vector<double> sweep_values;
    GenParams base;
    int reps = 1;
    bool measure_time = true;
};

/// CSV with columns algo,family,n,d,rho,l,seed,rep,result,time_ms,revisions:
/// one data row per (point, rep, algo) and one summary row (rep = "mean") per
/// (point, algo). Rows are emitted in deterministic sweep order; points run
/// concurrently when OpenMP is available.
std::string run_bench_csv(const BenchSpec& spec);

}  // namespace dpcstar

#include "rapsolve/bench.hpp"

#include <sstream>

#include "rapsolve/greedy.hpp"
#include "rapsolve/test_set.hpp"

namespace rapsolve {

BenchSuite bench_suite(const std::string& name) {
    BenchSuite suite;
    suite.name = name;
    suite.base.r_min = 0.99;
    suite.base.r_max = 0.998;
    suite.base.c_min = 10;
    suite.base.c_max = 20;
    suite.base.u_max = 4;
    suite.base.r0 = 0.90;
    if (name == "table1") {
        suite.base.mode = GeneratorSpec::Mode::uniform;
        suite.rows = {{10, 2}, {10, 3}, {10, 5}, {15, 2}, {15, 3}, {20, 2}};
    } else if (name == "table2") {
        suite.base.mode = GeneratorSpec::Mode::ordered;
        suite.rows = {{10, 2}, {10, 3}, {10, 5}, {15, 2}, {15, 3}, {15, 4}, {17, 2}};
    } else if (name == "table3") {
        suite.base.mode = GeneratorSpec::Mode::ordered;
        suite.base.r_min = 0.98;
        suite.base.r_max = 0.99;
        suite.rows = {{6, 4}, {6, 5}, {7, 4}, {7, 5}, {8, 4}};
    } else {
        throw ValidationError("unknown benchmark suite: " + name);
    }
    return suite;
}

std::uint64_t bench_instance_seed(std::uint64_t seed, int n, int k, int rep) {
    std::uint64_t z = seed;
    z ^= 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n);
    z ^= 0xbf58476d1ce4e5b9ULL * static_cast<std::uint64_t>(k);
    z ^= 0x94d049bb133111ebULL * static_cast<std::uint64_t>(rep + 1);
    // splitmix64 finalizer
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

SolveReport solve_instance(const Instance& inst, const WalkOptions& options) {
    NormalizedInstance ninst = normalize(inst);
    const Config y0 = greedy_feasible(ninst, ninst.r0);
    ninst.c0 = total_cost(ninst, y0);
    const std::vector<TestMove> moves = build_test_set(ninst);
    return walk_back(ninst, moves, y0, ninst.r0, options);
}

BenchRowResult run_bench_row(const BenchSuite& suite, int n, int k, int reps,
                             std::uint64_t seed, const WalkOptions& options) {
    BenchRowResult row;
    row.n = n;
    row.k = k;
    GeneratorSpec spec = suite.base;
    spec.n = n;
    spec.k_min = spec.k_max = k;
    for (int rep = 0; rep < reps; ++rep) {
        spec.seed = bench_instance_seed(seed, n, k, rep);
        try {
            const SolveReport report = solve_instance(generate(spec), options);
            row.mean_nodes_generated += static_cast<double>(report.nodes_generated);
            row.mean_nodes_expanded += static_cast<double>(report.nodes_expanded);
            row.mean_wall_time_s += report.wall_time_s;
            ++row.instances;
        } catch (const Error& e) {
            row.error = e.what();
            return row;
        }
    }
    if (row.instances > 0) {
        row.mean_nodes_generated /= row.instances;
        row.mean_nodes_expanded /= row.instances;
        row.mean_wall_time_s /= row.instances;
    }
    return row;
}

std::string write_bench_csv(const BenchSuite& suite, const std::vector<BenchRowResult>& rows,
                            int reps, std::uint64_t seed) {
    std::ostringstream out;
    out << "# rapsolve bench suite=" << suite.name << " reps=" << reps << " seed=" << seed
        << " rng=" << kRngName << '\n';
    out << "n,k,instances,mean_nodes_generated,mean_nodes_expanded,mean_wall_time_s\n";
    for (const BenchRowResult& row : rows) {
        if (!row.error.empty()) {
            out << row.n << ',' << row.k << ',' << row.instances << ",,,error=" << row.error
                << '\n';
            continue;
        }
        out << row.n << ',' << row.k << ',' << row.instances << ',' << row.mean_nodes_generated
            << ',' << row.mean_nodes_expanded << ',' << row.mean_wall_time_s << '\n';
    }
    return out.str();
}

}  // namespace rapsolve

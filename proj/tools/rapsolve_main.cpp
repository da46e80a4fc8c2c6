// Command-line front end: solve, oracle, generate, bench, testset.
//
// Exit codes: 0 success, 2 file/parse problems, 3 infeasible instances,
// 4 budget or enumeration guards, 1 anything else.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rapsolve/bench.hpp"
#include "rapsolve/greedy.hpp"
#include "rapsolve/instance_io.hpp"
#include "rapsolve/oracle.hpp"
#include "rapsolve/solver.hpp"
#include "rapsolve/test_set.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitGuard = 4;

void write_output(const std::string& text, const std::string& to_file) {
    if (to_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(to_file);
    if (!out) throw rapsolve::ParseError("cannot write output file: " + to_file);
    out << text;
}

int run_solve(const std::string& path, const rapsolve::WalkOptions& options) {
    const rapsolve::Instance inst = rapsolve::load_instance(path);
    const rapsolve::SolveReport report = rapsolve::solve_instance(inst, options);
    std::cout << rapsolve::write_report(report, inst.layout);
    return 0;
}

int run_oracle(const std::string& path) {
    const rapsolve::Instance inst = rapsolve::load_instance(path);
    const rapsolve::OracleResult result = rapsolve::brute_force_optimum(inst);
    std::cout << rapsolve::write_oracle_result(result, inst.layout);
    return 0;
}

int run_testset(const std::string& path) {
    const rapsolve::Instance inst = rapsolve::load_instance(path);
    rapsolve::NormalizedInstance ninst = rapsolve::normalize(inst);
    const rapsolve::Config y0 = rapsolve::greedy_feasible(ninst, ninst.r0);
    ninst.c0 = rapsolve::total_cost(ninst, y0);
    std::cout << rapsolve::dump_test_set(rapsolve::build_test_set(ninst));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cost minimization of series-parallel reliable systems"};
    app.require_subcommand(1);

    std::string instance_path;
    std::string out_path;
    rapsolve::WalkOptions walk;
    std::string strategy = "bestfirst";

    CLI::App* solve = app.add_subcommand("solve", "solve an instance file exactly");
    solve->add_option("file", instance_path, "instance JSON file")->required();
    solve->add_option("--strategy", strategy, "search strategy: paper|bestfirst")
        ->check(CLI::IsMember({"paper", "bestfirst"}))
        ->capture_default_str();
    solve->add_option("--parallel", walk.threads, "number of worker threads")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    solve->add_flag("--early-stop", walk.early_stop,
                    "stop at the first improving reliable point (no optimality proof)");

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force ground truth for small instances");
    oracle->add_option("file", instance_path, "instance JSON file")->required();

    CLI::App* testset = app.add_subcommand("testset", "print the instance's test set, one move per line");
    testset->add_option("file", instance_path, "instance JSON file")->required();

    rapsolve::GeneratorSpec gen;
    int k_fixed = 0;
    std::string mode = "uniform";
    CLI::App* generate = app.add_subcommand("generate", "draw a random instance");
    generate->add_option("--n", gen.n, "number of subsystems")->required();
    generate->add_option("--k", k_fixed, "component types per subsystem");
    generate->add_option("--kmin", gen.k_min, "minimum types per subsystem (uniform draw)");
    generate->add_option("--kmax", gen.k_max, "maximum types per subsystem (uniform draw)");
    generate->add_option("--rmin", gen.r_min, "reliability range low")->capture_default_str();
    generate->add_option("--rmax", gen.r_max, "reliability range high")->capture_default_str();
    generate->add_option("--cmin", gen.c_min, "integer cost range low")->capture_default_str();
    generate->add_option("--cmax", gen.c_max, "integer cost range high")->capture_default_str();
    generate->add_option("--umax", gen.u_max, "upper bound for every component")->capture_default_str();
    generate->add_option("--r0", gen.r0, "required system reliability")->capture_default_str();
    generate->add_option("--mode", mode, "uniform|ordered")
        ->check(CLI::IsMember({"uniform", "ordered"}))
        ->capture_default_str();
    generate->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
    generate->add_option("-o,--output", out_path, "write to file instead of stdout");

    std::string suite_name = "table1";
    int reps = 10;
    std::uint64_t bench_seed = 1;
    CLI::App* bench = app.add_subcommand("bench", "run an experiment suite, CSV output");
    bench->add_option("--suite", suite_name, "table1|table2|table3")
        ->check(CLI::IsMember({"table1", "table2", "table3"}))
        ->capture_default_str();
    bench->add_option("--reps", reps, "instances per (n, k) row")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--seed", bench_seed, "suite seed")->capture_default_str();
    bench->add_option("-o,--output", out_path, "write CSV to file instead of stdout");
    bench->add_option("--strategy", strategy, "search strategy: paper|bestfirst")
        ->check(CLI::IsMember({"paper", "bestfirst"}))
        ->capture_default_str();
    bench->add_option("--parallel", walk.threads, "worker threads per solve")
        ->check(CLI::Range(1, 256));

    CLI11_PARSE(app, argc, argv);
    walk.strategy =
        strategy == "paper" ? rapsolve::Strategy::paper : rapsolve::Strategy::bestfirst;

    try {
        if (solve->parsed()) return run_solve(instance_path, walk);
        if (oracle->parsed()) return run_oracle(instance_path);
        if (testset->parsed()) return run_testset(instance_path);
        if (generate->parsed()) {
            if (k_fixed > 0) gen.k_min = gen.k_max = k_fixed;
            gen.mode = mode == "ordered" ? rapsolve::GeneratorSpec::Mode::ordered
                                         : rapsolve::GeneratorSpec::Mode::uniform;
            write_output(rapsolve::write_instance(rapsolve::generate(gen)), out_path);
            return 0;
        }
        if (bench->parsed()) {
            const rapsolve::BenchSuite suite = rapsolve::bench_suite(suite_name);
            std::vector<rapsolve::BenchRowResult> rows;
            rows.reserve(suite.rows.size());
            for (const auto& [n, k] : suite.rows) {
                rows.push_back(rapsolve::run_bench_row(suite, n, k, reps, bench_seed, walk));
            }
            write_output(rapsolve::write_bench_csv(suite, rows, reps, bench_seed), out_path);
            return 0;
        }
    } catch (const rapsolve::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const rapsolve::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const rapsolve::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const rapsolve::EmptySubsystemError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const rapsolve::BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const rapsolve::EnumerationLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

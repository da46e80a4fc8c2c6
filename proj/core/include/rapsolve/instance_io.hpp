#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "rapsolve/instance.hpp"
#include "rapsolve/oracle.hpp"
#include "rapsolve/solver.hpp"

namespace rapsolve {

// Instance files are JSON documents:
//
//   {
//     "n": 1,
//     "k": [2],
//     "r": [[0.9, 0.8]],
//     "c": [[5, 3]],          // positive integers; non-integers are rejected
//     "l": [[0, 0]],          // optional, defaults to all zeros
//     "u": [[2, 2]],
//     "R0": 0.97
//   }
//
// Shapes of r, c, l, u must match k. Parse failures throw ParseError with a
// field diagnostic; value violations throw ValidationError.
Instance parse_instance(const std::string& json_text);
Instance load_instance(const std::filesystem::path& path);

// Canonical form: all keys present, l included. parse(write(inst)) is
// field-for-field identical.
std::string write_instance(const Instance& inst);

std::string write_report(const SolveReport& report, const Layout& layout);
std::string write_oracle_result(const OracleResult& result, const Layout& layout);

// Random instances drawn the way the experiment suites expect: component
// reliabilities uniform on [r_min, r_max], integer costs uniform on
// [c_min, c_max], l = 0 and u = u_max everywhere. Mode `ordered` re-pairs
// the draws within each subsystem so that a more reliable component never
// costs less.
struct GeneratorSpec {
    enum class Mode { uniform, ordered };
    int n = 1;
    int k_min = 1;  // k_min == k_max draws a fixed k
    int k_max = 1;
    double r_min = 0.9;
    double r_max = 0.99;
    Money c_min = 1;
    Money c_max = 10;
    Count u_max = 4;
    double r0 = 0.9;
    Mode mode = Mode::uniform;
    std::uint64_t seed = 1;
};

void validate(const GeneratorSpec& spec);

// Fully specified draw pipeline (see kRngName): mt19937_64 seeded with
// spec.seed; per subsystem the k draw (only when k_min < k_max), then all
// r draws, then all c draws, row by row. Identical seeds give identical
// instances on every platform.
Instance generate(const GeneratorSpec& spec);

// Name + version of the draw pipeline, recorded in benchmark CSV headers.
inline constexpr const char* kRngName = "rapsolve-mt19937_64-v1";

}  // namespace rapsolve

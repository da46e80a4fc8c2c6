#include "rapsolve/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace rapsolve {

namespace {

using nlohmann::json;

std::string field(const char* name, int i, int j = -1) {
    std::string out = name;
    out += "[" + std::to_string(i) + "]";
    if (j >= 0) out += "[" + std::to_string(j) + "]";
    return out;
}

const json& require_key(const json& doc, const char* key) {
    const auto it = doc.find(key);
    if (it == doc.end()) throw ParseError(std::string("missing key \"") + key + "\"");
    return *it;
}

int parse_positive_int(const json& value, const char* what) {
    if (!value.is_number_integer() || value.get<std::int64_t>() < 1) {
        throw ParseError(std::string(what) + " must be a positive integer");
    }
    return static_cast<int>(value.get<std::int64_t>());
}

// Ragged array-of-arrays shaped like k, flattened into Layout order.
template <typename T, typename Check>
std::vector<T> parse_ragged(const json& value, const Layout& lay, const char* name,
                            Check&& check) {
    if (!value.is_array() || value.size() != static_cast<std::size_t>(lay.subsystems())) {
        throw ParseError(std::string(name) + " must be an array with one row per subsystem");
    }
    std::vector<T> out(static_cast<std::size_t>(lay.total()));
    for (int i = 0; i < lay.subsystems(); ++i) {
        const json& row = value[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(lay.types(i))) {
            throw ParseError(field(name, i) + " must be an array of length " +
                             std::to_string(lay.types(i)));
        }
        for (int j = 0; j < lay.types(i); ++j) {
            out[static_cast<std::size_t>(lay.flat(i, j))] =
                check(row[static_cast<std::size_t>(j)], field(name, i, j));
        }
    }
    return out;
}

double parse_probability(const json& v, const std::string& where) {
    if (!v.is_number()) throw ParseError(where + " must be a number");
    return v.get<double>();
}

std::int64_t parse_integer(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ParseError(where + " must be an integer");
    return v.get<std::int64_t>();
}

json ragged(const Layout& lay, const auto& flat) {
    json rows = json::array();
    for (int i = 0; i < lay.subsystems(); ++i) {
        json row = json::array();
        for (int j = 0; j < lay.types(i); ++j) {
            row.push_back(flat[static_cast<std::size_t>(lay.flat(i, j))]);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// Explicit mappings keep draws identical across standard libraries.
double draw_real(std::mt19937_64& eng, double lo, double hi) {
    const double unit = static_cast<double>(eng() >> 11) * 0x1.0p-53;
    return lo + unit * (hi - lo);
}

std::int64_t draw_int(std::mt19937_64& eng, std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(eng() % span);
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) throw ParseError("instance file must be a JSON object");

    const int n = parse_positive_int(require_key(doc, "n"), "n");
    const json& k_json = require_key(doc, "k");
    if (!k_json.is_array() || k_json.size() != static_cast<std::size_t>(n)) {
        throw ParseError("k must be an array of length n");
    }
    std::vector<int> k;
    k.reserve(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < k_json.size(); ++i) {
        k.push_back(parse_positive_int(k_json[i], field("k", static_cast<int>(i)).c_str()));
    }

    Instance inst;
    inst.layout = Layout(std::move(k));
    inst.r = parse_ragged<double>(require_key(doc, "r"), inst.layout, "r", parse_probability);
    inst.cost = parse_ragged<Money>(require_key(doc, "c"), inst.layout, "c", parse_integer);
    inst.upper = parse_ragged<Count>(require_key(doc, "u"), inst.layout, "u", parse_integer);
    if (doc.contains("l")) {
        inst.lower = parse_ragged<Count>(doc["l"], inst.layout, "l", parse_integer);
    } else {
        inst.lower.assign(static_cast<std::size_t>(inst.layout.total()), 0);
    }
    const json& r0 = require_key(doc, "R0");
    if (!r0.is_number()) throw ParseError("R0 must be a number");
    inst.r0 = r0.get<double>();

    validate(inst);
    return inst;
}

Instance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

std::string write_instance(const Instance& inst) {
    json doc;
    doc["n"] = inst.layout.subsystems();
    doc["k"] = inst.layout.type_counts();
    doc["r"] = ragged(inst.layout, inst.r);
    doc["c"] = ragged(inst.layout, inst.cost);
    doc["l"] = ragged(inst.layout, inst.lower);
    doc["u"] = ragged(inst.layout, inst.upper);
    doc["R0"] = inst.r0;
    return doc.dump(2) + "\n";
}

std::string write_report(const SolveReport& report, const Layout& layout) {
    json doc;
    doc["optimum"] = ragged(layout, report.optimum);
    doc["opt_cost"] = report.opt_cost;
    doc["opt_reliability"] = report.opt_reliability;
    doc["nodes_generated"] = report.nodes_generated;
    doc["nodes_expanded"] = report.nodes_expanded;
    doc["nodes_pruned_bound"] = report.nodes_pruned_bound;
    doc["nodes_pruned_duplicate"] = report.nodes_pruned_duplicate;
    doc["greedy_cost"] = report.greedy_cost;
    doc["wall_time_s"] = report.wall_time_s;
    return doc.dump(2) + "\n";
}

std::string write_oracle_result(const OracleResult& result, const Layout& layout) {
    json doc;
    doc["feasible"] = result.optimum.has_value();
    if (result.optimum.has_value()) {
        doc["optimum"] = ragged(layout, *result.optimum);
        doc["opt_cost"] = result.opt_cost;
    }
    doc["feasible_points"] = result.feasible_points;
    return doc.dump(2) + "\n";
}

void validate(const GeneratorSpec& spec) {
    if (spec.n < 1) throw ValidationError("generator: n must be positive");
    if (spec.k_min < 1 || spec.k_max < spec.k_min) {
        throw ValidationError("generator: need 1 <= kmin <= kmax");
    }
    if (!(spec.r_min > 0.0 && spec.r_min <= spec.r_max && spec.r_max < 1.0)) {
        throw ValidationError("generator: need 0 < rmin <= rmax < 1");
    }
    if (spec.c_min < 1 || spec.c_max < spec.c_min || spec.c_max > kMaxUnitCost) {
        throw ValidationError("generator: need 1 <= cmin <= cmax <= " +
                              std::to_string(kMaxUnitCost));
    }
    if (spec.u_max < 1 || spec.u_max > kMaxUpperBound) {
        throw ValidationError("generator: need 1 <= umax <= " + std::to_string(kMaxUpperBound));
    }
    if (!(spec.r0 > 0.0 && spec.r0 < 1.0)) {
        throw ValidationError("generator: R0 must lie strictly in (0,1)");
    }
}

Instance generate(const GeneratorSpec& spec) {
    validate(spec);
    std::mt19937_64 eng(spec.seed);

    std::vector<int> k(static_cast<std::size_t>(spec.n), spec.k_min);
    if (spec.k_min < spec.k_max) {
        for (int i = 0; i < spec.n; ++i) {
            k[static_cast<std::size_t>(i)] =
                static_cast<int>(draw_int(eng, spec.k_min, spec.k_max));
        }
    }

    Instance inst;
    inst.layout = Layout(std::move(k));
    const auto total = static_cast<std::size_t>(inst.layout.total());
    inst.r.resize(total);
    inst.cost.resize(total);
    inst.lower.assign(total, 0);
    inst.upper.assign(total, spec.u_max);
    inst.r0 = spec.r0;

    for (std::size_t f = 0; f < total; ++f) inst.r[f] = draw_real(eng, spec.r_min, spec.r_max);
    for (std::size_t f = 0; f < total; ++f) inst.cost[f] = draw_int(eng, spec.c_min, spec.c_max);

    if (spec.mode == GeneratorSpec::Mode::ordered) {
        // Re-pair within each subsystem: reliabilities and costs sorted
        // ascending and zipped, so a better component always costs at least
        // as much.
        for (int i = 0; i < inst.layout.subsystems(); ++i) {
            const auto first = static_cast<std::ptrdiff_t>(inst.layout.offset(i));
            const auto last = first + inst.layout.types(i);
            std::sort(inst.r.begin() + first, inst.r.begin() + last);
            std::sort(inst.cost.begin() + first, inst.cost.begin() + last);
        }
    }

    validate(inst);
    return inst;
}

}  // namespace rapsolve

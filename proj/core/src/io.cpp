#include "l0simons/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "l0simons/errors.hpp"
#include "l0simons/rng.hpp"

namespace l0simons {

namespace {

using json = nlohmann::ordered_json;

std::optional<Rat> parse_rat_field(const json& node, const std::string& where,
                                   std::vector<std::string>& diags) {
    if (!node.is_string()) {
        diags.push_back(where + ": expected an exact rational string like \"1/2\", got " +
                        node.dump());
        return std::nullopt;
    }
    const std::string text = node.get<std::string>();
    if (auto value = try_parse_rat(text)) return value;
    diags.push_back(where + ": invalid rational '" + text +
                    "': use an exact fraction like \"1/2\"");
    return std::nullopt;
}

json rv_to_json(const Rv& value) {
    json out = json::array();
    for (std::size_t a = 0; a < value.size(); ++a) {
        out.push_back(to_fraction_string(value.at(a)));
    }
    return out;
}

json rv_to_float_json(const Rv& value) {
    json out = json::array();
    for (std::size_t a = 0; a < value.size(); ++a) out.push_back(to_double(value.at(a)));
    return out;
}

json hypothesis_to_json(const HypothesisReport& report) {
    json out;
    out["verdict"] = to_string(report.verdict);
    out["note"] = report.note;
    if (report.witness) {
        json w = json::array();
        for (const Rat& v : *report.witness) w.push_back(to_fraction_string(v));
        out["witness"] = w;
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

json weights_to_json(const MixtureWeights& weights) {
    json out;
    json ids = json::array();
    for (std::size_t id : weights.ids) ids.push_back("f" + std::to_string(id));
    out["ids"] = ids;
    json per_atom = json::array();
    for (const auto& row : weights.weights) {
        json one = json::array();
        for (const Rat& w : row) one.push_back(to_fraction_string(w));
        per_atom.push_back(one);
    }
    out["per_atom"] = per_atom;
    return out;
}

json atom_labels(const Instance& instance) {
    json out = json::array();
    for (const Atom& a : instance.space->atoms()) out.push_back(a.label);
    return out;
}

struct RawTable {
    std::vector<std::vector<Rat>> by_base;  // [base][atom]
};

std::optional<RawTable> parse_table(const json& node, const std::string& where,
                                    const std::vector<std::string>& base_points,
                                    std::size_t atoms, std::vector<std::string>& diags) {
    if (!node.is_object()) {
        diags.push_back(where + ": expected an object mapping base points to value lists");
        return std::nullopt;
    }
    RawTable table;
    table.by_base.resize(base_points.size());
    bool ok = true;
    for (auto it = node.begin(); it != node.end(); ++it) {
        bool known = false;
        for (const std::string& b : base_points) {
            if (b == it.key()) known = true;
        }
        if (!known) {
            diags.push_back(where + ": unknown base point '" + it.key() + "'");
            ok = false;
        }
    }
    for (std::size_t b = 0; b < base_points.size(); ++b) {
        if (!node.contains(base_points[b])) {
            diags.push_back(where + ": missing base point '" + base_points[b] + "'");
            ok = false;
            continue;
        }
        const json& list = node[base_points[b]];
        if (!list.is_array() || list.size() != atoms) {
            diags.push_back(where + "." + base_points[b] + ": expected " +
                            std::to_string(atoms) + " per-atom values");
            ok = false;
            continue;
        }
        for (std::size_t a = 0; a < atoms; ++a) {
            auto value = parse_rat_field(list[a], where + "." + base_points[b] + "[" +
                                                      std::to_string(a) + "]",
                                         diags);
            if (!value) {
                ok = false;
                continue;
            }
            table.by_base[b].push_back(*value);
        }
    }
    if (!ok) return std::nullopt;
    return table;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

}  // namespace

ParseResult parse_instance_text(const std::string& text) {
    ParseResult result;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        result.diagnostics.push_back(std::string("JSON parse error: ") + e.what());
        return result;
    }
    if (!doc.is_object()) {
        result.diagnostics.push_back("top level: expected a JSON object");
        return result;
    }
    for (const char* key : {"atoms", "base_points", "epsilon", "functions", "S"}) {
        if (!doc.contains(key)) {
            result.diagnostics.push_back(std::string("missing required key '") + key + "'");
        }
    }
    if (!result.diagnostics.empty()) return result;

    auto& diags = result.diagnostics;

    std::vector<Atom> atoms;
    if (!doc["atoms"].is_array() || doc["atoms"].empty()) {
        diags.push_back("atoms: expected a nonempty array of [label, mass] pairs");
    } else {
        for (std::size_t i = 0; i < doc["atoms"].size(); ++i) {
            const json& pair = doc["atoms"][i];
            const std::string where = "atoms[" + std::to_string(i) + "]";
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string()) {
                diags.push_back(where + ": expected [label, mass]");
                continue;
            }
            auto mass = parse_rat_field(pair[1], where + ".mass", diags);
            if (mass) atoms.push_back(Atom{pair[0].get<std::string>(), *mass});
        }
    }

    std::vector<std::string> base_points;
    if (!doc["base_points"].is_array() || doc["base_points"].empty()) {
        diags.push_back("base_points: expected a nonempty array of labels");
    } else {
        for (const json& b : doc["base_points"]) {
            if (!b.is_string()) {
                diags.push_back("base_points: labels must be strings");
                continue;
            }
            base_points.push_back(b.get<std::string>());
        }
    }

    const std::size_t n_atoms = atoms.size();
    std::vector<Rat> epsilon_values;
    if (!doc["epsilon"].is_array() || doc["epsilon"].size() != n_atoms) {
        diags.push_back("epsilon: expected one rational per atom");
    } else {
        for (std::size_t a = 0; a < n_atoms; ++a) {
            auto value =
                parse_rat_field(doc["epsilon"][a], "epsilon[" + std::to_string(a) + "]", diags);
            if (value) epsilon_values.push_back(*value);
        }
    }

    std::vector<RawTable> preamble_tables;
    std::vector<RawTable> cycle_tables;
    if (!doc["functions"].is_object() || !doc["functions"].contains("preamble") ||
        !doc["functions"].contains("cycle")) {
        diags.push_back("functions: expected an object with 'preamble' and 'cycle' arrays");
    } else {
        const json& pre = doc["functions"]["preamble"];
        const json& cyc = doc["functions"]["cycle"];
        if (!pre.is_array()) diags.push_back("functions.preamble: expected an array");
        if (!cyc.is_array() || cyc.empty()) {
            diags.push_back("functions.cycle: expected a nonempty array");
        }
        if (pre.is_array()) {
            for (std::size_t i = 0; i < pre.size(); ++i) {
                auto table = parse_table(pre[i], "functions.preamble[" + std::to_string(i) + "]",
                                         base_points, n_atoms, diags);
                if (table) preamble_tables.push_back(std::move(*table));
            }
        }
        if (cyc.is_array()) {
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                auto table = parse_table(cyc[i], "functions.cycle[" + std::to_string(i) + "]",
                                         base_points, n_atoms, diags);
                if (table) cycle_tables.push_back(std::move(*table));
            }
        }
    }

    bool s_all = false;
    std::vector<std::vector<std::size_t>> raw_selections;
    const json& s_node = doc["S"];
    if (s_node.is_string() && s_node.get<std::string>() == "ALL") {
        s_all = true;
    } else if (s_node.is_array()) {
        for (std::size_t k = 0; k < s_node.size(); ++k) {
            const json& sel = s_node[k];
            const std::string where = "S[" + std::to_string(k) + "]";
            if (!sel.is_object()) {
                diags.push_back(where + ": expected an object mapping atoms to base points");
                continue;
            }
            std::vector<std::size_t> choice(n_atoms, 0);
            bool ok = true;
            for (std::size_t a = 0; a < n_atoms; ++a) {
                if (!sel.contains(atoms[a].label) || !sel[atoms[a].label].is_string()) {
                    diags.push_back(where + ": missing base point for atom '" + atoms[a].label +
                                    "'");
                    ok = false;
                    continue;
                }
                const std::string base = sel[atoms[a].label].get<std::string>();
                bool found = false;
                for (std::size_t b = 0; b < base_points.size(); ++b) {
                    if (base_points[b] == base) {
                        choice[a] = b;
                        found = true;
                    }
                }
                if (!found) {
                    diags.push_back(where + ": unknown base point '" + base + "' for atom '" +
                                    atoms[a].label + "'");
                    ok = false;
                }
            }
            if (ok) raw_selections.push_back(std::move(choice));
        }
    } else {
        diags.push_back("S: expected \"ALL\" or an array of selections");
    }

    if (!diags.empty()) return result;

    auto space = std::make_shared<const ProbSpace>(std::move(atoms));
    auto make_function = [&space](const RawTable& raw) {
        BaseFunction f;
        f.table.reserve(raw.by_base.size());
        for (const auto& profile : raw.by_base) f.table.emplace_back(space, profile);
        return f;
    };
    std::vector<BaseFunction> preamble;
    preamble.reserve(preamble_tables.size());
    for (const RawTable& t : preamble_tables) preamble.push_back(make_function(t));
    std::vector<BaseFunction> cycle;
    cycle.reserve(cycle_tables.size());
    for (const RawTable& t : cycle_tables) cycle.push_back(make_function(t));

    std::optional<std::vector<Selection>> selections;
    if (!s_all) {
        std::vector<Selection> list;
        list.reserve(raw_selections.size());
        for (auto& choice : raw_selections) list.push_back(Selection{std::move(choice)});
        selections = std::move(list);
    }

    Instance instance{space,
                      std::move(base_points),
                      EventuallyPeriodicSeq<BaseFunction>(std::move(preamble), std::move(cycle)),
                      Rv(space, std::move(epsilon_values)),
                      std::move(selections)};
    std::vector<std::string> semantic = validate(instance);
    if (!semantic.empty()) {
        result.diagnostics = std::move(semantic);
        return result;
    }
    result.instance = std::move(instance);
    return result;
}

ParseResult parse_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ParseResult result;
        result.diagnostics.push_back("cannot read instance file '" + path + "'");
        return result;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance_text(buffer.str());
}

std::string serialize_instance(const Instance& instance) {
    json doc;
    json atoms = json::array();
    for (const Atom& a : instance.space->atoms()) {
        atoms.push_back(json::array({a.label, to_fraction_string(a.mass)}));
    }
    doc["atoms"] = atoms;
    doc["base_points"] = instance.base_points;
    doc["epsilon"] = rv_to_json(instance.epsilon);

    auto table_to_json = [&instance](const BaseFunction& f) {
        json out;
        for (std::size_t b = 0; b < instance.base_points.size(); ++b) {
            json values = json::array();
            for (std::size_t a = 0; a < instance.space->size(); ++a) {
                values.push_back(to_fraction_string(f.table[b].at(a)));
            }
            out[instance.base_points[b]] = values;
        }
        return out;
    };
    json functions;
    json preamble = json::array();
    for (const BaseFunction& f : instance.functions.preamble()) preamble.push_back(table_to_json(f));
    json cycle = json::array();
    for (const BaseFunction& f : instance.functions.cycle()) cycle.push_back(table_to_json(f));
    functions["preamble"] = preamble;
    functions["cycle"] = cycle;
    doc["functions"] = functions;

    if (instance.s_is_all()) {
        doc["S"] = "ALL";
    } else {
        json list = json::array();
        for (const Selection& sel : *instance.selections) {
            json one;
            for (std::size_t a = 0; a < instance.space->size(); ++a) {
                one[instance.space->atom(a).label] = instance.base_points[sel.choice[a]];
            }
            list.push_back(one);
        }
        doc["S"] = list;
    }
    return doc.dump(2) + "\n";
}

std::string instance_digest(const Instance& instance) {
    std::uint64_t hash = fnv1a64(serialize_instance(instance));
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "fnv1a64:%016llx",
                  static_cast<unsigned long long>(hash));
    return buffer;
}

Instance generate(std::uint64_t seed, const Shape& shape) {
    if (shape.atoms < 1 || shape.atoms > 6) {
        throw ResourceError("generate: atoms must lie in [1, 6]");
    }
    if (shape.base_points < 1 || shape.base_points > 6) {
        throw ResourceError("generate: base_points must lie in [1, 6]");
    }
    if (shape.n_preamble > 4) throw ResourceError("generate: preamble length is capped at 4");
    if (shape.n_cycle < 1 || shape.n_cycle > 6) {
        throw ResourceError("generate: cycle length must lie in [1, 6]");
    }

    SeededRng rng(seed);
    std::vector<Atom> atoms;
    atoms.reserve(shape.atoms);
    std::vector<long> numerators(shape.atoms);
    long total = 0;
    for (std::size_t a = 0; a < shape.atoms; ++a) {
        numerators[a] = rng.next_int(1, 9);
        total += numerators[a];
    }
    for (std::size_t a = 0; a < shape.atoms; ++a) {
        atoms.push_back(Atom{"w" + std::to_string(a + 1), make_rat(numerators[a], total)});
    }
    auto space = std::make_shared<const ProbSpace>(std::move(atoms));

    std::vector<std::string> base_points;
    base_points.reserve(shape.base_points);
    for (std::size_t b = 0; b < shape.base_points; ++b) {
        base_points.push_back("b" + std::to_string(b + 1));
    }

    std::vector<Rat> epsilon_values;
    epsilon_values.reserve(shape.atoms);
    for (std::size_t a = 0; a < shape.atoms; ++a) {
        long den = rng.next_int(1, 4);
        long num = rng.next_int(den, 3 * den);
        epsilon_values.push_back(make_rat(num, den));
    }
    Rv epsilon(space, epsilon_values);

    auto draw_function = [&]() {
        BaseFunction f;
        f.table.reserve(shape.base_points);
        for (std::size_t b = 0; b < shape.base_points; ++b) {
            std::vector<Rat> values(shape.atoms);
            for (std::size_t a = 0; a < shape.atoms; ++a) {
                long den = rng.next_int(1, 8);
                long num = rng.next_int(-den, den);
                values[a] = Rat(epsilon_values[a] * make_rat(num, den));
            }
            f.table.emplace_back(space, std::move(values));
        }
        return f;
    };
    std::vector<BaseFunction> preamble;
    for (std::size_t i = 0; i < shape.n_preamble; ++i) preamble.push_back(draw_function());
    std::vector<BaseFunction> cycle;
    for (std::size_t i = 0; i < shape.n_cycle; ++i) cycle.push_back(draw_function());

    return Instance{space, std::move(base_points),
                    EventuallyPeriodicSeq<BaseFunction>(std::move(preamble), std::move(cycle)),
                    std::move(epsilon), std::nullopt};
}

std::string verify_report(const Instance& instance, const VerifierResult& result) {
    json doc;
    doc["mode"] = "verify";
    doc["instance_digest"] = instance_digest(instance);
    doc["atoms"] = atom_labels(instance);
    doc["hypothesis"] = hypothesis_to_json(result.hypothesis);
    doc["lhs"] = rv_to_json(result.lhs);
    doc["rhs"] = rv_to_json(result.rhs);
    doc["slack"] = rv_to_json(result.slack);
    doc["rhs_weights"] = weights_to_json(result.rhs_weights);
    doc["applicable"] = result.applicable;
    doc["holds"] = result.holds;
    doc["status"] = !result.applicable ? "inapplicable" : (result.holds ? "holds" : "violated");
    json approx;
    approx["lhs"] = rv_to_float_json(result.lhs);
    approx["rhs"] = rv_to_float_json(result.rhs);
    doc["approx_float"] = approx;
    return doc.dump(2) + "\n";
}

std::string trace_report(const Instance& instance, const ProofTrace& trace) {
    json doc;
    doc["mode"] = "trace";
    doc["instance_digest"] = instance_digest(instance);
    doc["atoms"] = atom_labels(instance);
    doc["hypothesis"] = hypothesis_to_json(trace.hypothesis);
    doc["delta"] = rv_to_json(trace.delta);
    doc["lambda"] = rv_to_json(trace.lambda);
    doc["m"] = rv_to_json(trace.m);
    doc["M"] = rv_to_json(trace.bound);
    doc["lambda_certificate"] = rv_to_json(trace.lambda_certificate);
    doc["steps"] = trace.steps;
    doc["tail_bound"] = rv_to_json(trace.tail_bound);

    json steps = json::array();
    for (std::size_t n = 1; n <= trace.trace.size(); ++n) {
        const TraceStep& step = trace.trace[n - 1];
        json one;
        one["n"] = n;
        json ids = json::array();
        for (std::size_t id : step.ids) ids.push_back("f" + std::to_string(id));
        one["ids"] = ids;
        json weights = json::array();
        for (const auto& row : step.weights) {
            json w = json::array();
            for (const Rat& v : row) w.push_back(to_fraction_string(v));
            weights.push_back(w);
        }
        one["weights"] = weights;
        one["gamma"] = rv_to_json(step.gamma);
        one["optimality_slack"] = rv_to_json(step.optimality_slack);
        one["blend_slack"] = step.blend_slack ? rv_to_json(*step.blend_slack) : json(nullptr);
        one["telescope_slack"] = rv_to_json(step.telescope_slack);
        one["tail_sum_slack"] = rv_to_json(step.tail_sum_slack);
        one["g_at_z0_slack"] = rv_to_json(step.g_at_z0_slack);
        steps.push_back(one);
    }
    doc["steps_detail"] = steps;

    json z0;
    for (std::size_t a = 0; a < instance.space->size(); ++a) {
        z0[instance.space->atom(a).label] = instance.base_points[trace.z0.choice[a]];
    }
    doc["z0"] = z0;
    doc["z0_in_s"] = trace.z0_in_s;
    doc["mixtures_strictly_positive"] = trace.mixtures_strictly_positive;
    doc["esslimsup_at_z0"] = rv_to_json(trace.esslimsup_at_z0);
    doc["final_slack"] = rv_to_json(trace.final_slack);
    doc["all_nonnegative"] = trace.all_nonnegative;
    return doc.dump(2) + "\n";
}

OracleComparison compare_with_oracle(const Instance& instance, unsigned grid, std::size_t cap) {
    OracleComparison out(instance.space);
    out.grid = grid;
    out.exact_lhs = compute_lhs(instance, cap);
    out.brute_lhs = oracle::brute_lhs(instance, cap);
    out.exact_rhs = compute_rhs(instance).first;
    out.brute_rhs = oracle::brute_rhs(instance, oracle::GridSpec{grid});
    out.rhs_gap = out.brute_rhs - out.exact_rhs;
    out.lhs_equal = out.exact_lhs == out.brute_lhs;

    DistinctFunctions distinct = distinct_functions(instance.functions);
    std::vector<Rat> range(instance.space->size(), Rat(0));
    for (std::size_t a = 0; a < instance.space->size(); ++a) {
        bool first = true;
        Rat low, high;
        for (const BaseFunction& f : distinct.tables) {
            for (const Rv& profile : f.table) {
                const Rat& v = profile.at(a);
                if (first) {
                    low = v;
                    high = v;
                    first = false;
                } else {
                    if (v < low) low = v;
                    if (v > high) high = v;
                }
            }
        }
        range[a] = Rat(high - low);
    }
    out.entry_range = Rv(instance.space, std::move(range));

    out.sandwich_ok = true;
    for (std::size_t a = 0; a < instance.space->size(); ++a) {
        if (sgn(out.rhs_gap.at(a)) < 0) out.sandwich_ok = false;
        if (out.rhs_gap.at(a) > out.entry_range.at(a) / Rat(grid)) out.sandwich_ok = false;
    }
    return out;
}

std::string oracle_report(const Instance& instance, const OracleComparison& comparison) {
    json doc;
    doc["mode"] = "oracle";
    doc["instance_digest"] = instance_digest(instance);
    doc["atoms"] = atom_labels(instance);
    doc["grid"] = comparison.grid;
    doc["lhs_exact"] = rv_to_json(comparison.exact_lhs);
    doc["lhs_brute"] = rv_to_json(comparison.brute_lhs);
    doc["lhs_equal"] = comparison.lhs_equal;
    doc["rhs_exact"] = rv_to_json(comparison.exact_rhs);
    doc["rhs_brute"] = rv_to_json(comparison.brute_rhs);
    doc["rhs_gap"] = rv_to_json(comparison.rhs_gap);
    doc["entry_range"] = rv_to_json(comparison.entry_range);
    doc["sandwich_ok"] = comparison.sandwich_ok;
    return doc.dump(2) + "\n";
}

}  // namespace l0simons

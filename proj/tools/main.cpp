// Command-line front end: verify / trace / oracle / gen over instance files.
//
// Exit codes: 0 success (verify holds, trace passes, oracle bounds hold, gen
// written); 1 checked failure or hypothesis refusal; 2 parse or validation
// failure; 3 resource cap exceeded. Reports go to stdout or --out;
// diagnostics go to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "l0simons/io.hpp"

namespace {

int emit(const std::string& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write to '" << out_path << "'\n";
        return 2;
    }
    out << report;
    return 0;
}

bool parse_shape(const std::string& text, l0simons::Shape& shape) {
    unsigned long values[4];
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        std::size_t next = text.find(',', pos);
        std::string part = text.substr(pos, next == std::string::npos ? next : next - pos);
        try {
            values[i] = std::stoul(part);
        } catch (...) {
            return false;
        }
        if (next == std::string::npos) {
            if (i != 3) return false;
            break;
        }
        pos = next + 1;
    }
    shape.atoms = values[0];
    shape.base_points = values[1];
    shape.n_preamble = values[2];
    shape.n_cycle = values[3];
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for the module-valued minimax inequality on finite "
                 "probability spaces"};

    std::string mode;
    std::string instance_path;
    std::string delta_text;
    std::string shape_text;
    std::string out_path;
    std::optional<std::size_t> steps;
    unsigned grid = 200;
    std::uint64_t seed = 0;
    std::size_t cap_selections = 4096;

    app.add_option("--mode", mode, "verify | trace | oracle | gen")->required();
    app.add_option("--instance", instance_path, "instance file (verify/trace/oracle)");
    app.add_option("--delta", delta_text, "trace: delta as p/q (default (M-m+1)/10)");
    app.add_option("--steps", steps, "trace: truncation depth N (default from the tail bound)");
    app.add_option("--grid", grid, "oracle: simplex lattice resolution k");
    app.add_option("--seed", seed, "gen: generator seed; also seeds hypothesis sampling");
    app.add_option("--shape", shape_text, "gen: atoms,base_points,n_preamble,n_cycle");
    app.add_option("--cap-selections", cap_selections, "selection enumeration cap");
    app.add_option("--out", out_path, "write the report or generated instance here");

    CLI11_PARSE(app, argc, argv);

    constexpr std::size_t kHypothesisSamples = 16;

    try {
        if (mode == "gen") {
            l0simons::Shape shape;
            if (shape_text.empty() || !parse_shape(shape_text, shape)) {
                std::cerr << "gen requires --shape atoms,base_points,n_preamble,n_cycle\n";
                return 2;
            }
            l0simons::Instance instance = l0simons::generate(seed, shape);
            return emit(l0simons::serialize_instance(instance), out_path);
        }

        if (instance_path.empty()) {
            std::cerr << "mode '" << mode << "' requires --instance\n";
            return 2;
        }
        l0simons::ParseResult parsed = l0simons::parse_instance_file(instance_path);
        if (!parsed.instance) {
            for (const std::string& d : parsed.diagnostics) std::cerr << d << "\n";
            return 2;
        }
        const l0simons::Instance& instance = *parsed.instance;

        if (mode == "verify") {
            l0simons::VerifierResult result =
                l0simons::verify(instance, cap_selections, kHypothesisSamples, seed);
            int rc = emit(l0simons::verify_report(instance, result), out_path);
            if (rc != 0) return rc;
            return result.holds ? 0 : 1;
        }

        if (mode == "trace") {
            std::optional<l0simons::Rv> delta;
            if (!delta_text.empty()) {
                delta = l0simons::Rv::constant(instance.space, l0simons::parse_rat(delta_text));
            }
            try {
                l0simons::ProofTrace trace = l0simons::trace_proof(
                    instance, delta, steps, kHypothesisSamples, seed);
                int rc = emit(l0simons::trace_report(instance, trace), out_path);
                if (rc != 0) return rc;
                return trace.all_nonnegative ? 0 : 1;
            } catch (const l0simons::HypothesisFailure& e) {
                std::cerr << e.what() << "\n";
                if (e.report.witness) {
                    std::cerr << "witness weights:";
                    for (const l0simons::Rat& w : *e.report.witness) {
                        std::cerr << " " << l0simons::to_fraction_string(w);
                    }
                    std::cerr << "\n";
                }
                return 1;
            }
        }

        if (mode == "oracle") {
            l0simons::OracleComparison comparison =
                l0simons::compare_with_oracle(instance, grid, cap_selections);
            int rc = emit(l0simons::oracle_report(instance, comparison), out_path);
            if (rc != 0) return rc;
            return (comparison.lhs_equal && comparison.sandwich_ok) ? 0 : 1;
        }

        std::cerr << "unknown mode '" << mode << "'\n";
        return 2;
    } catch (const l0simons::ResourceError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const l0simons::DomainError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const l0simons::StructuralError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}

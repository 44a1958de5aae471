#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "l0simons/instance.hpp"
#include "l0simons/oracle.hpp"
#include "l0simons/verifier.hpp"

namespace l0simons {

/// Outcome of parsing an instance document. `instance` is set exactly when
/// `diagnostics` is empty; diagnostics carry key context and name every
/// malformed rational, missing key and validation failure.
struct ParseResult {
    std::optional<Instance> instance;
    std::vector<std::string> diagnostics;
};

/// Instance documents are JSON with every rational as an exact "p/q" string:
///   {
///     "atoms": [["w1", "1/2"], ["w2", "1/2"]],
///     "base_points": ["a", "b"],
///     "epsilon": ["1/1", "1/1"],
///     "functions": {"preamble": [...], "cycle": [{"a": ["1/1", ...], ...}]},
///     "S": "ALL" | [{"w1": "a", ...}, ...]
///   }
/// Decimal numbers are rejected; 0.5 must be written "1/2".
ParseResult parse_instance_text(const std::string& text);
ParseResult parse_instance_file(const std::string& path);

/// Canonical serialization; byte-stable for equal instances.
std::string serialize_instance(const Instance& instance);

/// FNV-1a 64 over the canonical serialization, rendered as hex.
std::string instance_digest(const Instance& instance);

struct Shape {
    std::size_t atoms = 1;
    std::size_t base_points = 1;
    std::size_t n_preamble = 0;
    std::size_t n_cycle = 1;
};

/// Deterministic instance from a seed: normalized positive rational masses,
/// per-atom epsilon in [1, 3], table values uniform rationals in
/// [-epsilon, epsilon], S = ALL. Identical seed and shape give identical
/// bytes. Shape caps: atoms <= 6, base points <= 6, preamble <= 4, cycle
/// in [1, 6].
Instance generate(std::uint64_t seed, const Shape& shape);

std::string verify_report(const Instance& instance, const VerifierResult& result);
std::string trace_report(const Instance& instance, const ProofTrace& trace);

/// Solver vs oracle, side by side.
struct OracleComparison {
    explicit OracleComparison(const SpacePtr& space)
        : exact_lhs(Rv::zero(space)), brute_lhs(Rv::zero(space)), exact_rhs(Rv::zero(space)),
          brute_rhs(Rv::zero(space)), rhs_gap(Rv::zero(space)), entry_range(Rv::zero(space)) {}

    unsigned grid = 1;
    Rv exact_lhs;
    Rv brute_lhs;
    Rv exact_rhs;
    Rv brute_rhs;
    Rv rhs_gap;       // brute - exact, per atom
    Rv entry_range;   // per-atom max entry minus min entry over the payoff table
    bool lhs_equal = false;
    bool sandwich_ok = false;  // 0 <= rhs_gap <= entry_range / grid per atom
};

OracleComparison compare_with_oracle(const Instance& instance, unsigned grid, std::size_t cap);
std::string oracle_report(const Instance& instance, const OracleComparison& comparison);

}  // namespace l0simons

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace l0simons {

/// Exact rational scalar. Every quantity the library compares or reports is a
/// Rat; floating point never enters an inequality check.
using Rat = mpq_class;

/// Parses "p/q" or a bare integer "p" (q > 0 after canonicalization).
/// Decimal notation is rejected on purpose: callers must spell 1/2, not 0.5.
std::optional<Rat> try_parse_rat(std::string_view text);

/// Like try_parse_rat but throws DomainError naming the offending text.
Rat parse_rat(std::string_view text);

/// Canonical rational from a possibly non-reduced pair; den must be nonzero.
/// The raw two-argument mpq_class constructor does not reduce, and GMP
/// arithmetic silently assumes canonical operands, so every variable
/// numerator/denominator pair must come through here.
Rat make_rat(long num, long den = 1);

/// Canonical "p/q" rendering with q > 0, emitted even for integers ("3/1").
std::string to_fraction_string(const Rat& value);

/// Lossy conversion for human-readable summary columns only.
double to_double(const Rat& value);

/// value^exponent by exact integer powering of numerator and denominator.
Rat rat_pow(const Rat& value, unsigned long exponent);

}  // namespace l0simons

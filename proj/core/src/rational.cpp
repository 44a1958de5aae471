#include "l0simons/rational.hpp"

#include <cctype>

#include "l0simons/errors.hpp"

namespace l0simons {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

std::optional<Rat> try_parse_rat(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    std::string_view num = body;
    std::string_view den = "1";
    if (std::size_t slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;

    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    if (negative) n = -n;

    Rat value(n, d);
    value.canonicalize();
    return value;
}

Rat parse_rat(std::string_view text) {
    if (auto value = try_parse_rat(text)) return *value;
    throw DomainError("invalid rational '" + std::string(text) +
                      "': use an exact fraction like \"1/2\"");
}

Rat make_rat(long num, long den) {
    if (den == 0) throw DomainError("make_rat: zero denominator");
    Rat value(num, den);
    value.canonicalize();
    return value;
}

std::string to_fraction_string(const Rat& value) {
    Rat canon = value;
    canon.canonicalize();
    return canon.get_num().get_str() + "/" + canon.get_den().get_str();
}

double to_double(const Rat& value) { return value.get_d(); }

Rat rat_pow(const Rat& value, unsigned long exponent) {
    if (exponent == 0) return Rat(1);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value.get_num().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), value.get_den().get_mpz_t(), exponent);
    Rat result(num, den);
    result.canonicalize();
    return result;
}

}  // namespace l0simons

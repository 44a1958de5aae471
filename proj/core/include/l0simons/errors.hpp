#pragma once

#include <stdexcept>
#include <string>

namespace l0simons {

/// Mismatched probability spaces, identifier mismatches, malformed containers.
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

/// Inputs outside an operation's mathematical domain (empty family, non-positive
/// radius, partition that does not cover the space, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration or step cap was exceeded.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace l0simons

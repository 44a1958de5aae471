#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "l0simons/errors.hpp"

namespace l0simons {

/// Finite encoding of an infinite sequence: a preamble followed by a cycle
/// repeated forever. item(n) is the n-th element (0-based) of the infinite
/// sequence. The cycle must be nonempty.
template <typename T>
class EventuallyPeriodicSeq {
  public:
    EventuallyPeriodicSeq(std::vector<T> preamble, std::vector<T> cycle)
        : preamble_(std::move(preamble)), cycle_(std::move(cycle)) {
        if (cycle_.empty()) {
            throw DomainError("eventually periodic sequence requires a nonempty cycle");
        }
    }

    const std::vector<T>& preamble() const { return preamble_; }
    const std::vector<T>& cycle() const { return cycle_; }

    const T& item(std::size_t n) const {
        if (n < preamble_.size()) return preamble_[n];
        return cycle_[(n - preamble_.size()) % cycle_.size()];
    }

  private:
    std::vector<T> preamble_;
    std::vector<T> cycle_;
};

}  // namespace l0simons

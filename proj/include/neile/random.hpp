#pragma once

#include <cstdint>

#include "neile/hyperbolic.hpp"

namespace neile {

/// Counter-based generator: the i-th draw of stream s under seed k is
/// splitmix64(k, s, i), so results are reproducible across platforms and
/// independent of draw interleaving between streams.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
        : seed_(seed), stream_(stream) {}

    std::uint64_t next_u64() noexcept;
    /// Uniform in [0, 1).
    double uniform() noexcept;
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
    /// Uniform (area measure) in the disk of the given radius.
    Complex disk(double radius = 1.0) noexcept;
    /// Uniform on the circle of the given radius.
    Complex circle(double radius = 1.0) noexcept;

    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

}  // namespace neile

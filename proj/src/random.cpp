#include "neile/random.hpp"

#include <cmath>
#include <numbers>

namespace neile {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t CounterRng::next_u64() noexcept {
    const std::uint64_t key = splitmix64(seed_ ^ splitmix64(stream_ + 0x632be59bd9b4e019ULL));
    return splitmix64(key + counter_++);
}

double CounterRng::uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Complex CounterRng::disk(double radius) noexcept {
    const double r = radius * std::sqrt(uniform());
    return std::polar(r, 2.0 * std::numbers::pi * uniform());
}

Complex CounterRng::circle(double radius) noexcept {
    return std::polar(radius, 2.0 * std::numbers::pi * uniform());
}

}  // namespace neile

#pragma once

#include <cstdint>
#include <stdexcept>

namespace zsig {

namespace detail {
inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
}  // namespace detail

/// Deterministic splitmix-style generator. Identical (seed, counter) state
/// gives an identical stream, bit for bit, on every platform; factorization
/// output and campaign sampling depend only on this.
struct RngState {
    uint64_t seed = 0;
    uint64_t counter = 0;

    RngState() = default;
    explicit RngState(uint64_t s) : seed(s) {}

    uint64_t next() {
        ++counter;
        return detail::mix64(seed + counter * 0x9e3779b97f4a7c15ULL);
    }

    /// Uniform in [0, n), unbiased. n must be nonzero.
    uint64_t below(uint64_t n) {
        if (n == 0) throw std::invalid_argument("RngState::below: empty range");
        const uint64_t limit = ~uint64_t(0) - ~uint64_t(0) % n;
        uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % n;
    }

    bool coin() { return next() & 1; }

    /// Independent substream keyed by `stream`; does not advance this state.
    RngState derive(uint64_t stream) const {
        return RngState(detail::mix64(seed ^ detail::mix64(stream + 0x5851f42d4c957f2dULL)));
    }
};

}  // namespace zsig

#ifndef MLINES_RNG_HPP
#define MLINES_RNG_HPP

#include <cstdint>

namespace mlines {

/// splitmix64 (Steele, Lea & Flood's SplittableRandom finalizer). Chosen
/// over std::mt19937 because the whole stream, including the bounded
/// draw below, is pinned here: any implementation in any language can
/// reproduce the graphs emitted by random_chordal bit for bit.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, bound) as next() mod bound. The modulo
    /// bias is irrelevant at our bounds (< 2^16) and keeps the mapping
    /// trivially portable. bound must be >= 1.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

}  // namespace mlines

#endif

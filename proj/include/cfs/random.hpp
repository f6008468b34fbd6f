#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace cfs {

// Seedable generator injected wherever randomness is consumed. Only the raw
// mt19937_64 stream is used (no std distributions) so that a seed maps to the
// same keys and nonces on every standard library.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    static RandomSource from_entropy();

    std::uint64_t next_u64() { return engine_(); }

    bool next_bit() { return (engine_() >> 63) != 0; }

    /// Uniform integer in [0, bound). bound must be nonzero.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform integer in [lo, hi], inclusive.
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi);

    std::vector<std::uint8_t> bytes(std::size_t count);

    template <typename T>
    void shuffle(std::vector<T>& items)
    {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace cfs

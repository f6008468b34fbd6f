#include "cfs/random.hpp"

#include <limits>

namespace cfs {

RandomSource RandomSource::from_entropy()
{
    std::random_device device;
    std::uint64_t seed = (static_cast<std::uint64_t>(device()) << 32) ^ device();
    return RandomSource(seed);
}

std::uint64_t RandomSource::below(std::uint64_t bound)
{
    if (bound == 0)
        return 0;
    // reject the top partial bucket
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
    for (;;) {
        std::uint64_t x = engine_();
        if (x <= limit)
            return x % bound;
    }
}

std::uint64_t RandomSource::between(std::uint64_t lo, std::uint64_t hi)
{
    std::uint64_t span = hi - lo;
    if (span == std::numeric_limits<std::uint64_t>::max())
        return engine_();
    return lo + below(span + 1);
}

std::vector<std::uint8_t> RandomSource::bytes(std::size_t count)
{
    std::vector<std::uint8_t> out(count);
    for (std::size_t i = 0; i < count; i += 8) {
        std::uint64_t x = engine_();
        for (std::size_t k = 0; k < 8 && i + k < count; ++k)
            out[i + k] = static_cast<std::uint8_t>(x >> (8 * k));
    }
    return out;
}

} // namespace cfs

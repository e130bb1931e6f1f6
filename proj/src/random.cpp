#include "tgp/random.hpp"

#include <limits>
#include <stdexcept>

namespace tgp {

RandomSource::RandomSource(std::uint64_t seed)
    : seed_(seed)
    , engine_(seed)
{
}

double RandomSource::uniform()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t RandomSource::index(std::size_t n)
{
    if (n == 0) {
        throw std::invalid_argument("RandomSource::index: empty range");
    }
    auto const bound = static_cast<std::uint64_t>(n);
    // reject the tail so every residue is equally likely
    auto const limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) {
        x = engine_();
    }
    return static_cast<std::size_t>(x % bound);
}

} // namespace tgp

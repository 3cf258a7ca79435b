#include "acx/random.hpp"

#include "acx/errors.hpp"

namespace acx {

RandomStream::RandomStream(std::uint64_t seed, int palette_size)
    : rng_(seed), seed_(seed), palette_(palette_size) {
    if (palette_size < 1) throw InvalidParamsError("palette size must be at least 1");
}

int RandomStream::next_color() {
    ++draws_;
    if (palette_ == 1) return 1;
    const std::uint64_t k = static_cast<std::uint64_t>(palette_);
    // Largest multiple of k not exceeding 2^64; values past it are rejected
    // so every color has probability exactly 1/k.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % k;
    std::uint64_t x;
    do {
        x = rng_();
    } while (x >= limit);
    return static_cast<int>(x % k) + 1;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t child_seed(std::uint64_t base_seed, std::uint64_t index) {
    // base + odd*index is injective mod 2^64 and splitmix64 is a bijection,
    // so distinct indices give distinct seeds.
    return splitmix64(base_seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

}  // namespace acx

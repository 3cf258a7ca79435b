#pragma once

#include <cstdint>
#include <random>

namespace acx {

/// Seeded stream of uniform color draws over {1, ..., K}.
///
/// All algorithms consume randomness exclusively through one stream, in a
/// documented order, so a run can be replayed bit-for-bit from (seed, K).
/// The engine is std::mt19937_64 (fully pinned by the standard) and the
/// draw uses unbiased rejection sampling, so sequences are identical across
/// platforms and standard libraries.
class RandomStream {
  public:
    RandomStream(std::uint64_t seed, int palette_size);

    /// Next color, uniform over {1, ..., palette_size()}.
    int next_color();

    int palette_size() const { return palette_; }
    std::uint64_t seed() const { return seed_; }
    /// Number of colors drawn so far.
    std::uint64_t draws() const { return draws_; }

  private:
    std::mt19937_64 rng_;
    std::uint64_t seed_ = 0;
    std::uint64_t draws_ = 0;
    int palette_ = 1;
};

/// Fixed 64-bit mix (splitmix64 finalizer).
std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic per-trial seed derivation. Injective in `index` for a fixed
/// base seed, so distinct trials always get distinct stream seeds.
std::uint64_t child_seed(std::uint64_t base_seed, std::uint64_t index);

}  // namespace acx

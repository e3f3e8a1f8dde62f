#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace relzk {

/// Deterministic random stream. All protocol randomness flows through this
/// so that a run is a pure function of its seed. mt19937_64 has a fixed
/// output sequence by the standard, so streams are stable across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    std::uint8_t next_bit() { return static_cast<std::uint8_t>(gen_() & 1u); }

    void fill_bytes(std::span<std::uint8_t> out) {
        std::size_t i = 0;
        while (i < out.size()) {
            std::uint64_t word = gen_();
            for (int b = 0; b < 8 && i < out.size(); ++b, ++i) {
                out[i] = static_cast<std::uint8_t>(word >> (8 * b));
            }
        }
    }

    /// Uniform in [0, bound) by masked rejection. bound must be > 0.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
        for (;;) {
            std::uint64_t v = gen_() & mask;
            if (v < bound) return v;
        }
    }

    /// Child stream keyed by tag, independent of how much of this stream has
    /// been consumed. Used for per-round shared prover randomness.
    Rng derive(std::uint64_t tag) const { return Rng(mix_(seed_, tag)); }

    std::uint64_t seed() const { return seed_; }

private:
    static std::uint64_t mix_(std::uint64_t a, std::uint64_t b) {
        // splitmix64 finalizer over the combined words
        std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

/// n independent uniform bits as 0/1 bytes.
inline std::vector<std::uint8_t> random_bits(std::size_t n, Rng& rng) {
    std::vector<std::uint8_t> out(n);
    for (auto& b : out) b = rng.next_bit();
    return out;
}

} // namespace relzk

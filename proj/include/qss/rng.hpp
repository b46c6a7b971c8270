// Seeded random streams. All randomness in the toolkit flows through Rng so
// that runs are reproducible bit-for-bit from a single 64-bit seed.
//
// Seed derivation (documented contract, relied on by the experiment harness):
//   derived(master, index) = splitmix64(master + 0x9E3779B97F4A7C15 * (index + 1))
// The same mixing function is used to derive per-trial seeds from the master
// seed and per-purpose stream seeds inside one protocol run.
#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace qss {

// Finalizer of the splitmix64 generator (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static std::uint64_t derive(std::uint64_t master, std::uint64_t index) {
        return splitmix64(master + 0x9E3779B97F4A7C15ULL * (index + 1));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in [0, 1), 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Uniform integer in [0, bound). Lemire's multiply-with-rejection, exact.
    std::uint32_t uniform_int(std::uint32_t bound) {
        std::uint64_t x = next_u64();
        unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = (0ULL - bound) % bound;
            while (lo < threshold) {
                x = next_u64();
                m = static_cast<unsigned __int128>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint32_t>(m >> 64);
    }

    int coin() { return static_cast<int>(next_u64() >> 63); }

    // In-place Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = uniform_int(static_cast<std::uint32_t>(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace qss

#ifndef LRAMSEY_RNG_HPP
#define LRAMSEY_RNG_HPP

#include <cstdint>
#include <vector>

namespace lramsey {

// Splittable counter-based generator so sweeps are reproducible no matter
// how work is divided among threads: stream i of seed s is splitmix64
// seeded with mix(s, i).
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = -bound % bound;
        while (true) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mixer(seed ^ (0x5851f42d4c957f2dULL * (index + 1)));
        std::uint64_t s = mixer.next();
        return SplitMix64(s);
    }
};

// k distinct values from [0, universe), sorted.
std::vector<int> sample_sorted_subset(SplitMix64& rng, int universe, int k);

}  // namespace lramsey

#endif

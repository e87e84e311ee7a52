#ifndef PATMINE_RNG_HPP
#define PATMINE_RNG_HPP

#include <cstdint>
#include <random>

namespace patmine {

// Seedable generator with platform-independent output. The engine is
// mt19937_64 (its sequence is fixed by the standard); doubles and bounded
// integers are derived here rather than through std distributions, whose
// output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, n), unbiased via rejection.
    std::uint64_t next_index(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

private:
    std::mt19937_64 gen_;
};

// SplitMix64 step, used to derive independent per-replica seeds from a
// master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace patmine

#endif

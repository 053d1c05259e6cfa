#ifndef ISOCLUST_RANDOM_HPP
#define ISOCLUST_RANDOM_HPP

#include <cstdint>

namespace isoclust {

// SplitMix64 (Steele, Lea & Flood). Fixed output on every platform, which
// std::uniform_*_distribution does not guarantee.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Independent generator for substream `index`; earlier substreams are
    // unaffected by how many later ones are drawn.
    SplitMix64 substream(std::uint64_t index) const {
        SplitMix64 mixer(state_ ^ (0xD1B54A32D192ED03ULL * (index + 1)));
        return SplitMix64(mixer());
    }

    // Uniform integer in [0, bound), bound > 0, by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = max() - max() % bound;
        std::uint64_t x;
        do {
            x = (*this)();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform double in (0, 1].
    double unit_open_closed() {
        return (static_cast<double>((*this)() >> 11) + 1.0) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

}  // namespace isoclust

#endif  // ISOCLUST_RANDOM_HPP

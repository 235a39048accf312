#ifndef ZARISKI_RNG_HPP
#define ZARISKI_RNG_HPP

#include <cstdint>

namespace zariski {

// splitmix64; all randomized pieces (shears, property-test sampling,
// equal-degree splitting) draw from one of these with a fixed seed so
// runs are reproducible byte for byte.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed = 0x9e3779b97f4a7c15ull) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }
    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }
};

} // namespace zariski

#endif

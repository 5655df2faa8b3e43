#pragma once

// Deterministic splitmix64 generator.  The standard <random> distributions
// are implementation-defined across library versions; report byte-determinism
// requires this fixed stream.

#include <cstdint>

namespace qsp {

struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n > 0.  Modulo bias is irrelevant at the bounds used.
    uint64_t below(uint64_t n) { return next() % n; }
};

}  // namespace qsp

#ifndef ORTHOSMITH_RNG_HPP
#define ORTHOSMITH_RNG_HPP

#include <cstdint>

namespace orthosmith::rng {

// Counter-based generator: a value is a pure function of (seed, stream,
// counter), so any partition of the work across threads reproduces the
// serial run bit for bit.  Streams index samples, counters index the entry
// slots inside a sample.
inline std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t at(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return mix(mix(mix(seed) ^ stream) ^ counter);
}

// Uniform on {1, ..., k}.  The modulo bias is k / 2^64, far below anything
// the five-sigma acceptance checks can see at desk-scale sample counts.
inline std::uint64_t uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter,
                             std::uint64_t k) {
    return 1 + at(seed, stream, counter) % k;
}

} // namespace orthosmith::rng

#endif

// Deterministic random streams, one per consumer. Each stream is seeded by
// mixing the run seed with a stable label, so adding a consumer never
// perturbs the others. Distribution sampling is hand-rolled on top of
// std::mt19937_64 (whose output sequence is pinned by the standard) because
// the std::*_distribution algorithms are implementation-defined.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace provsim {

namespace detail {

inline std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t hash = 1469598103934665603ull;
    for (const char c : text) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ull;
    }
    return hash;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace detail

inline std::mt19937_64 make_stream(std::uint64_t run_seed, std::string_view label) {
    return std::mt19937_64(detail::splitmix64(run_seed ^ detail::fnv1a(label)));
}

// Uniform in [0,1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_double(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(rng);
}

// Uniform integer in [0, n). n must be > 0.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

// Exponential with the given mean (inverse-CDF on a (0,1] uniform).
inline double exponential(std::mt19937_64& rng, double mean) {
    return -mean * std::log(1.0 - uniform_unit(rng));
}

}  // namespace provsim

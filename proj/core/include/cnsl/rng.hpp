#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace cnsl {

// All randomness in the pipeline flows from one root seed. Stages and
// per-item sub-streams derive independent generators through seed
// mixing, so any stage can be rerun (or parallelized) without touching
// the draws of another.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t root, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t h = splitmix64(root ^ 0x243f6a8885a308d3ULL);
    h = splitmix64(h ^ splitmix64(a));
    h = splitmix64(h ^ splitmix64(b ^ 0x13198a2e03707344ULL));
    return h;
}

// FNV-1a over the stage name keeps stage streams stable across code
// changes that reorder call sites.
inline std::uint64_t stage_seed(std::uint64_t root, std::string_view stage) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : stage) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return mix_seed(root, h);
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

inline std::mt19937_64 make_rng(std::uint64_t root, std::uint64_t a, std::uint64_t b = 0) {
    return std::mt19937_64(mix_seed(root, a, b));
}

inline double uniform01(std::mt19937_64& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace cnsl

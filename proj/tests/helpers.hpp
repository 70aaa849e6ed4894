#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

namespace testutil {

// Default seed for all randomized tests; override with AUTOSEQ_SEED or
// --seed on the test binary.
inline constexpr std::uint64_t kDefaultSeed = 20240901;

inline std::uint64_t& seed_storage() {
    static std::uint64_t seed = [] {
        if (const char* env = std::getenv("AUTOSEQ_SEED"))
            return static_cast<std::uint64_t>(std::strtoull(env, nullptr, 10));
        return kDefaultSeed;
    }();
    return seed;
}

inline std::uint64_t seed() { return seed_storage(); }

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) {
    return std::mt19937_64(seed() + salt);
}

}  // namespace testutil

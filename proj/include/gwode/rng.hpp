#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace gwode {

// SplitMix64 finalizer. Used for key derivation and generator seeding so that
// every stream is identified by a single 64-bit key.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
    return mix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

// FNV-1a, fixed across platforms (std::hash is implementation-defined).
constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Deterministic random stream (xoshiro256**). Identical keys yield identical
/// draw sequences on every platform. Child streams are derived from the key,
/// not from the current state, so derivation order never matters.
class RngStream {
public:
    RngStream() : RngStream(0, 0) {}
    RngStream(std::uint64_t seed, std::uint64_t stream_id);
    static RngStream from_key(std::uint64_t key);

    std::uint64_t key() const { return key_; }

    std::uint64_t next_u64();

    /// Uniform draw in [0, 1).
    double uniform01();
    /// Uniform draw in [0, 1] (closed upper end).
    double uniform01_closed();
    /// Uniform draw in [lo, hi).
    double uniform(double lo, double hi);
    /// Unbiased uniform integer in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n);
    /// Standard normal via Box-Muller (two uniform draws per call).
    double normal();

    /// Child stream keyed by (key, tag_a, tag_b); const, parent state untouched.
    RngStream derive(std::uint64_t tag_a, std::uint64_t tag_b = 0) const;

private:
    std::uint64_t key_;
    std::array<std::uint64_t, 4> state_;

    void seed_state();
};

} // namespace gwode

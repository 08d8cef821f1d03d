#include "gwode/rng.hpp"

#include <cmath>
#include <numbers>

namespace gwode {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : key_(hash_combine(mix64(seed), stream_id)) {
    seed_state();
}

RngStream RngStream::from_key(std::uint64_t key) {
    RngStream s;
    s.key_ = key;
    s.seed_state();
    return s;
}

void RngStream::seed_state() {
    // SplitMix64 chain off the key; guards against the all-zero state.
    std::uint64_t z = key_;
    for (auto& w : state_) {
        z += 0x9e3779b97f4a7c15ULL;
        std::uint64_t t = z;
        t = (t ^ (t >> 30)) * 0xbf58476d1ce4e5b9ULL;
        t = (t ^ (t >> 27)) * 0x94d049bb133111ebULL;
        w = t ^ (t >> 31);
    }
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RngStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform01_closed() {
    // 53-bit draw scaled by 1/(2^53 - 1) so 1.0 is attainable.
    return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740991.0);
}

double RngStream::uniform(double lo, double hi) {
    return lo + uniform01() * (hi - lo);
}

std::uint64_t RngStream::below(std::uint64_t n) {
    // Rejection from the top keeps the draw unbiased for any n.
    const std::uint64_t threshold = (0 - n) % n;
    std::uint64_t r;
    do {
        r = next_u64();
    } while (r < threshold);
    return r % n;
}

double RngStream::normal() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    return r * std::cos(2.0 * std::numbers::pi * u2);
}

RngStream RngStream::derive(std::uint64_t tag_a, std::uint64_t tag_b) const {
    return from_key(hash_combine(hash_combine(key_, tag_a), tag_b));
}

} // namespace gwode

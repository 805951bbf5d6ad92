// Deterministic, splittable randomness: xoshiro256** seeded through
// SplitMix64, with platform-independent uniform doubles. Each trial of a
// protocol run gets its own stream derived from (seed, trial index).

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qv {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Xoshiro256 {
  public:
    explicit Xoshiro256(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64(sm);
    }

    static Xoshiro256 stream(uint64_t seed, uint64_t index) {
        uint64_t sm = seed;
        const uint64_t mixed = splitmix64(sm) ^ (index * 0xd1342543de82ef95ULL + 1);
        return Xoshiro256(mixed);
    }

    uint64_t next() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [0, 1) with 53 significant bits
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // index sampled from unnormalized nonnegative weights
    int discrete(const std::vector<double>& weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        if (!(total > 0.0)) throw std::invalid_argument("discrete: no probability mass");
        double u = uniform() * total;
        for (size_t i = 0; i < weights.size(); ++i) {
            u -= weights[i];
            if (u < 0.0) return static_cast<int>(i);
        }
        return static_cast<int>(weights.size()) - 1;
    }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

}  // namespace qv

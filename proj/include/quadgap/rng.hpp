#pragma once

#include <string_view>

#include "quadgap/int_types.hpp"

namespace quadgap {

// SplitMix64. Integer-only, fully specified, so streams are identical on any
// platform and thread count. Substreams are derived by name, never by draw
// order, which keeps parallel consumers deterministic.
class SplitMix64 {
  public:
    explicit SplitMix64(u64 seed) : state_(seed) {}

    u64 next() {
        u64 z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from [0, n) by rejection.
    u64 uniform_below(u64 n) {
        if (n == 0) throw std::invalid_argument("uniform_below(0)");
        u64 threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            u64 r = next();
            if (r >= threshold) return r % n;
        }
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Named substream: seed' = mix(seed, fnv1a(label), salt).
    SplitMix64 split(std::string_view label, u64 salt = 0) const {
        u64 h = 0xcbf29ce484222325ull;
        for (char c : label) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ull;
        }
        SplitMix64 mixer(state_ ^ (h + 0x9e3779b97f4a7c15ull * (salt + 1)));
        return SplitMix64(mixer.next());
    }

  private:
    u64 state_;
};

}  // namespace quadgap

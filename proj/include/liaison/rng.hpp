/*
   Copyright 2026 The Liaison Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LIAISON_RNG_HPP
#define LIAISON_RNG_HPP

#include <cstdint>

namespace liaison {

/// splitmix64 step; also used to derive successor seeds on resampling.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic generator; all randomness in the engine flows through this.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return splitmix64_next(state_); }

    /// Uniform in [0, n), n > 0, by rejection.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform integer in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Uniform in {-bound..bound} \ {0}.
    std::int64_t nonzero(std::int64_t bound) {
        std::int64_t v = range(1, 2 * bound);
        return v <= bound ? v : bound - v;  // 1..B, then -1..-B
    }

private:
    std::uint64_t state_;
};

/// Successor seed for the documented resample chain.
inline std::uint64_t derive_seed(std::uint64_t seed) {
    std::uint64_t s = seed;
    return splitmix64_next(s);
}

}  // namespace liaison

#endif

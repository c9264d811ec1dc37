#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace vcs {

// Deterministic stream generator "vcs-splitmix64 v1". The whole chain is
// spelled out here (no standard-library distributions) so that encodings
// reproduce bit-for-bit on any platform and compiler.
class Splitmix64 {
public:
    explicit constexpr Splitmix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, n) by rejection; n >= 1.
    constexpr std::uint64_t bounded(std::uint64_t n)
    {
        if (n <= 1)
            return 0;
        const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold)
                return r % n;
        }
    }

private:
    std::uint64_t state_;
};

// Independent per-pixel stream derived from (seed, x, y). Pixels can be
// encoded in any order, or in parallel, without changing the output.
inline Splitmix64 pixel_stream(std::uint64_t seed, int x, int y)
{
    Splitmix64 a(seed);
    std::uint64_t h = a.next();
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) * 0xD6E8FEB86659FD93ull;
    h = Splitmix64(h).next();
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(y)) * 0xCA5A826395121157ull;
    return Splitmix64(Splitmix64(h).next());
}

// Fisher-Yates shuffle of the identity, uniform over all n! orders.
inline std::vector<int> random_permutation(int n, Splitmix64& rng)
{
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(i) + 1));
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    }
    return perm;
}

} // namespace vcs

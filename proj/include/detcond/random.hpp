#pragma once

// Seeded corpus generation. The generator and the integer mapping are fixed
// here (see docs/corpus.md) so any implementation can rebuild the same
// matrices from the same seed. std::uniform_int_distribution is avoided
// because its output is implementation-defined.

#include "detcond/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>

namespace detcond {

/// SplitMix64 (Steele, Lea and Flood). split() seeds an independent child
/// generator from the parent's next output.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    SplitMix64 split() { return SplitMix64(next()); }

    /// Uniform integer in [lo, hi] by rejection: raw outputs below
    /// 2^64 mod span are discarded, the rest reduced modulo span.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    /// Uniform over [-bound, -1] u [1, bound].
    std::int64_t uniform_nonzero(std::int64_t bound);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()() { return next(); }

private:
    std::uint64_t state_;
};

/// n x n matrix, entries uniform in [-bound, bound], drawn row-major.
Matrix<Integer> random_integer_matrix(SplitMix64& rng, std::size_t n, std::int64_t bound);

/// n x n matrix of p/q with p and q each uniform over [-bound, bound] \ {0},
/// drawn row-major, numerator before denominator.
Matrix<Rational> random_rational_matrix(SplitMix64& rng, std::size_t n, std::int64_t bound);

}  // namespace detcond

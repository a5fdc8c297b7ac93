#include "detcond/random.hpp"

#include <stdexcept>
#include <vector>

namespace detcond {

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t threshold = (0 - span) % span;
    for (;;) {
        const std::uint64_t r = next();
        if (r >= threshold) return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r % span);
    }
}

std::int64_t SplitMix64::uniform_nonzero(std::int64_t bound) {
    if (bound < 1) throw std::invalid_argument("uniform_nonzero: bound must be positive");
    const std::int64_t v = uniform(1, 2 * bound);
    return v <= bound ? -v : v - bound;
}

Matrix<Integer> random_integer_matrix(SplitMix64& rng, std::size_t n, std::int64_t bound) {
    std::vector<Integer> entries;
    entries.reserve(n * n);
    for (std::size_t t = 0; t < n * n; ++t) entries.emplace_back(static_cast<long>(rng.uniform(-bound, bound)));
    return Matrix<Integer>(n, n, std::move(entries));
}

Matrix<Rational> random_rational_matrix(SplitMix64& rng, std::size_t n, std::int64_t bound) {
    std::vector<Rational> entries;
    entries.reserve(n * n);
    for (std::size_t t = 0; t < n * n; ++t) {
        const auto p = rng.uniform_nonzero(bound);
        const auto q = rng.uniform_nonzero(bound);
        entries.emplace_back(static_cast<long>(p), static_cast<long>(q));
    }
    return Matrix<Rational>(n, n, std::move(entries));
}

}  // namespace detcond

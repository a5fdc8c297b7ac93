#pragma once

#include <cstdint>

namespace detcond {

/// Scalar operation tally for one determinant evaluation. Counters are owned
/// by the caller; nothing here is global.
struct OpCounts {
    std::uint64_t multiplications = 0;
    std::uint64_t subtractions = 0;
    std::uint64_t divisions = 0;
    // Multiplications spent raising a pivot to a power. Kept apart from
    // `multiplications` so the condensation count has a closed form.
    std::uint64_t pivot_power_multiplications = 0;

    std::uint64_t total_multiplications() const { return multiplications + pivot_power_multiplications; }

    friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

}  // namespace detcond

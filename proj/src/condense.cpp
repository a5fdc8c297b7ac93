#include "detcond/condense.hpp"

namespace detcond {

PivotStrategy parse_pivot_strategy(std::string_view name) {
    if (name == "first-nonzero") return PivotStrategy::first_nonzero;
    if (name == "max-magnitude") return PivotStrategy::max_magnitude;
    throw std::invalid_argument("unknown pivot strategy '" + std::string(name) + "'");
}

std::string_view to_string(PivotStrategy strategy) {
    switch (strategy) {
        case PivotStrategy::first_nonzero: return "first-nonzero";
        case PivotStrategy::max_magnitude: return "max-magnitude";
    }
    return "unknown";
}

}  // namespace detcond

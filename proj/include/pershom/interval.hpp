#pragma once

// Half-open persistence intervals [birth, death) over the natural numbers;
// an absent death means [birth, infinity).  Valid intervals are nonempty
// (birth < death).

#include <optional>
#include <string>

#include "pershom/diagnostics.hpp"

namespace pershom {

struct Interval {
    unsigned birth = 0;
    std::optional<unsigned> death;  // absent: essential (never dies)

    bool finite() const { return death.has_value(); }
    bool contains(unsigned t) const { return birth <= t && (!death || t < *death); }

    // [t, s] subset of the interval; requires t <= s.
    bool contains_range(unsigned t, unsigned s) const {
        return birth <= t && (!death || s < *death);
    }

    bool operator==(const Interval&) const = default;
};

inline void validate_interval(const Interval& j) {
    validate(!j.death || j.birth < *j.death, "interval is empty: birth " +
                                                 std::to_string(j.birth) + ", death " +
                                                 std::to_string(j.death ? *j.death : 0u));
}

// (birth, death) order with finite deaths before infinite ones.
inline bool interval_less(const Interval& a, const Interval& b) {
    if (a.birth != b.birth) return a.birth < b.birth;
    if (a.death.has_value() != b.death.has_value()) return a.death.has_value();
    if (a.death && b.death) return *a.death < *b.death;
    return false;
}

inline std::string interval_to_text(const Interval& j) {
    return "[" + std::to_string(j.birth) + ", " +
           (j.death ? std::to_string(*j.death) : std::string("inf")) + ")";
}

}  // namespace pershom

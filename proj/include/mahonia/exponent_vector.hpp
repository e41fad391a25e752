#pragma once

#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

namespace mahonia {

/// Length-n vector of bounded naturals. Two bound profiles occur here: the
/// staircase profile (entry i at most i, zero-based) underlying inversion
/// counts, and the box profile (every entry at most d-1) underlying bounded
/// compositions.
struct ExponentVector {
    std::vector<unsigned> entries;

    unsigned long sum() const {
        return std::accumulate(entries.begin(), entries.end(), 0ul);
    }

    /// Staircase bound: entries[i] <= i.
    bool within_staircase() const {
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i] > i) return false;
        return true;
    }

    /// Box bound: every entry <= d-1.
    bool within_box(unsigned d) const {
        for (unsigned e : entries)
            if (e + 1 > d) return false;
        return true;
    }
};

namespace detail {

/// Odometer walk over all vectors with entries[i] in [0, bounds[i]].
/// Reuses one vector; the callback must not retain the reference.
inline void for_each_bounded_vector(const std::vector<unsigned>& bounds,
                                    const std::function<void(const ExponentVector&)>& fn) {
    ExponentVector v{std::vector<unsigned>(bounds.size(), 0u)};
    for (;;) {
        fn(v);
        std::size_t i = 0;
        while (i < bounds.size() && v.entries[i] == bounds[i]) v.entries[i++] = 0;
        if (i == bounds.size()) return;
        ++v.entries[i];
    }
}

}  // namespace detail

}  // namespace mahonia

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "netcrit/types.hpp"

namespace netcrit::testing {

inline double rel_err(double actual, double expected) {
    return std::abs(actual / expected - 1.0);
}

// Greedy nearest matching between two complex multisets; returns the largest
// matched distance (infinity on size mismatch).
inline double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (const Complex& value : a) {
        auto best = std::min_element(b.begin(), b.end(), [&](const Complex& x, const Complex& y) {
            return std::abs(x - value) < std::abs(y - value);
        });
        worst = std::max(worst, std::abs(*best - value));
        b.erase(best);
    }
    return worst;
}

inline bool strictly_increasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] <= v[i - 1]) return false;
    return true;
}

inline bool strictly_decreasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] >= v[i - 1]) return false;
    return true;
}

}  // namespace netcrit::testing

#pragma once

#include <cmath>
#include <cstdint>

namespace polarqa {

// Banker's rounding: ties go to the even integer (round(0.5)=0, round(1.5)=2,
// round(2.5)=2). Used wherever a fractional count becomes a whole one so the
// boundary is deterministic and bias-free.
inline long long round_half_even(double x) {
    double f = std::floor(x);
    double diff = x - f;
    if (diff > 0.5) return static_cast<long long>(f) + 1;
    if (diff < 0.5) return static_cast<long long>(f);
    long long fi = static_cast<long long>(f);
    return fi % 2 == 0 ? fi : fi + 1;
}

}  // namespace polarqa

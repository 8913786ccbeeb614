#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace oddc {

/// Half-open interval [lo, hi) over the extended reals. The lower end is
/// closed, the upper end open; either end may be infinite. Empty intervals
/// are canonically [0, 0).
///
/// Endpoint comparisons are exact floating-point comparisons, no tolerance.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    static constexpr double inf() { return std::numeric_limits<double>::infinity(); }

    static Interval empty() { return {0.0, 0.0}; }
    static Interval full() { return {-inf(), inf()}; }
    /// [a, +inf)
    static Interval at_least(double a) { return {a, inf()}; }
    /// (-inf, b)
    static Interval below(double b) { return {-inf(), b}; }

    bool is_empty() const { return !(lo < hi); }

    /// Membership test: lo <= x < hi. By convention +inf belongs to any
    /// interval with an infinite upper end, so that [rho, inf) absorbs
    /// instances whose log-odds sum to +inf (strict-zero weights).
    bool contains(double x) const {
        if (std::isnan(x)) throw std::invalid_argument("Interval::contains: NaN query");
        if (is_empty()) return false;
        if (x == inf()) return hi == inf();
        return lo <= x && x < hi;
    }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// [lo + delta, hi + delta); infinite endpoints are unchanged.
inline Interval offset(const Interval& iv, double delta) {
    if (!std::isfinite(delta)) throw std::invalid_argument("offset: delta must be finite");
    if (iv.is_empty()) return Interval::empty();
    return {iv.lo + delta, iv.hi + delta};
}

/// [max(lo), min(hi)), canonically empty when the ends cross.
inline Interval intersect(const Interval& a, const Interval& b) {
    Interval r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
    if (r.is_empty()) return Interval::empty();
    return r;
}

/// Report rendering: "[lo, hi)" with 6 significant digits, infinities
/// spelled as -inf/inf.
std::string to_string(const Interval& iv);

} // namespace oddc

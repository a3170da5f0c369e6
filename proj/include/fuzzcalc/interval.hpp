#pragma once

namespace fuzzcalc {

/// One closed level set [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }

    bool contains(double x, double slack = 0.0) const {
        return x >= lo - slack && x <= hi + slack;
    }
    /// True when `other` lies inside this interval (with slack on both ends).
    bool contains(const Interval& other, double slack = 0.0) const {
        return other.lo >= lo - slack && other.hi <= hi + slack;
    }

    bool operator==(const Interval& other) const {
        return lo == other.lo && hi == other.hi;
    }
};

}  // namespace fuzzcalc

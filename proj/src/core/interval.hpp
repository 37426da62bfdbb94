#ifndef MONO_INTERVAL_HPP
#define MONO_INTERVAL_HPP

#include "rational.hpp"

namespace mono {

enum class IntervalKind { Open, Closed, HalfOpenLo, HalfOpenHi };
// HalfOpenLo = (lo, hi], HalfOpenHi = [lo, hi)

// Rational-endpoint interval. Arithmetic is exact, so "outward rounding"
// is just taking exact min/max of endpoint products.
struct RatInterval {
    Rational lo, hi;
    IntervalKind kind = IntervalKind::Closed;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rational l, Rational h, IntervalKind k = IntervalKind::Closed)
        : lo(std::move(l)), hi(std::move(h)), kind(k) {
        if (lo > hi) throw DomainError("interval with lo > hi");
    }

    static RatInterval point(const Rational& v) { return RatInterval(v, v, IntervalKind::Closed); }

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }

    bool lo_closed() const { return kind == IntervalKind::Closed || kind == IntervalKind::HalfOpenHi; }
    bool hi_closed() const { return kind == IntervalKind::Closed || kind == IntervalKind::HalfOpenLo; }

    bool contains(const Rational& v) const {
        if (v < lo || v > hi) return false;
        if (v == lo && !lo_closed()) return false;
        if (v == hi && !hi_closed()) return false;
        return true;
    }

    // Set containment, ignoring endpoint kinds (used for enclosure nesting
    // checks where all intervals are closed enclosures).
    bool contains_interval(const RatInterval& other) const {
        return lo <= other.lo && other.hi <= hi;
    }

    bool disjoint_from(const RatInterval& other) const {
        if (hi < other.lo || other.hi < lo) return true;
        if (hi == other.lo) return !(hi_closed() && other.lo_closed());
        if (other.hi == lo) return !(other.hi_closed() && lo_closed());
        return false;
    }
};

inline RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return RatInterval(a.lo + b.lo, a.hi + b.hi);
}

inline RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return RatInterval(a.lo - b.hi, a.hi - b.lo);
}

inline RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return RatInterval(lo, hi);
}

inline RatInterval operator*(const Rational& c, const RatInterval& a) {
    if (sgn(c) >= 0) return RatInterval(c * a.lo, c * a.hi);
    return RatInterval(c * a.hi, c * a.lo);
}

inline RatInterval operator+(const Rational& c, const RatInterval& a) {
    return RatInterval(c + a.lo, c + a.hi);
}

} // namespace mono

#endif

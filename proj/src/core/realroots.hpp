#ifndef MONO_REALROOTS_HPP
#define MONO_REALROOTS_HPP

#include <vector>

#include "interval.hpp"
#include "unipoly.hpp"

namespace mono {

// Isolating intervals for the distinct real roots of a polynomial.
// Intervals are sorted, pairwise disjoint, and either open with dyadic
// endpoints that are not roots, or exact rational roots as point
// intervals.
struct RootList {
    RatPoly polynomial;
    std::vector<RatInterval> intervals;
    std::vector<unsigned> multiplicities;

    std::size_t size() const { return intervals.size(); }
};

enum class RootDomain { All, Positive };

// Descartes'-rule bisection (VCA) on the squarefree part; multiplicities
// recovered from a Yun decomposition. Above kSquarefreeDegreeLimit the
// input is assumed squarefree (the cycle-polynomial path guarantees this
// off bifurcation boundaries); a suspected multiple root raises
// CertificationError instead of looping.
RootList isolate_roots(const RatPoly& f, RootDomain domain = RootDomain::All);

inline constexpr int kSquarefreeDegreeLimit = 64;

// Exact count of distinct real roots of f in I (Sturm's theorem on the
// squarefree part, endpoint membership per interval kind).
long sturm_count(const RatPoly& f, const RatInterval& interval);

// Shrinks an isolating interval below the requested width by bisection
// with exact sign evaluation. The root never escapes the interval.
RatInterval refine(const RatPoly& f, const RatInterval& isolating, const Rational& width);

// Exact sign of f at x, with an integer fast path for dyadic points.
int sign_at(const RatPoly& f, const Rational& x);

// Refine an isolating interval until the predicate holds for the
// enclosure, halving at most max_halvings times.
template <class Pred>
RatInterval refine_until(const RatPoly& f, RatInterval iv, unsigned max_halvings, Pred&& pred) {
    for (unsigned i = 0; i <= max_halvings; ++i) {
        if (pred(iv)) return iv;
        if (i == max_halvings) break;
        iv = refine(f, iv, iv.is_point() ? Rational(0) : iv.width() / 2);
        if (iv.is_point()) {
            if (pred(iv)) return iv;
            break;
        }
    }
    throw CertificationError("refinement budget exhausted before certification");
}

} // namespace mono

#endif

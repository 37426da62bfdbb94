#ifndef MONO_ORBITS_HPP
#define MONO_ORBITS_HPP

#include <functional>
#include <string>
#include <vector>

#include "models.hpp"
#include "realroots.hpp"

namespace mono {

enum class Stability { Stable, Unstable, Nonhyperbolic };

// One certified n-cycle: points in cyclic order under F starting at the
// smallest, a multiplier enclosure, and the stability verdict.
struct Orbit {
    unsigned order = 1;
    std::vector<RatInterval> points;
    RatInterval multiplier;
    Stability stability = Stability::Nonhyperbolic;
};

// All distinct positive n-cycles of the map, stability already classified.
// Roots of C_n are grouped into orbits by refining each isolating interval
// until its image under F lands inside exactly one other interval.
// Throws NonHyperbolicError when C_n has a multiple root or a root of
// exact period < n (parameter on a bifurcation boundary).
std::vector<Orbit> enumerate_cycles(const IterMap& map, unsigned n);

// Raw positive root count of C_n (the "real solutions" convention, equal
// to orbit count times n away from bifurcations).
long cycle_solution_count(const IterMap& map, unsigned n);

// Certifies the multiplier enclosure strictly inside (-1,1) or strictly
// outside [-1,1], refining orbit points as needed; Nonhyperbolic when the
// refinement budget is exhausted with the enclosure still straddling.
Stability classify_stability(const IterMap& map, Orbit& orbit);

// Enclosure of the magnitude measure d = sum of squared consecutive
// differences (cyclic), refined to the requested width. For the parameter
// families with reference magnitude polynomials (Model 1 n=2; Model 2
// standard a,b,c,d with n in {2,3,4}) the enclosure is verified to
// bracket a root of one of those polynomials.
RatInterval magnitude(const IterMap& map, const Orbit& orbit, const Rational& width);

// The reference magnitude polynomials in the magnitude variable, with the
// map's parameters substituted; empty when no oracle applies.
std::vector<RatPoly> magnitude_oracles(const IterMap& map, unsigned n);

struct ThresholdBracket {
    RatInterval bracket;                // in the scanned parameter
    std::pair<long, long> before;       // (orbit count, stable count) at bracket.lo
    std::pair<long, long> after;        // at bracket.hi
};

struct ThresholdReport {
    unsigned order = 1;
    std::vector<ThresholdBracket> brackets;
    std::vector<std::string> notes;     // e.g. perturbed probes
};

// Certified bisection for parameter values where the (orbit count,
// stable count) pair changes. The family maps a scanned parameter value
// to an IterMap; probes landing on a bifurcation are perturbed by tol/10
// and retried (logged in notes). Segments whose endpoint pairs agree are
// split down to min_split before being discarded (0 = discard at once).
ThresholdReport find_thresholds_family(const std::function<IterMap(const Rational&)>& family,
                                       unsigned n, const RatInterval& search, const Rational& tol,
                                       const Rational& min_split = Rational(0));

// Model 2 over K at the standard parameters (a,b,c,d) = (18/5, 12/5, 3/5, 1/20).
ThresholdReport find_thresholds(unsigned n, const RatInterval& search, const Rational& tol,
                                const Rational& min_split = Rational(0));

std::map<char, Rational> model2_standard_params(const Rational& K);

// Line-oriented report: one orbit per line with order, decimal midpoints,
// multiplier enclosure, stability tag.
std::string serialize_orbits(const std::vector<Orbit>& orbits, unsigned decimals = 9);
std::string serialize_thresholds(const ThresholdReport& report, unsigned decimals = 9);

} // namespace mono

#endif

#ifndef MONO_SEMIALG_HPP
#define MONO_SEMIALG_HPP

#include <map>
#include <string>
#include <vector>

#include "realroots.hpp"
#include "unipoly.hpp"

namespace mono {

enum class Relation { Greater, NotEqual };

// Univariate semi-algebraic system {P = 0, Q_i > 0 or Q_i != 0} at fixed
// rational parameters. "Q < 0" is expressed by negating Q.
struct SemiSystem {
    RatPoly equation;
    std::vector<std::pair<RatPoly, Relation>> constraints;
    bool positivity = false; // adds the constraint x > 0
};

// Same system with the parameters still symbolic.
struct ParamSemiSystem {
    ParamUniPoly equation;
    std::vector<std::pair<ParamUniPoly, Relation>> constraints;
    bool positivity = false;

    SemiSystem at(const std::map<char, Rational>& probe) const;
};

enum class BorderSource { LeadingCoeff, Discriminant, ResultantWithConstraint };

// Factored border polynomial: leading coefficient, discriminant, one
// resultant per constraint (including the positivity constraint x).
struct BorderPoly {
    std::vector<std::pair<ParamPoly, BorderSource>> factors;

    ParamPoly product() const;
    bool vanishes_at(const std::map<char, Rational>& probe) const;
};

// Exact number of distinct real x satisfying the system. Roots shared by
// P and a constraint polynomial are removed first (they cannot satisfy
// > 0 and are excluded for != 0); remaining roots are counted by Sturm
// queries on the complementary intervals of the constraint roots.
long count_solutions(const SemiSystem& s);

BorderPoly border_polynomial(const ParamSemiSystem& s);

struct SignRow {
    std::map<char, Rational> probe;
    long count = 0;
    std::vector<int> signs; // one per tracked polynomial
};

struct SignReport {
    std::vector<char> param_order;
    std::vector<std::string> tracked_names;
    std::vector<SignRow> rows;

    std::string to_csv() const;
};

// Solution count plus tracked-polynomial signs at each probe. Throws
// DegenerateProbeError when a probe annihilates the border polynomial
// (counts are not invariant there).
SignReport sign_conditions_report(const ParamSemiSystem& s,
                                  const std::vector<std::map<char, Rational>>& probes,
                                  const std::vector<std::pair<std::string, ParamPoly>>& tracked);

} // namespace mono

#endif

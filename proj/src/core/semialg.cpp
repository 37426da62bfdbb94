#include "semialg.hpp"

#include <algorithm>
#include <sstream>

namespace mono {

SemiSystem ParamSemiSystem::at(const std::map<char, Rational>& probe) const {
    SemiSystem s;
    s.equation = substitute_params(equation, probe);
    for (const auto& [q, rel] : constraints)
        s.constraints.emplace_back(substitute_params(q, probe), rel);
    s.positivity = positivity;
    return s;
}

ParamPoly BorderPoly::product() const {
    ParamPoly p(Rational(1));
    for (const auto& [f, src] : factors) p *= f;
    return p;
}

bool BorderPoly::vanishes_at(const std::map<char, Rational>& probe) const {
    for (const auto& [f, src] : factors)
        if (sgn(f.evaluate(probe)) == 0) return true;
    return false;
}

namespace {

// Remove from P every factor it shares with Q: such roots have Q = 0 and
// can satisfy neither Q > 0 nor Q != 0.
RatPoly remove_common_factors(RatPoly p, const RatPoly& q) {
    if (q.is_zero() || q.degree() == 0) return p;
    for (;;) {
        RatPoly g = poly_gcd(p, q);
        if (g.degree() == 0) return p;
        p = RatPoly::exact_div(p, g);
        if (p.degree() == 0) return p;
    }
}

} // namespace

long count_solutions(const SemiSystem& s) {
    if (s.equation.is_zero()) throw DomainError("count_solutions: zero equation polynomial");

    RatPoly p = s.equation;
    std::vector<std::pair<RatPoly, Relation>> qs = s.constraints;
    if (s.positivity) qs.emplace_back(RatPoly::identity(p.variable()), Relation::Greater);

    // Constant constraints are decided immediately.
    std::vector<std::pair<RatPoly, Relation>> active;
    for (const auto& [q, rel] : qs) {
        if (q.degree() <= 0) {
            Rational v = q.is_zero() ? Rational(0) : q.coeff(0);
            bool ok = rel == Relation::Greater ? sgn(v) > 0 : sgn(v) != 0;
            if (!ok) return 0;
            continue;
        }
        active.emplace_back(q, rel);
        p = remove_common_factors(p, q);
    }
    if (p.degree() == 0) return 0;

    // Collect isolating intervals of all constraint roots and shrink them
    // until none contains a root of P and their endpoints avoid P's roots.
    std::vector<RatInterval> breaks;
    for (const auto& [q, rel] : active) {
        RootList roots = isolate_roots(q);
        for (std::size_t i = 0; i < roots.size(); ++i) {
            RatInterval iv = roots.intervals[i];
            while (!iv.is_point() && sturm_count(p, RatInterval(iv.lo, iv.hi)) > 0)
                iv = refine(q, iv, iv.width() / 2);
            breaks.push_back(iv);
        }
    }
    std::sort(breaks.begin(), breaks.end(), [](const RatInterval& a, const RatInterval& b) {
        return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
    });

    // Sample points of the complementary open intervals. Unbounded ends
    // are probed just beyond every root of the system's polynomials.
    Rational bound = cauchy_root_bound(p);
    if (!breaks.empty()) {
        bound = std::max(bound, Rational(abs(breaks.front().lo)));
        bound = std::max(bound, Rational(abs(breaks.back().hi)));
    }
    bound += 1;

    struct Cell {
        Rational lo, hi;     // open interval
        Rational sample;
    };
    std::vector<Cell> cells;
    Rational cursor = -bound;
    for (const auto& b : breaks) {
        if (b.lo > cursor)
            cells.push_back(Cell{cursor, b.lo, (cursor + b.lo) / 2});
        cursor = std::max(cursor, b.hi);
    }
    cells.push_back(Cell{cursor, bound, (cursor + bound) / 2});

    long count = 0;
    for (const auto& cell : cells) {
        bool ok = true;
        for (const auto& [q, rel] : active) {
            int sg = sign_at(q, cell.sample);
            if (rel == Relation::Greater ? sg <= 0 : sg == 0) {
                ok = false;
                break;
            }
        }
        if (ok) count += sturm_count(p, RatInterval(cell.lo, cell.hi, IntervalKind::Open));
    }
    return count;
}

BorderPoly border_polynomial(const ParamSemiSystem& s) {
    if (s.equation.degree() < 1) throw DomainError("border polynomial needs degree >= 1 equation");
    BorderPoly bp;
    bp.factors.emplace_back(s.equation.leading(), BorderSource::LeadingCoeff);
    bp.factors.emplace_back(discriminant(s.equation), BorderSource::Discriminant);
    for (const auto& [q, rel] : s.constraints)
        bp.factors.emplace_back(resultant(s.equation, q), BorderSource::ResultantWithConstraint);
    if (s.positivity)
        bp.factors.emplace_back(resultant(s.equation, ParamUniPoly::identity(s.equation.variable())),
                                BorderSource::ResultantWithConstraint);
    return bp;
}

SignReport sign_conditions_report(const ParamSemiSystem& s,
                                  const std::vector<std::map<char, Rational>>& probes,
                                  const std::vector<std::pair<std::string, ParamPoly>>& tracked) {
    SignReport rep;
    for (const auto& [name, poly] : tracked) rep.tracked_names.push_back(name);

    BorderPoly bp = border_polynomial(s);
    for (const auto& probe : probes) {
        if (bp.vanishes_at(probe))
            throw DegenerateProbeError("probe annihilates the border polynomial");
        SignRow row;
        row.probe = probe;
        row.count = count_solutions(s.at(probe));
        for (const auto& [name, poly] : tracked) row.signs.push_back(sgn(poly.evaluate(probe)));
        if (rep.param_order.empty())
            for (const auto& [k, v] : probe) rep.param_order.push_back(k);
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::string SignReport::to_csv() const {
    std::ostringstream os;
    for (char p : param_order) os << p << ",";
    os << "count";
    for (const auto& n : tracked_names) os << "," << n;
    os << "\n";
    for (const auto& row : rows) {
        for (char p : param_order) os << to_string(row.probe.at(p)) << ",";
        os << row.count;
        for (int sg : row.signs) os << "," << (sg > 0 ? "+" : sg < 0 ? "-" : "0");
        os << "\n";
    }
    return os.str();
}

} // namespace mono

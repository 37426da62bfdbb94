#include "chaos.hpp"

#include <sstream>

#include "semialg.hpp"

namespace mono {

ChaosCertificate certify_period3(const IterMap& map) {
    ChaosCertificate cert;
    cert.method = ChaosMethod::Period3;
    std::vector<Orbit> orbits = enumerate_cycles(map, 3);
    if (orbits.empty()) {
        cert.status = CertStatus::None;
        return cert;
    }
    cert.status = CertStatus::Certified;
    cert.witness_orbits.push_back(orbits.front());
    cert.conditions.push_back(CertifiedInequality{
        "period-3 orbit exists (count " + std::to_string(orbits.size()) + ")",
        orbits.front().points[0]});
    return cert;
}

namespace {

// Refine iv against poly until pred(condition_enclosure) certifies.
template <class Eval, class Pred>
RatInterval certify_on_root(const RatPoly& poly, RatInterval iv, Eval&& value, Pred&& pred) {
    for (unsigned i = 0; i <= 128; ++i) {
        RatInterval enc = value(iv);
        if (pred(enc)) return enc;
        if (iv.is_point()) break;
        iv = refine(poly, iv, iv.width() / 2);
    }
    throw CertificationError("inequality could not be certified strictly");
}

} // namespace

ChaosCertificate certify_snapback(const IterMap& map, unsigned m) {
    if (map.model != Model::Model1)
        throw DomainError("snapback certification implemented for Model 1");
    if (m != 2) throw DomainError("snapback search supports m = 2 only");

    ChaosCertificate cert;
    cert.method = ChaosMethod::Snapback;
    cert.steps = m;

    const Rational &e = map.params.at('e'), &f = map.params.at('f');
    Rational crit = e * e * f * f * f;

    // Exact boundary cases are outside the method's scope.
    if (crit == Rational(8, 27) || crit == Rational(64, 27)) {
        cert.status = CertStatus::Undetermined;
        return cert;
    }
    // Repelling equilibrium: |F'(x*)| > 1 at x* = e^(1/3), equivalent to
    // 27 e^2 f^3 > 8 by cubing 3 f e^(2/3) > 2.
    if (crit < Rational(8, 27)) {
        cert.status = CertStatus::None;
        return cert;
    }

    char x = map.update.variable();
    RatPoly cubic(std::vector<Rational>{-e, 0, 0, 1}, x); // x^3 - e
    RatPoly fprime = map.update.derivative();             // 1 - 3 f x^2
    RatPoly f2 = map.update.compose(map.update);

    // Homoclinic system in y: (F^2(y))^3 = e with y in the repelling
    // region, derivatives nonzero along the orbit, y not the equilibrium.
    SemiSystem sys;
    sys.equation = cubic.compose(f2);
    // 3 f y^2 - 2 > 0: with y > 0 this is |F'(y)| > 1, and the region
    // {x > 0, |F'| > 1} is one interval containing the equilibrium.
    RatPoly repel(std::vector<Rational>{-2, 0, 3 * f}, x);
    sys.constraints.emplace_back(repel, Relation::Greater);
    sys.constraints.emplace_back(fprime.compose(map.update), Relation::NotEqual);
    sys.constraints.emplace_back(cubic, Relation::NotEqual);
    sys.positivity = true;

    if (count_solutions(sys) < 1) {
        cert.status = CertStatus::None;
        return cert;
    }
    cert.status = CertStatus::Certified;

    // Build the witness: the equilibrium interval and a qualifying y.
    RootList eq = isolate_roots(cubic, RootDomain::Positive);
    if (eq.size() != 1) throw InternalError("Model 1 equilibrium is not unique");
    RatInterval xstar = eq.intervals[0];

    cert.conditions.push_back(CertifiedInequality{
        "equilibrium is repelling: F'(x*) < -1",
        certify_on_root(cubic, xstar, [&](const RatInterval& iv) { return interval_eval(fprime, iv); },
                        [](const RatInterval& enc) { return enc.hi < -1; })});

    RatPoly p = primitive_integer_part(sys.equation);
    RootList candidates = isolate_roots(p, RootDomain::Positive);
    bool found = false;
    for (std::size_t i = 0; i < candidates.size() && !found; ++i) {
        RatInterval y = candidates.intervals[i];
        RatInterval xs = xstar;
        try {
            // separate the candidate from the equilibrium interval; the
            // equilibrium itself is a root of p and is skipped here
            for (unsigned round = 0; y.hi >= xs.lo && xs.hi >= y.lo; ++round) {
                if (round > 128 || (y.is_point() && xs.is_point()))
                    throw CertificationError("candidate indistinguishable from the equilibrium");
                if (!y.is_point()) y = refine(p, y, y.width() / 2);
                if (!xs.is_point()) xs = refine(cubic, xs, xs.width() / 2);
            }
            auto repel_enc = certify_on_root(
                p, y, [&](const RatInterval& iv) { return interval_eval(repel, iv); },
                [](const RatInterval& enc) { return enc.lo > 0; });
            auto deriv_enc = certify_on_root(
                p, y,
                [&](const RatInterval& iv) {
                    return interval_eval(fprime.compose(map.update), iv);
                },
                [](const RatInterval& enc) { return !enc.contains(Rational(0)); });
            auto distinct_enc = certify_on_root(
                p, y, [&](const RatInterval& iv) { return interval_eval(cubic, iv); },
                [](const RatInterval& enc) { return !enc.contains(Rational(0)); });
            // Direct re-check that F^m(y) meets the equilibrium interval
            // with a tight enclosure. (F^m(y))^3 = e holds algebraically at
            // every root of p, and x^3 - e has a unique real root, so the
            // overlap pins the landing point to x*.
            RatInterval yref = y;
            Rational land_eps(1, 1 << 20);
            RatInterval land = certify_on_root(
                p, yref, [&](const RatInterval& iv) { return interval_eval(f2, iv); },
                [&](const RatInterval& enc) {
                    return enc.lo <= xs.hi && xs.lo <= enc.hi && enc.width() <= land_eps;
                });

            cert.preimage = yref;
            cert.equilibrium = xs;
            cert.conditions.push_back(
                CertifiedInequality{"y in the repelling region: 3 f y^2 - 2 > 0", repel_enc});
            cert.conditions.push_back(
                CertifiedInequality{"derivative nonzero along the orbit: F'(F(y)) != 0", deriv_enc});
            cert.conditions.push_back(
                CertifiedInequality{"y distinct from the equilibrium: y^3 - e != 0", distinct_enc});
            cert.conditions.push_back(
                CertifiedInequality{"F^2(y) enclosure meets the equilibrium's isolating interval",
                                    land});
            found = true;
        } catch (const CertificationError&) {
            // candidate fails a constraint; try the next root
        }
    }
    if (!found) throw InternalError("count_solutions found a witness but none certified");
    return cert;
}

std::string ChaosCertificate::str(unsigned decimals) const {
    std::ostringstream os;
    os << "method=" << (method == ChaosMethod::Period3 ? "period3" : "snapback") << " status="
       << (status == CertStatus::Certified
               ? "certified"
               : status == CertStatus::None ? "none" : "undetermined")
       << "\n";
    if (method == ChaosMethod::Snapback && status == CertStatus::Certified) {
        os << "equilibrium=[" << to_decimal_string(equilibrium.lo, decimals) << ","
           << to_decimal_string(equilibrium.hi, decimals) << "] preimage=["
           << to_decimal_string(preimage.lo, decimals) << ","
           << to_decimal_string(preimage.hi, decimals) << "] steps=" << steps << "\n";
    }
    for (const auto& o : witness_orbits) os << serialize_orbits({o}, decimals);
    for (const auto& c : conditions)
        os << "condition: " << c.description << " via [" << to_decimal_string(c.enclosure.lo, decimals)
           << "," << to_decimal_string(c.enclosure.hi, decimals) << "]\n";
    return os.str();
}

} // namespace mono

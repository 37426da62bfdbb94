#include "orbits.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mono {

namespace {

constexpr unsigned kGroupingBudget = 64; // max halvings per certification loop

bool closed_overlap(const RatInterval& a, const RatInterval& b) {
    return a.hi >= b.lo && b.hi >= a.lo;
}

// Sign of the root isolated by iv (refining when iv straddles zero).
int root_sign(const RatPoly& c, RatInterval& iv) {
    for (unsigned i = 0; i <= kGroupingBudget; ++i) {
        if (sgn(iv.lo) > 0) return 1;
        if (sgn(iv.hi) < 0) return -1;
        if (iv.is_point()) return sgn(iv.lo);
        iv = refine(c, iv, iv.width() / 2);
    }
    throw CertificationError("could not certify the sign of a cycle point");
}

RatInterval multiplier_enclosure(const RatPoly& fprime, const std::vector<RatInterval>& points) {
    RatInterval acc = RatInterval::point(Rational(1));
    for (const auto& p : points) acc = acc * interval_eval(fprime, p);
    return acc;
}

// Shared by enumerate_cycles and the public classify_stability; refines
// the orbit's points against the cycle polynomial until the multiplier
// enclosure clears (-1, 1) one way or the other.
Stability classify_with_poly(const IterMap& map, const RatPoly& cn, Orbit& orbit) {
    RatPoly fprime = map.update.derivative();
    for (unsigned round = 0; round <= kGroupingBudget; ++round) {
        RatInterval m = multiplier_enclosure(fprime, orbit.points);
        orbit.multiplier = m;
        if (m.lo > -1 && m.hi < 1) {
            orbit.stability = Stability::Stable;
            return orbit.stability;
        }
        if (m.lo > 1 || m.hi < -1) {
            orbit.stability = Stability::Unstable;
            return orbit.stability;
        }
        bool all_points = true;
        for (auto& p : orbit.points) {
            if (!p.is_point()) {
                p = refine(cn, p, p.width() / 2);
                all_points = false;
            }
        }
        if (all_points) break; // exact multiplier sitting on the boundary
    }
    orbit.stability = Stability::Nonhyperbolic;
    return orbit.stability;
}

std::vector<Orbit> enumerate_with_poly(const IterMap& map, unsigned n, const RatPoly& cn) {
    std::vector<Orbit> orbits;
    if (cn.degree() <= 0) return orbits;

    RootList roots;
    try {
        roots = isolate_roots(cn, RootDomain::All);
    } catch (const CertificationError& ex) {
        throw NonHyperbolicError(std::string("cycle polynomial is not squarefree: ") + ex.what());
    }
    for (unsigned m : roots.multiplicities)
        if (m > 1)
            throw NonHyperbolicError("cycle polynomial has a multiple root (order " +
                                     std::to_string(n) + ")");

    std::vector<RatInterval> ivs = roots.intervals;
    const std::size_t cnt = ivs.size();

    // successor under F within the root set
    std::vector<std::size_t> succ(cnt);
    for (std::size_t i = 0; i < cnt; ++i) {
        unsigned budget = kGroupingBudget;
        for (;;) {
            RatInterval image = interval_eval(map.update, ivs[i]);
            std::size_t hit = cnt, hits = 0;
            for (std::size_t j = 0; j < cnt; ++j) {
                if (closed_overlap(image, ivs[j])) {
                    hit = j;
                    ++hits;
                }
            }
            if (hits == 1) {
                succ[i] = hit;
                break;
            }
            if (hits == 0)
                throw NonHyperbolicError("cycle point image escapes the root set");
            if (budget-- == 0)
                throw CertificationError("orbit grouping budget exhausted");
            ivs[i] = refine(cn, ivs[i], ivs[i].width() / 2);
        }
    }

    // decompose the successor permutation into cycles
    std::vector<bool> seen(cnt, false);
    for (std::size_t i = 0; i < cnt; ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> chain;
        std::size_t cur = i;
        while (!seen[cur]) {
            seen[cur] = true;
            chain.push_back(cur);
            cur = succ[cur];
        }
        if (cur != i || chain.size() != n)
            throw NonHyperbolicError("root of the period-" + std::to_string(n) +
                                     " polynomial has a shorter actual period");

        // keep only all-positive orbits
        bool positive = true;
        for (std::size_t idx : chain) {
            if (root_sign(cn, ivs[idx]) <= 0) {
                positive = false;
                break;
            }
        }
        if (!positive) continue;

        // canonical start: smallest point
        std::size_t start = 0;
        for (std::size_t k = 1; k < chain.size(); ++k)
            if (ivs[chain[k]].lo < ivs[chain[start]].lo) start = k;

        Orbit orbit;
        orbit.order = n;
        for (std::size_t k = 0; k < chain.size(); ++k)
            orbit.points.push_back(ivs[chain[(start + k) % chain.size()]]);
        classify_with_poly(map, cn, orbit);
        orbits.push_back(std::move(orbit));
    }

    std::sort(orbits.begin(), orbits.end(),
              [](const Orbit& a, const Orbit& b) { return a.points[0].lo < b.points[0].lo; });
    return orbits;
}

} // namespace

std::vector<Orbit> enumerate_cycles(const IterMap& map, unsigned n) {
    if (n < 1 || n > 6) throw DomainError("enumerate_cycles supports 1 <= n <= 6");
    return enumerate_with_poly(map, n, cycle_poly(map, n));
}

long cycle_solution_count(const IterMap& map, unsigned n) {
    if (n < 1 || n > 6) throw DomainError("cycle_solution_count supports 1 <= n <= 6");
    RatPoly cn = cycle_poly(map, n);
    if (cn.degree() <= 0) return 0;
    try {
        return static_cast<long>(isolate_roots(cn, RootDomain::Positive).size());
    } catch (const CertificationError& ex) {
        throw NonHyperbolicError(std::string("cycle polynomial is not squarefree: ") + ex.what());
    }
}

Stability classify_stability(const IterMap& map, Orbit& orbit) {
    return classify_with_poly(map, cycle_poly(map, orbit.order), orbit);
}

std::map<char, Rational> model2_standard_params(const Rational& K) {
    return {{'a', Rational(18, 5)},
            {'b', Rational(12, 5)},
            {'c', Rational(3, 5)},
            {'d', Rational(1, 20)},
            {'K', K}};
}

namespace {

bool has_standard_m2_params(const IterMap& map) {
    return map.model == Model::Model2 && map.params.at('a') == Rational(18, 5) &&
           map.params.at('b') == Rational(12, 5) && map.params.at('c') == Rational(3, 5) &&
           map.params.at('d') == Rational(1, 20);
}

RatPoly poly_in_d(std::vector<Rational> coeffs) { return RatPoly(std::move(coeffs), 'd'); }

} // namespace

std::vector<RatPoly> magnitude_oracles(const IterMap& map, unsigned n) {
    std::vector<RatPoly> out;
    if (map.model == Model::Model1 && n == 2) {
        const Rational &e = map.params.at('e'), &f = map.params.at('f');
        out.push_back(poly_in_d({216 * e * e * f * f * f - 64, -60 * f, -12 * f * f, f * f * f}));
        return out;
    }
    if (!has_standard_m2_params(map)) return out;
    const Rational& K = map.params.at('K');
    if (n == 2) {
        out.push_back(poly_in_d({-24 * K - 80, K}));
        out.push_back(poly_in_d({-6 * K + 10, K}));
    } else if (n == 3) {
        Rational K2 = K * K, K3 = K2 * K, K4 = K3 * K;
        out.push_back(poly_in_d({15552 * K4 + 38880 * K3 - 32400 * K2 - 162000 * K + 270000,
                                 -6696 * K4 - 19440 * K3 - 5400 * K2 + 27000 * K,
                                 972 * K4 + 2700 * K3 + 1800 * K2, -54 * K4 - 90 * K3, K4}));
    } else if (n == 4) {
        Rational K2 = K * K, K3 = K2 * K, K4 = K3 * K;
        Rational K5 = K4 * K, K6 = K5 * K, K7 = K6 * K, K8 = K7 * K;
        out.push_back(poly_in_d({-12 * K + 20, K}));
        out.push_back(poly_in_d({-48 * K - 160, K}));
        out.push_back(poly_in_d({288 * K2 + 960 * K + 1600, -36 * K2 - 60 * K, K2}));
        out.push_back(poly_in_d(
            {Rational(Int("906992640")) * K8 + Rational(Int("6500113920")) * K7 +
                 Rational(Int("18223833600")) * K6 + Rational(Int("13351392000")) * K5 -
                 Rational(Int("25284960000")) * K4 - Rational(Int("27302400000")) * K3 +
                 Rational(Int("65376000000")) * K2 + Rational(Int("30720000000")) * K -
                 Rational(Int("102400000000")),
             Rational(Int("-672686208")) * K8 - Rational(Int("4870886400")) * K7 -
                 Rational(Int("14246409600")) * K6 - Rational(Int("16185744000")) * K5 +
                 Rational(Int("2054160000")) * K4 + Rational(Int("13262400000")) * K3 -
                 Rational(Int("7632000000")) * K2 - Rational(Int("11520000000")) * K,
             Rational(Int("206172864")) * K8 + Rational(Int("1453101120")) * K7 +
                 Rational(Int("4191652800")) * K6 + Rational(Int("5433912000")) * K5 +
                 Rational(Int("2183760000")) * K4 - Rational(Int("1105200000")) * K3 -
                 Rational(Int("478000000")) * K2,
             Rational(Int("-33957792")) * K8 - Rational(Int("221940000")) * K7 -
                 Rational(Int("588016800")) * K6 - Rational(Int("728172000")) * K5 -
                 Rational(Int("379740000")) * K4 - Rational(Int("45500000")) * K3,
             Rational(3285360) * K8 + Rational(18688320) * K7 + Rational(41115600) * K6 +
                 Rational(39438000) * K5 + Rational(13350000) * K4,
             Rational(-192024) * K8 - Rational(874800) * K7 - Rational(1382400) * K6 -
                 Rational(731000) * K5,
             Rational(6660) * K8 + Rational(21300) * K7 + Rational(17800) * K6,
             Rational(-126) * K8 - Rational(210) * K7, K8}));
    }
    return out;
}

RatInterval magnitude(const IterMap& map, const Orbit& orbit, const Rational& width) {
    if (sgn(width) <= 0) throw DomainError("magnitude width must be positive");
    if (orbit.order == 1) return RatInterval::point(Rational(0));

    RatPoly cn = cycle_poly(map, orbit.order);
    std::vector<RatInterval> pts = orbit.points;
    RatInterval enc(Rational(0), Rational(0));
    for (unsigned round = 0; round <= 4 * kGroupingBudget; ++round) {
        RatInterval acc = RatInterval::point(Rational(0));
        for (std::size_t i = 0; i < pts.size(); ++i) {
            RatInterval diff = pts[(i + 1) % pts.size()] - pts[i];
            acc = acc + diff * diff;
        }
        enc = acc;
        if (enc.width() <= width) break;
        bool all_points = true;
        for (auto& p : pts) {
            if (!p.is_point()) {
                p = refine(cn, p, p.width() / 2);
                all_points = false;
            }
        }
        if (all_points) break;
        if (round == 4 * kGroupingBudget)
            throw CertificationError("magnitude refinement budget exhausted");
    }

    std::vector<RatPoly> oracles = magnitude_oracles(map, orbit.order);
    if (!oracles.empty()) {
        bool bracketed = false;
        for (const auto& p : oracles) {
            if (sturm_count(p, RatInterval(enc.lo, enc.hi)) >= 1) {
                bracketed = true;
                break;
            }
        }
        if (!bracketed)
            throw CertificationError("magnitude enclosure brackets no root of its oracle");
    }
    return enc;
}

namespace {

struct RationalLess {
    bool operator()(const Rational& a, const Rational& b) const { return a < b; }
};

} // namespace

ThresholdReport find_thresholds_family(const std::function<IterMap(const Rational&)>& family,
                                       unsigned n, const RatInterval& search, const Rational& tol,
                                       const Rational& min_split) {
    if (sgn(tol) <= 0) throw DomainError("threshold tolerance must be positive");
    ThresholdReport report;
    report.order = n;

    std::map<Rational, std::pair<long, long>, RationalLess> cache;
    auto probe = [&](const Rational& v) -> std::pair<long, long> {
        auto it = cache.find(v);
        if (it != cache.end()) return it->second;
        Rational at = v;
        std::pair<long, long> result{0, 0};
        for (int attempt = 0;; ++attempt) {
            try {
                std::vector<Orbit> orbits = enumerate_cycles(family(at), n);
                long stable = 0;
                for (const auto& o : orbits)
                    if (o.stability == Stability::Stable) ++stable;
                result = {static_cast<long>(orbits.size()), stable};
                break;
            } catch (const NonHyperbolicError&) {
                if (attempt >= 3)
                    throw CertificationError("probe stayed nonhyperbolic after perturbation");
                at += tol / 10;
                report.notes.push_back("nonhyperbolic probe perturbed by tol/10 near " +
                                       to_decimal_string(v, 12));
            }
        }
        cache.emplace(v, result);
        return result;
    };

    struct Segment {
        Rational lo, hi;
        std::pair<long, long> plo, phi;
    };
    std::vector<Segment> stack{
        Segment{search.lo, search.hi, probe(search.lo), probe(search.hi)}};
    while (!stack.empty()) {
        Segment seg = stack.back();
        stack.pop_back();
        if (seg.plo == seg.phi) {
            if (sgn(min_split) == 0 || seg.hi - seg.lo <= min_split) continue;
        } else if (seg.hi - seg.lo <= tol) {
            report.brackets.push_back(
                ThresholdBracket{RatInterval(seg.lo, seg.hi), seg.plo, seg.phi});
            continue;
        }
        Rational mid = (seg.lo + seg.hi) / 2;
        auto pmid = probe(mid);
        stack.push_back(Segment{seg.lo, mid, seg.plo, pmid});
        stack.push_back(Segment{mid, seg.hi, pmid, seg.phi});
    }
    std::sort(report.brackets.begin(), report.brackets.end(),
              [](const ThresholdBracket& a, const ThresholdBracket& b) {
                  return a.bracket.lo < b.bracket.lo;
              });
    return report;
}

ThresholdReport find_thresholds(unsigned n, const RatInterval& search, const Rational& tol,
                                const Rational& min_split) {
    return find_thresholds_family(
        [](const Rational& K) { return build_map(Model::Model2, model2_standard_params(K)); }, n,
        search, tol, min_split);
}

namespace {

const char* stability_name(Stability s) {
    switch (s) {
        case Stability::Stable: return "stable";
        case Stability::Unstable: return "unstable";
        default: return "nonhyperbolic";
    }
}

} // namespace

std::string serialize_orbits(const std::vector<Orbit>& orbits, unsigned decimals) {
    std::ostringstream os;
    for (const auto& o : orbits) {
        os << "order=" << o.order << " points=";
        for (std::size_t i = 0; i < o.points.size(); ++i) {
            if (i) os << ",";
            os << to_decimal_string(o.points[i].midpoint(), decimals);
        }
        os << " multiplier=[" << to_decimal_string(o.multiplier.lo, decimals) << ","
           << to_decimal_string(o.multiplier.hi, decimals) << "]"
           << " stability=" << stability_name(o.stability) << "\n";
    }
    return os.str();
}

std::string serialize_thresholds(const ThresholdReport& report, unsigned decimals) {
    std::ostringstream os;
    os << "order=" << report.order << "\n";
    for (const auto& b : report.brackets) {
        os << "bracket=[" << to_decimal_string(b.bracket.lo, decimals) << ","
           << to_decimal_string(b.bracket.hi, decimals) << "]"
           << " before=(" << b.before.first << "," << b.before.second << ")"
           << " after=(" << b.after.first << "," << b.after.second << ")\n";
    }
    for (const auto& note : report.notes) os << "note: " << note << "\n";
    return os.str();
}

} // namespace mono

#include "monopoly.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "core/chaos.hpp"
#include "core/models.hpp"
#include "core/orbits.hpp"
#include "core/semialg.hpp"
#include "core/sim.hpp"

using namespace mono;

struct mono_map {
    IterMap map;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mono_status fail(mono_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

// Runs the body and maps library exceptions onto status codes.
template <class Fn>
mono_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const DomainError& e) {
        return fail(MONO_ERR_DOMAIN, e.what());
    } catch (const NonHyperbolicError& e) {
        return fail(MONO_ERR_NONHYPERBOLIC, e.what());
    } catch (const CertificationError& e) {
        return fail(MONO_ERR_CERTIFICATION, e.what());
    } catch (const DegenerateProbeError& e) {
        return fail(MONO_ERR_DEGENERATE_PROBE, e.what());
    } catch (const InsufficientDataError& e) {
        return fail(MONO_ERR_INSUFFICIENT_DATA, e.what());
    } catch (const Error& e) {
        return fail(MONO_ERR_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return fail(MONO_ERR_INTERNAL, e.what());
    }
}

mono_status parse_arg(const char* text, const char* name, Rational& out) {
    if (!text) return fail(MONO_ERR_BADARG, std::string("missing argument: ") + name);
    try {
        out = parse_rational(text);
    } catch (const Error& e) {
        return fail(MONO_ERR_BADARG, std::string(name) + ": " + e.what());
    }
    return MONO_OK;
}

char sign_char(int s) { return s > 0 ? '+' : s < 0 ? '-' : '0'; }

// Assembles a FloatMap from the packed parameter array, applying the
// scanned overrides. Model 1 order: {e, f}; model 2: {a, b, c, d, K}.
FloatMap float_map_from(int model, const double* params,
                        const std::pair<char, double>* ov1 = nullptr,
                        const std::pair<char, double>* ov2 = nullptr) {
    auto slot = [&](char name, int index) {
        double v = params[index];
        if (ov1 && ov1->first == name) v = ov1->second;
        if (ov2 && ov2->first == name) v = ov2->second;
        return v;
    };
    if (model == 1) return FloatMap::model1(slot('e', 0), slot('f', 1));
    return FloatMap::model2(slot('a', 0), slot('b', 1), slot('c', 2), slot('d', 3),
                            slot('K', 4));
}

bool valid_scan_name(int model, char scan) {
    if (model == 1) return scan == 'e' || scan == 'f';
    return scan == 'a' || scan == 'b' || scan == 'c' || scan == 'd' || scan == 'K';
}

} // namespace

extern "C" {

const char* mono_last_error(void) { return g_last_error.c_str(); }

void mono_string_free(char* s) { std::free(s); }

mono_status mono_map_model1(const char* e, const char* f, mono_map** out) {
    if (!out) return fail(MONO_ERR_BADARG, "output handle is NULL");
    Rational re, rf;
    mono_status st;
    if ((st = parse_arg(e, "e", re)) != MONO_OK) return st;
    if ((st = parse_arg(f, "f", rf)) != MONO_OK) return st;
    return guarded([&] {
        *out = new mono_map{build_map(Model::Model1, {{'e', re}, {'f', rf}})};
        return MONO_OK;
    });
}

mono_status mono_map_model2(const char* a, const char* b, const char* c, const char* d,
                            const char* k, mono_map** out) {
    if (!out) return fail(MONO_ERR_BADARG, "output handle is NULL");
    Rational ra, rb, rc, rd, rk;
    mono_status st;
    if ((st = parse_arg(a, "a", ra)) != MONO_OK) return st;
    if ((st = parse_arg(b, "b", rb)) != MONO_OK) return st;
    if ((st = parse_arg(c, "c", rc)) != MONO_OK) return st;
    if ((st = parse_arg(d, "d", rd)) != MONO_OK) return st;
    if ((st = parse_arg(k, "K", rk)) != MONO_OK) return st;
    return guarded([&] {
        *out = new mono_map{build_map(
            Model::Model2, {{'a', ra}, {'b', rb}, {'c', rc}, {'d', rd}, {'K', rk}})};
        return MONO_OK;
    });
}

void mono_map_free(mono_map* map) { delete map; }

mono_status mono_stability_report(const mono_map* map, unsigned decimals, char** out) {
    if (!map || !out) return fail(MONO_ERR_BADARG, "NULL argument");
    return guarded([&] {
        std::ostringstream os;
        if (map->map.model == Model::Model1) {
            os << "model=1\n";
            long n = count_solutions(model1_equilibrium_system().at(map->map.params));
            os << "stable_equilibrium_solutions=" << n << "\n";
            const Rational &e = map->map.params.at('e'), &f = map->map.params.at('f');
            Rational g = 27 * e * e * f * f * f - 8;
            os << "sign 27e^2f^3-8=" << sign_char(sgn(g)) << "\n";
        } else {
            os << "model=2\n";
            long n = count_solutions(model2_equilibrium_system().at(map->map.params));
            os << "stable_equilibrium_solutions=" << n << "\n";
            const StabilityConditionSet& r = model2_condition_polys();
            os << "sign R1=" << sign_char(sgn(r.R1.evaluate(map->map.params)))
               << " R2=" << sign_char(sgn(r.R2.evaluate(map->map.params)))
               << " R3=" << sign_char(sgn(r.R3.evaluate(map->map.params)))
               << " R4=" << sign_char(sgn(r.R4.evaluate(map->map.params))) << "\n";
        }
        os << serialize_orbits(enumerate_cycles(map->map, 1), decimals);
        *out = dup_string(os.str());
        return *out ? MONO_OK : fail(MONO_ERR_INTERNAL, "allocation failed");
    });
}

mono_status mono_cycles_report(const mono_map* map, unsigned n, unsigned decimals,
                               long* orbit_count, long* stable_count, char** out) {
    if (!map || !out) return fail(MONO_ERR_BADARG, "NULL argument");
    return guarded([&] {
        std::vector<Orbit> orbits = enumerate_cycles(map->map, n);
        long stable = 0;
        for (const auto& o : orbits)
            if (o.stability == Stability::Stable) ++stable;
        if (orbit_count) *orbit_count = static_cast<long>(orbits.size());
        if (stable_count) *stable_count = stable;
        *out = dup_string(serialize_orbits(orbits, decimals));
        return *out ? MONO_OK : fail(MONO_ERR_INTERNAL, "allocation failed");
    });
}

mono_status mono_magnitudes_report(const mono_map* map, unsigned n, const char* width,
                                   unsigned decimals, char** out) {
    if (!map || !out) return fail(MONO_ERR_BADARG, "NULL argument");
    Rational w;
    mono_status st;
    if ((st = parse_arg(width, "width", w)) != MONO_OK) return st;
    return guarded([&] {
        std::ostringstream os;
        for (const Orbit& o : enumerate_cycles(map->map, n)) {
            RatInterval m = magnitude(map->map, o, w);
            os << "order=" << n << " magnitude=[" << to_decimal_string(m.lo, decimals) << ","
               << to_decimal_string(m.hi, decimals) << "] stability="
               << (o.stability == Stability::Stable ? "stable" : "unstable") << "\n";
        }
        *out = dup_string(os.str());
        return *out ? MONO_OK : fail(MONO_ERR_INTERNAL, "allocation failed");
    });
}

mono_status mono_thresholds_report(unsigned n, const char* k_lo, const char* k_hi,
                                   const char* tol, const char* min_split, unsigned decimals,
                                   char** out) {
    if (!out) return fail(MONO_ERR_BADARG, "NULL argument");
    Rational lo, hi, t, ms(0);
    mono_status st;
    if ((st = parse_arg(k_lo, "k_lo", lo)) != MONO_OK) return st;
    if ((st = parse_arg(k_hi, "k_hi", hi)) != MONO_OK) return st;
    if ((st = parse_arg(tol, "tol", t)) != MONO_OK) return st;
    if (min_split && (st = parse_arg(min_split, "min_split", ms)) != MONO_OK) return st;
    return guarded([&] {
        ThresholdReport rep = find_thresholds(n, RatInterval(lo, hi), t, ms);
        *out = dup_string(serialize_thresholds(rep, decimals));
        return *out ? MONO_OK : fail(MONO_ERR_INTERNAL, "allocation failed");
    });
}

mono_status mono_chaos_report(const mono_map* map, const char* method, unsigned decimals,
                              char** out) {
    if (!map || !method || !out) return fail(MONO_ERR_BADARG, "NULL argument");
    std::string m = method;
    if (m != "period3" && m != "snapback")
        return fail(MONO_ERR_BADARG, "method must be \"period3\" or \"snapback\"");
    return guarded([&] {
        ChaosCertificate cert =
            m == "period3" ? certify_period3(map->map) : certify_snapback(map->map);
        *out = dup_string(cert.str(decimals));
        return *out ? MONO_OK : fail(MONO_ERR_INTERNAL, "allocation failed");
    });
}

mono_status mono_bif1d_csv(int model, const double* params, char scan, double lo, double hi,
                           unsigned resolution, double x0, char** out_csv) {
    if (!params || !out_csv) return fail(MONO_ERR_BADARG, "NULL argument");
    if (model != 1 && model != 2) return fail(MONO_ERR_BADARG, "model must be 1 or 2");
    if (!valid_scan_name(model, scan))
        return fail(MONO_ERR_BADARG, std::string("invalid scan parameter: ") + scan);
    return guarded([&] {
        auto family = [&](double v) {
            std::pair<char, double> ov{scan, v};
            return float_map_from(model, params, &ov);
        };
        *out_csv = dup_string(bif1d_to_csv(bifurcation_1d(family, lo, hi, resolution, x0)));
        return *out_csv ? MONO_OK : fail(MONO_ERR_INTERNAL, "allocation failed");
    });
}

mono_status mono_bif2d_ppm(int model, const double* params, char scan_x, double x_lo,
                           double x_hi, char scan_y, double y_lo, double y_hi, unsigned nx,
                           unsigned ny, double x0, const char* path) {
    if (!params || !path) return fail(MONO_ERR_BADARG, "NULL argument");
    if (model != 1 && model != 2) return fail(MONO_ERR_BADARG, "model must be 1 or 2");
    if (!valid_scan_name(model, scan_x) || !valid_scan_name(model, scan_y) || scan_x == scan_y)
        return fail(MONO_ERR_BADARG, "invalid scan parameter pair");
    return guarded([&] {
        auto family = [&](double vx, double vy) {
            std::pair<char, double> ox{scan_x, vx}, oy{scan_y, vy};
            return float_map_from(model, params, &ox, &oy);
        };
        write_ppm(bifurcation_2d(family, x_lo, x_hi, y_lo, y_hi, nx, ny, x0), path);
        return MONO_OK;
    });
}

mono_status mono_basins_json(const mono_map* map, double x0_lo, double x0_hi,
                             unsigned resolution, char** out_json) {
    if (!map || !out_json) return fail(MONO_ERR_BADARG, "NULL argument");
    return guarded([&] {
        *out_json = dup_string(basins(map->map, x0_lo, x0_hi, resolution).to_json());
        return *out_json ? MONO_OK : fail(MONO_ERR_INTERNAL, "allocation failed");
    });
}

mono_status mono_trajectory_period(int model, const double* params, double x0,
                                   unsigned* period_out) {
    if (!params || !period_out) return fail(MONO_ERR_BADARG, "NULL argument");
    if (model != 1 && model != 2) return fail(MONO_ERR_BADARG, "model must be 1 or 2");
    return guarded([&] {
        Trajectory t = simulate(float_map_from(model, params), x0);
        *period_out = t.outcome == Outcome::Divergent ? 0 : t.period;
        return MONO_OK;
    });
}

} // extern "C"

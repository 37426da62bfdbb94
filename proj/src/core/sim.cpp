#include "sim.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mono {

FloatMap FloatMap::from(const IterMap& map) {
    FloatMap fm;
    for (std::size_t i = 0; i < 4; ++i) fm.c[i] = to_double(map.update.coeff(i));
    return fm;
}

FloatMap FloatMap::model1(double e, double f) {
    if (!std::isfinite(e) || !std::isfinite(f)) throw DomainError("non-finite parameter");
    return FloatMap{{f * e, 1.0, 0.0, -f}};
}

FloatMap FloatMap::model2(double a, double b, double c, double d, double K) {
    for (double v : {a, b, c, d, K})
        if (!std::isfinite(v)) throw DomainError("non-finite parameter");
    return FloatMap{{K * a, 1.0 - 2.0 * K * b, 3.0 * K * c, -4.0 * K * d}};
}

Trajectory simulate(const FloatMap& map, double x0, const SimConfig& cfg) {
    for (double v : map.c)
        if (!std::isfinite(v)) throw DomainError("non-finite parameter");
    if (!std::isfinite(x0)) throw DomainError("non-finite initial state");

    Trajectory t;
    t.x0 = x0;
    t.burn_in = cfg.burn_in;
    double x = x0;
    for (unsigned i = 0; i < cfg.burn_in; ++i) {
        x = map(x);
        if (!std::isfinite(x) || std::fabs(x) > cfg.divergence_bound) {
            t.outcome = Outcome::Divergent;
            return t;
        }
    }
    t.samples.reserve(cfg.window);
    for (unsigned i = 0; i < cfg.window; ++i) {
        x = map(x);
        if (!std::isfinite(x) || std::fabs(x) > cfg.divergence_bound) {
            t.outcome = Outcome::Divergent;
            t.samples.clear();
            return t;
        }
        t.samples.push_back(x);
    }
    unsigned p = detect_period(t, cfg.max_period, cfg.tol);
    if (p < cfg.max_period) {
        t.outcome = Outcome::ConvergedPeriodic;
        t.period = p;
        t.orbit_points.assign(t.samples.end() - p, t.samples.end());
    } else {
        t.outcome = Outcome::Aperiodic;
        t.period = cfg.max_period;
    }
    return t;
}

unsigned detect_period(const Trajectory& t, unsigned max_period, double tol) {
    if (t.outcome == Outcome::Divergent) throw DomainError("detect_period on divergent trajectory");
    if (t.samples.size() < 2 * max_period)
        throw InsufficientDataError("window shorter than twice the maximum period");
    const std::vector<double>& w = t.samples;
    for (unsigned p = 1; p < max_period; ++p) {
        bool ok = true;
        for (std::size_t k = 0; k + p < w.size(); ++k) {
            double scale = std::max(1.0, std::fabs(w[k]));
            if (std::fabs(w[k + p] - w[k]) >= tol * scale) {
                ok = false;
                break;
            }
        }
        if (ok) return p;
    }
    return max_period;
}

std::vector<Bif1DRow> bifurcation_1d(const std::function<FloatMap(double)>& family, double lo,
                                     double hi, unsigned resolution, double x0,
                                     const SimConfig& cfg) {
    if (resolution < 2) throw DomainError("bifurcation_1d needs resolution >= 2");
    std::vector<Bif1DRow> rows;
    rows.reserve(resolution);
    for (unsigned i = 0; i < resolution; ++i) {
        double param = lo + (hi - lo) * i / (resolution - 1);
        Trajectory t = simulate(family(param), x0, cfg);
        Bif1DRow row;
        row.param = param;
        if (t.outcome == Outcome::Divergent) {
            row.divergent = true;
        } else {
            row.period = t.period;
            // keep one period when periodic, else the tail for plotting
            if (t.outcome == Outcome::ConvergedPeriodic)
                row.samples = t.orbit_points;
            else
                row.samples.assign(t.samples.end() - std::min<std::size_t>(64, t.samples.size()),
                                   t.samples.end());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string bif1d_to_csv(const std::vector<Bif1DRow>& rows) {
    std::ostringstream os;
    os << "param,sample_index,x,period\n";
    for (const auto& row : rows) {
        if (row.divergent) {
            os << fmt_double(row.param) << ",0,divergent,0\n";
            continue;
        }
        for (std::size_t i = 0; i < row.samples.size(); ++i)
            os << fmt_double(row.param) << "," << i << "," << fmt_double(row.samples[i]) << ","
               << row.period << "\n";
    }
    return os.str();
}

BifGrid bifurcation_2d(const std::function<FloatMap(double, double)>& family, double x_lo,
                       double x_hi, double y_lo, double y_hi, unsigned nx, unsigned ny, double x0,
                       const SimConfig& cfg) {
    if (nx < 2 || ny < 2) throw DomainError("bifurcation_2d needs resolutions >= 2");
    BifGrid g;
    g.nx = nx;
    g.ny = ny;
    g.x_lo = x_lo;
    g.x_hi = x_hi;
    g.y_lo = y_lo;
    g.y_hi = y_hi;
    g.cells.resize(static_cast<std::size_t>(nx) * ny);
    for (unsigned j = 0; j < ny; ++j) {
        double py = y_lo + (y_hi - y_lo) * j / (ny - 1);
        for (unsigned i = 0; i < nx; ++i) {
            double px = x_lo + (x_hi - x_lo) * i / (nx - 1);
            Trajectory t = simulate(family(px, py), x0, cfg);
            std::uint8_t mark;
            if (t.outcome == Outcome::Divergent || t.period >= cfg.max_period)
                mark = static_cast<std::uint8_t>(cfg.max_period);
            else
                mark = static_cast<std::uint8_t>(t.period);
            g.cells[static_cast<std::size_t>(j) * nx + i] = mark;
        }
    }
    return g;
}

// Distinct hues for periods 1..23; 24 is black, 0 is the white background.
const std::array<std::array<std::uint8_t, 3>, 25> kBifPalette = {{
    {255, 255, 255}, // 0: background (unused in grids)
    {230, 25, 75},   // 1
    {60, 180, 75},   // 2
    {255, 225, 25},  // 3
    {0, 130, 200},   // 4
    {245, 130, 48},  // 5
    {145, 30, 180},  // 6
    {70, 240, 240},  // 7
    {240, 50, 230},  // 8
    {210, 245, 60},  // 9
    {250, 190, 212}, // 10
    {0, 128, 128},   // 11
    {220, 190, 255}, // 12
    {170, 110, 40},  // 13
    {255, 250, 200}, // 14
    {128, 0, 0},     // 15
    {170, 255, 195}, // 16
    {128, 128, 0},   // 17
    {255, 215, 180}, // 18
    {0, 0, 128},     // 19
    {128, 128, 128}, // 20
    {255, 140, 0},   // 21
    {64, 130, 109},  // 22
    {148, 0, 211},   // 23
    {0, 0, 0},       // 24: >= max period or divergent
}};

void write_ppm(const BifGrid& grid, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot open output file: " + path);
    out << "P6\n" << grid.nx << " " << grid.ny << "\n255\n";
    // top row = largest y, the usual plot orientation
    for (unsigned j = grid.ny; j-- > 0;) {
        for (unsigned i = 0; i < grid.nx; ++i) {
            std::uint8_t m = grid.cells[static_cast<std::size_t>(j) * grid.nx + i];
            const auto& rgb = kBifPalette[std::min<std::size_t>(m, 24)];
            out.write(reinterpret_cast<const char*>(rgb.data()), 3);
        }
    }
    if (!out) throw DomainError("failed writing " + path);
}

namespace {

struct PointClass {
    int kind;      // 0..: attractor index; -1: escape; -2: other attractor
    unsigned period = 0;

    bool operator==(const PointClass& o) const { return kind == o.kind && period == o.period; }
};

std::string class_label(const PointClass& c) {
    if (c.kind >= 0) return "E" + std::to_string(c.kind + 1);
    if (c.kind == -1) return "escape";
    return "period-" + std::to_string(c.period);
}

} // namespace

BasinReport basins(const IterMap& map, double x0_lo, double x0_hi, unsigned resolution,
                   const SimConfig& cfg) {
    if (resolution < 2) throw DomainError("basins needs resolution >= 2");

    BasinReport rep;
    std::vector<Orbit> eq = enumerate_cycles(map, 1);
    RatPoly c1 = cycle_poly(map, 1);
    for (const auto& o : eq) {
        if (o.stability != Stability::Stable) continue;
        RatInterval iv = refine(c1, o.points[0], Rational(1, 1000000000));
        rep.attractors.push_back(to_double(iv.midpoint()));
    }
    if (rep.attractors.empty()) throw DomainError("map has no stable equilibrium to build basins");

    FloatMap fm = FloatMap::from(map);
    auto classify = [&](double x0) -> PointClass {
        Trajectory t = simulate(fm, x0, cfg);
        if (t.outcome == Outcome::Divergent) return PointClass{-1, 0};
        if (t.outcome == Outcome::ConvergedPeriodic && t.period == 1) {
            double limit = t.orbit_points.back();
            for (std::size_t i = 0; i < rep.attractors.size(); ++i)
                if (std::fabs(limit - rep.attractors[i]) < 1e-3)
                    return PointClass{static_cast<int>(i), 1};
            return PointClass{-2, 1};
        }
        return PointClass{-2, t.period};
    };

    std::vector<double> xs(resolution);
    std::vector<PointClass> cls(resolution, PointClass{-1, 0});
    for (unsigned i = 0; i < resolution; ++i) {
        xs[i] = x0_lo + (x0_hi - x0_lo) * i / (resolution - 1);
        cls[i] = classify(xs[i]);
    }

    // merge runs, bisecting 20 steps at each class change
    std::vector<BasinInterval> intervals;
    double seg_lo = xs[0];
    for (unsigned i = 0; i + 1 < resolution; ++i) {
        if (cls[i] == cls[i + 1]) continue;
        double lo = xs[i], hi = xs[i + 1];
        for (int step = 0; step < 20; ++step) {
            double mid = (lo + hi) / 2;
            if (classify(mid) == cls[i])
                lo = mid;
            else
                hi = mid;
        }
        double boundary = (lo + hi) / 2;
        intervals.push_back(BasinInterval{seg_lo, boundary, class_label(cls[i])});
        seg_lo = boundary;
    }
    intervals.push_back(BasinInterval{seg_lo, xs.back(), class_label(cls.back())});
    rep.intervals = std::move(intervals);
    return rep;
}

std::string BasinReport::to_json() const {
    nlohmann::json j;
    j["attractors"] = attractors;
    j["intervals"] = nlohmann::json::array();
    for (const auto& iv : intervals)
        j["intervals"].push_back({{"lo", iv.lo}, {"hi", iv.hi}, {"class", iv.label}});
    return j.dump(2);
}

} // namespace mono

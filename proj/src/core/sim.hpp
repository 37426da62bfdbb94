#ifndef MONO_SIM_HPP
#define MONO_SIM_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "orbits.hpp"

namespace mono {

// Double-precision view of a cubic update map.
struct FloatMap {
    std::array<double, 4> c{}; // F(x) = c0 + c1 x + c2 x^2 + c3 x^3

    double operator()(double x) const { return ((c[3] * x + c[2]) * x + c[1]) * x + c[0]; }

    static FloatMap from(const IterMap& map);
    static FloatMap model1(double e, double f);
    static FloatMap model2(double a, double b, double c, double d, double K);
};

struct SimConfig {
    unsigned burn_in = 10000;
    unsigned window = 256;       // samples kept after burn-in
    double tol = 1e-6;           // relative tolerance of period detection
    double divergence_bound = 1e6;
    unsigned max_period = 24;    // >= this (or divergence) is the black marker
};

enum class Outcome { ConvergedPeriodic, Aperiodic, Divergent };

struct Trajectory {
    double x0 = 0;
    unsigned burn_in = 0;
    std::vector<double> samples;  // post burn-in window
    Outcome outcome = Outcome::Aperiodic;
    unsigned period = 0;               // valid when ConvergedPeriodic
    std::vector<double> orbit_points;  // one period of samples when periodic
};

Trajectory simulate(const FloatMap& map, double x0, const SimConfig& cfg = {});

// Smallest period p <= max_period passing the tolerance at every offset
// of the final window; returns max_period as the aperiodic/complex
// marker. Throws InsufficientDataError when the window is too short and
// DomainError for divergent input.
unsigned detect_period(const Trajectory& t, unsigned max_period = 24, double tol = 1e-6);

struct Bif1DRow {
    double param = 0;
    std::vector<double> samples;
    unsigned period = 0; // max_period marker for aperiodic, 0 for divergent
    bool divergent = false;
};

std::vector<Bif1DRow> bifurcation_1d(const std::function<FloatMap(double)>& family, double lo,
                                     double hi, unsigned resolution, double x0,
                                     const SimConfig& cfg = {});

std::string bif1d_to_csv(const std::vector<Bif1DRow>& rows);

struct BifGrid {
    unsigned nx = 0, ny = 0;
    double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
    std::vector<std::uint8_t> cells; // row-major, value = period or max_period marker
};

BifGrid bifurcation_2d(const std::function<FloatMap(double, double)>& family, double x_lo,
                       double x_hi, double y_lo, double y_hi, unsigned nx, unsigned ny, double x0,
                       const SimConfig& cfg = {});

// Fixed 25-entry palette: index p = detected period 1..23, index 24 =
// black for the >= 24 / divergent marker (index 0 is the background).
extern const std::array<std::array<std::uint8_t, 3>, 25> kBifPalette;

// Binary P6 pixmap of the grid through kBifPalette.
void write_ppm(const BifGrid& grid, const std::string& path);

struct BasinInterval {
    double lo = 0, hi = 0;
    std::string label; // "E1", "E2", ..., "escape", or "period-p"
};

struct BasinReport {
    std::vector<double> attractors;        // stable equilibria (ascending)
    std::vector<BasinInterval> intervals;  // disjoint cover of the scan range
    std::string to_json() const;
};

// Scan of initial states classified by limit behavior. Stable equilibria
// are certified exactly (n = 1 enumeration); scanned limits are matched
// to them within 1e-3; boundaries refined by 20 bisection steps.
BasinReport basins(const IterMap& map, double x0_lo, double x0_hi, unsigned resolution,
                   const SimConfig& cfg = {});

} // namespace mono

#endif

#ifndef MONO_MODELS_HPP
#define MONO_MODELS_HPP

#include <map>

#include "semialg.hpp"
#include "unipoly.hpp"

namespace mono {

enum class Model { Model1, Model2 };

// One instance of a monopoly adjustment map.
//   Model 1: F(x) = x + f(e - x^3)
//   Model 2: F(x) = x + K(a - 2bx + 3cx^2 - 4dx^3)
struct IterMap {
    Model model;
    std::map<char, Rational> params;
    RatPoly update; // F expanded in standard form

    RatPoly derivative() const { return update.derivative(); }
};

// Throws DomainError unless every required parameter is present and
// strictly positive. Model 1 needs e, f; Model 2 needs a, b, c, d, K.
IterMap build_map(Model model, const std::map<char, Rational>& params);

// F^n by repeated composition; n = 0 gives the identity.
RatPoly power(const IterMap& map, unsigned n);

// Exact period-n factor: C_n = (F^n - x) / prod_{d | n, d < n} C_d,
// normalized to coprime integer coefficients. Simple roots of C_n whose
// forward orbit avoids shorter returns are precisely the period-n points.
RatPoly cycle_poly(const IterMap& map, unsigned n);

// Derivative of F^n; equals the orbit multiplier at any period-n point.
RatPoly multiplier_poly(const IterMap& map, unsigned n);

// Symbolic update polynomials (coefficients in the parameter ring).
ParamUniPoly param_update(Model model);

// Model 2 stability/bifurcation condition polynomials in (a,b,c,d,K).
struct StabilityConditionSet {
    ParamPoly R1, R2, R3, R4, R5, R6;
};

// R1, R2 are regenerated from discriminant/resultant computations on the
// equilibrium system and self-tested against the transcribed forms;
// R3..R6 are transcribed. Throws InternalError if the self-test fails.
const StabilityConditionSet& model2_condition_polys();

// The symbolic stable-equilibrium systems behind the border-polynomial
// and Table-1 computations.
ParamSemiSystem model1_equilibrium_system();
ParamSemiSystem model2_equilibrium_system();

} // namespace mono

#endif

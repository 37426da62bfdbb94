#include "models.hpp"

namespace mono {

namespace {

void require_positive(const std::map<char, Rational>& params, const char* names) {
    for (const char* p = names; *p; ++p) {
        auto it = params.find(*p);
        if (it == params.end())
            throw DomainError(std::string("missing parameter '") + *p + "'");
        if (sgn(it->second) <= 0)
            throw DomainError(std::string("parameter '") + *p + "' must be positive");
    }
}

} // namespace

IterMap build_map(Model model, const std::map<char, Rational>& params) {
    IterMap m;
    m.model = model;
    if (model == Model::Model1) {
        require_positive(params, "ef");
        m.params = {{'e', params.at('e')}, {'f', params.at('f')}};
        const Rational& e = m.params.at('e');
        const Rational& f = m.params.at('f');
        m.update = RatPoly(std::vector<Rational>{f * e, 1, 0, -f});
    } else {
        require_positive(params, "abcdK");
        for (char p : {'a', 'b', 'c', 'd', 'K'}) m.params.emplace(p, params.at(p));
        const Rational &a = m.params.at('a'), &b = m.params.at('b'), &c = m.params.at('c'),
                       &d = m.params.at('d'), &K = m.params.at('K');
        m.update = RatPoly(std::vector<Rational>{K * a, 1 - 2 * K * b, 3 * K * c, -4 * K * d});
    }
    return m;
}

RatPoly power(const IterMap& map, unsigned n) {
    RatPoly acc = RatPoly::identity(map.update.variable());
    for (unsigned i = 0; i < n; ++i) acc = map.update.compose(acc);
    return acc;
}

RatPoly cycle_poly(const IterMap& map, unsigned n) {
    if (n == 0) throw DomainError("cycle_poly requires n >= 1");
    RatPoly fn_minus_x = power(map, n) - RatPoly::identity(map.update.variable());
    RatPoly divisor = RatPoly::constant(Rational(1), map.update.variable());
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        RatPoly cd = cycle_poly(map, d);
        if (cd.degree() <= 0)
            throw NonHyperbolicError("degenerate cycle factor at divisor " + std::to_string(d));
        divisor = divisor * cd;
    }
    RatPoly cn;
    try {
        cn = RatPoly::exact_div(fn_minus_x, divisor);
    } catch (const DivisibilityError& ex) {
        throw InternalError(std::string("cycle factor division failed: ") + ex.what());
    }
    return primitive_integer_part(cn);
}

RatPoly multiplier_poly(const IterMap& map, unsigned n) {
    if (n == 0) throw DomainError("multiplier_poly requires n >= 1");
    return power(map, n).derivative();
}

ParamUniPoly param_update(Model model) {
    ParamPoly one(Rational(1));
    if (model == Model::Model1) {
        ParamPoly e = ParamPoly::var('e'), f = ParamPoly::var('f');
        return ParamUniPoly(std::vector<ParamPoly>{f * e, one, ParamPoly(0), -f}, 'x');
    }
    ParamPoly a = ParamPoly::var('a'), b = ParamPoly::var('b'), c = ParamPoly::var('c'),
              d = ParamPoly::var('d'), K = ParamPoly::var('K');
    return ParamUniPoly(
        std::vector<ParamPoly>{K * a, one - 2 * K * b, 3 * (K * c), Rational(-4) * K * d}, 'x');
}

ParamSemiSystem model1_equilibrium_system() {
    ParamSemiSystem s;
    ParamPoly e = ParamPoly::var('e'), f = ParamPoly::var('f');
    // x^3 - e = 0
    s.equation = ParamUniPoly(std::vector<ParamPoly>{-e, ParamPoly(0), ParamPoly(0), ParamPoly(1)},
                              'x');
    // 2 - 3 f x^2 > 0  (equivalent form of |1 - 3 f x^2| < 1 given x != 0)
    s.constraints.emplace_back(
        ParamUniPoly(std::vector<ParamPoly>{ParamPoly(2), ParamPoly(0), Rational(-3) * f}, 'x'),
        Relation::Greater);
    s.positivity = true;
    return s;
}

ParamSemiSystem model2_equilibrium_system() {
    ParamSemiSystem s;
    ParamPoly a = ParamPoly::var('a'), b = ParamPoly::var('b'), c = ParamPoly::var('c'),
              d = ParamPoly::var('d'), K = ParamPoly::var('K');
    // K(a - 2bx + 3cx^2 - 4dx^3) = 0
    s.equation = ParamUniPoly(
        std::vector<ParamPoly>{K * a, Rational(-2) * K * b, 3 * (K * c), Rational(-4) * K * d},
        'x');
    // K(2b - 6cx + 12dx^2) > 0      [negation of K(-2b + 6cx - 12dx^2) < 0]
    s.constraints.emplace_back(
        ParamUniPoly(std::vector<ParamPoly>{2 * (K * b), Rational(-6) * K * c, 12 * (K * d)}, 'x'),
        Relation::Greater);
    // 2 + K(-2b + 6cx - 12dx^2) > 0
    s.constraints.emplace_back(
        ParamUniPoly(std::vector<ParamPoly>{ParamPoly(2) - 2 * (K * b), 6 * (K * c),
                                            Rational(-12) * K * d},
                     'x'),
        Relation::Greater);
    s.positivity = true;
    return s;
}

namespace {

StabilityConditionSet build_conditions() {
    ParamPoly a = ParamPoly::var('a'), b = ParamPoly::var('b'), c = ParamPoly::var('c'),
              d = ParamPoly::var('d'), K = ParamPoly::var('K');
    StabilityConditionSet r;
    r.R1 = 108 * a.pow(2) * d.pow(2) - 108 * (a * b * c * d) + 27 * (a * c.pow(3)) +
           32 * (b.pow(3) * d) - 9 * (b.pow(2) * c.pow(2));
    r.R2 = K.pow(3) * r.R1 - 24 * (K * b * d) + 9 * (K * c.pow(2)) - 8 * d;
    r.R3 = 8 * (K * b * d) - 3 * (K * c.pow(2)) + 8 * d;
    r.R4 = 432 * (K.pow(2) * a.pow(2) * d.pow(3)) - 432 * (K.pow(2) * a * b * c * d.pow(2)) +
           108 * (K.pow(2) * a * c.pow(3) * d) + 128 * (K.pow(2) * b.pow(3) * d.pow(2)) -
           36 * (K.pow(2) * b.pow(2) * c.pow(2) * d) + 192 * (K * b.pow(2) * d.pow(2)) -
           144 * (K * b * c.pow(2) * d) + 27 * (K * c.pow(4)) + 64 * (b * d.pow(2)) -
           24 * (c.pow(2) * d);
    r.R5 = 48 * (K.pow(2) * a * b * d.pow(2)) - 18 * (K.pow(2) * a * c.pow(2) * d) -
           8 * (K.pow(2) * b.pow(2) * c * d) + 3 * (K.pow(2) * b * c.pow(3)) +
           24 * (K * a * d.pow(2)) + 4 * (K * b * c * d) - 3 * (K * c.pow(3)) + 4 * (c * d);
    r.R6 = 48 * (a * b * d.pow(2)) - 18 * (a * c.pow(2) * d) - 8 * (b.pow(2) * c * d) +
           3 * (b * c.pow(3));

    // Self-test: regenerate R1 and R2 from the equilibrium system's
    // eliminants and compare (up to a nonzero rational constant).
    ParamSemiSystem sys = model2_equilibrium_system();
    ParamPoly disc = discriminant(sys.equation);
    if (!ParamPoly::proportional(disc, K.pow(5) * d * r.R1))
        throw InternalError("regenerated R1 does not match the transcribed polynomial");
    ParamPoly res2 = resultant(sys.equation, sys.constraints[1].first);
    if (!ParamPoly::proportional(res2, K.pow(2) * d * r.R2))
        throw InternalError("regenerated R2 does not match the transcribed polynomial");
    return r;
}

} // namespace

const StabilityConditionSet& model2_condition_polys() {
    static const StabilityConditionSet set = build_conditions();
    return set;
}

} // namespace mono

#include "unipoly.hpp"

#include <algorithm>

namespace mono {

namespace {

template <class C>
C sylvester_det_bareiss(std::vector<std::vector<C>> m) {
    const std::size_t n = m.size();
    if (n == 0) return C(1);
    int sign = 1;
    C prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (coeff_is_zero(m[k][k])) {
            std::size_t p = k + 1;
            while (p < n && coeff_is_zero(m[p][k])) ++p;
            if (p == n) return C(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = coeff_exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = C(0);
        }
        prev = m[k][k];
    }
    C det = m[n - 1][n - 1];
    return sign < 0 ? C(0) - det : det;
}

} // namespace

template <class C>
C resultant(const UniPoly<C>& f, const UniPoly<C>& g) {
    if (f.is_zero() || g.is_zero()) throw DomainError("resultant of zero polynomial");
    const std::size_t m = static_cast<std::size_t>(f.degree());
    const std::size_t l = static_cast<std::size_t>(g.degree());
    const std::size_t n = m + l;
    std::vector<std::vector<C>> mat(n, std::vector<C>(n, C(0)));
    for (std::size_t r = 0; r < l; ++r)
        for (std::size_t j = 0; j <= m; ++j)
            mat[r][r + j] = f.coeff(m - j);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= l; ++j)
            mat[l + r][r + j] = g.coeff(l - j);
    return sylvester_det_bareiss(std::move(mat));
}

template Rational resultant<Rational>(const RatPoly&, const RatPoly&);
template ParamPoly resultant<ParamPoly>(const ParamUniPoly&, const ParamUniPoly&);

RatPoly poly_gcd(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() && g.is_zero()) throw DomainError("gcd(0, 0)");
    RatPoly a = f, b = g;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        // monic remainder of a by b
        RatPoly r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            Rational q = r.leading() / b.leading();
            int shift = r.degree() - b.degree();
            std::vector<Rational> sub(static_cast<std::size_t>(shift), Rational(0));
            for (const auto& c : b.coeffs()) sub.push_back(q * c);
            r = r - RatPoly(std::move(sub), r.variable());
        }
        a = b;
        b = r;
    }
    // monic normalization
    if (!a.is_zero() && a.leading() != 1) {
        Rational inv = Rational(1) / a.leading();
        a = inv * a;
    }
    return a;
}

RatPoly primitive_integer_part(const RatPoly& f) {
    if (f.is_zero()) return f;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& c : f.coeffs()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(f.leading()) < 0) scale = -scale;
    return scale * f;
}

RatPoly squarefree_part(const RatPoly& f) {
    if (f.is_zero()) throw DomainError("squarefree part of zero polynomial");
    if (f.degree() == 0) return RatPoly::constant(Rational(1), f.variable());
    RatPoly g = poly_gcd(f, f.derivative());
    RatPoly sf = g.degree() == 0 ? f : RatPoly::exact_div(f, g);
    return primitive_integer_part(sf);
}

std::vector<std::pair<RatPoly, unsigned>> squarefree_decomposition(const RatPoly& f) {
    if (f.is_zero()) throw DomainError("squarefree decomposition of zero polynomial");
    std::vector<std::pair<RatPoly, unsigned>> out;
    if (f.degree() == 0) return out;
    // Yun's algorithm
    RatPoly df = f.derivative();
    RatPoly g = poly_gcd(f, df);
    RatPoly c = g.degree() == 0 ? f : RatPoly::exact_div(f, g);
    RatPoly d = (g.degree() == 0 ? df : RatPoly::exact_div(df, g)) - c.derivative();
    unsigned i = 1;
    while (c.degree() > 0) {
        RatPoly p = poly_gcd(c, d);
        if (p.degree() > 0) out.emplace_back(primitive_integer_part(p), i);
        c = RatPoly::exact_div(c, p);
        d = RatPoly::exact_div(d, p) - c.derivative();
        ++i;
    }
    return out;
}

RatInterval interval_eval(const RatPoly& f, const RatInterval& in) {
    RatInterval acc = RatInterval::point(Rational(0));
    RatInterval x(in.lo, in.hi);
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
        acc = acc * x + RatInterval::point(*it);
    if (f.is_zero()) return RatInterval::point(Rational(0));
    return acc;
}

Rational cauchy_root_bound(const RatPoly& f) {
    if (f.is_zero()) throw DomainError("root bound of zero polynomial");
    Rational maxr = 0;
    for (int i = 0; i < f.degree(); ++i) {
        Rational r = abs(f.coeff(static_cast<std::size_t>(i)) / f.leading());
        if (r > maxr) maxr = r;
    }
    return maxr + 1;
}

ParamUniPoly to_param_poly(const RatPoly& f) {
    std::vector<ParamPoly> cs;
    cs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) cs.emplace_back(c);
    return ParamUniPoly(std::move(cs), f.variable());
}

RatPoly substitute_params(const ParamUniPoly& f, const std::map<char, Rational>& values) {
    std::vector<Rational> cs;
    cs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) cs.push_back(c.evaluate(values));
    return RatPoly(std::move(cs), f.variable());
}

} // namespace mono

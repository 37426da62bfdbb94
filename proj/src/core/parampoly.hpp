#ifndef MONO_PARAMPOLY_HPP
#define MONO_PARAMPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rational.hpp"

namespace mono {

// The parameter universe of both models plus the magnitude variable.
// Every ParamPoly lives over this fixed, ordered set; unused variables
// simply carry exponent 0.
inline constexpr std::array<char, 7> kParamVars = {'a', 'b', 'c', 'd', 'e', 'f', 'K'};
inline constexpr std::size_t kNumParams = kParamVars.size();

using ExpVec = std::array<std::uint16_t, kNumParams>;

// Graded lexicographic: compare total degree first, then exponents in
// variable order a, b, c, d, e, f, K.
struct GrlexLess {
    bool operator()(const ExpVec& x, const ExpVec& y) const {
        unsigned dx = 0, dy = 0;
        for (std::size_t i = 0; i < kNumParams; ++i) { dx += x[i]; dy += y[i]; }
        if (dx != dy) return dx < dy;
        for (std::size_t i = 0; i < kNumParams; ++i)
            if (x[i] != y[i]) return x[i] < y[i];
        return false;
    }
};

int param_index(char name); // throws DomainError for unknown names

// Sparse multivariate polynomial with exact rational coefficients.
// Zero coefficients are never stored; the term map is the canonical form.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(const Rational& c); // NOLINT: implicit by design
    ParamPoly(long c) : ParamPoly(Rational(c)) {}
    static ParamPoly var(char name, unsigned exp = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // The constant value; requires is_constant().
    Rational constant_value() const;

    unsigned total_degree() const; // 0 for the zero polynomial
    std::size_t term_count() const { return terms_.size(); }

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o);

    friend ParamPoly operator+(ParamPoly x, const ParamPoly& y) { return x += y; }
    friend ParamPoly operator-(ParamPoly x, const ParamPoly& y) { return x -= y; }
    friend ParamPoly operator*(const ParamPoly& x, const ParamPoly& y);
    friend bool operator==(const ParamPoly& x, const ParamPoly& y) { return x.terms_ == y.terms_; }

    ParamPoly pow(unsigned n) const;

    // Exact division; throws DivisibilityError when the quotient is not a
    // polynomial. This is what makes Bareiss elimination fraction-free.
    static ParamPoly exact_div(const ParamPoly& num, const ParamPoly& den);

    // Full substitution. Every variable occurring in the polynomial must
    // be assigned; missing assignments throw DomainError.
    Rational evaluate(const std::map<char, Rational>& values) const;

    // Partial substitution, e.g. fixing K while keeping d symbolic.
    ParamPoly substitute(const std::map<char, Rational>& values) const;

    // True if x == q*y for some nonzero rational q (and not both zero).
    static bool proportional(const ParamPoly& x, const ParamPoly& y);

    // Removes rational content so coefficients are coprime integers, and
    // makes the grlex-leading coefficient positive.
    ParamPoly normalized() const;

    // Collects the polynomial as univariate in `name`; throws DomainError
    // if any other variable occurs.
    std::vector<Rational> univariate_coeffs(char name) const;

    std::string str() const;

    const std::map<ExpVec, Rational, GrlexLess>& terms() const { return terms_; }

private:
    void add_term(const ExpVec& e, const Rational& c);
    std::map<ExpVec, Rational, GrlexLess> terms_;
};

inline ParamPoly operator*(long c, const ParamPoly& p) { return ParamPoly(c) * p; }
inline ParamPoly operator*(const Rational& c, const ParamPoly& p) { return ParamPoly(c) * p; }

} // namespace mono

#endif

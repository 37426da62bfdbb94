#ifndef MONO_UNIPOLY_HPP
#define MONO_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "interval.hpp"
#include "parampoly.hpp"
#include "rational.hpp"

namespace mono {

// Coefficient-domain glue shared by Rational and ParamPoly.
inline bool coeff_is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const ParamPoly& c) { return c.is_zero(); }
inline Rational coeff_exact_div(const Rational& a, const Rational& b) {
    if (sgn(b) == 0) throw DomainError("division by zero coefficient");
    return a / b;
}
inline ParamPoly coeff_exact_div(const ParamPoly& a, const ParamPoly& b) {
    return ParamPoly::exact_div(a, b);
}
inline std::string coeff_str(const Rational& c) { return to_string(c); }
inline std::string coeff_str(const ParamPoly& c) { return "(" + c.str() + ")"; }

// Dense univariate polynomial; coefficient index == degree. The leading
// coefficient is nonzero unless the polynomial is identically zero.
template <class C>
class UniPoly {
public:
    UniPoly() : var_('x') {}
    explicit UniPoly(char var) : var_(var) {}
    UniPoly(std::vector<C> coeffs, char var = 'x') : coeffs_(std::move(coeffs)), var_(var) { trim(); }

    static UniPoly constant(C c, char var = 'x') {
        UniPoly p(var);
        if (!coeff_is_zero(c)) p.coeffs_.push_back(std::move(c));
        return p;
    }
    static UniPoly identity(char var = 'x') {
        return UniPoly(std::vector<C>{C(0), C(1)}, var);
    }
    // c * var^k
    static UniPoly monomial(C c, unsigned k, char var = 'x') {
        std::vector<C> v(k + 1, C(0));
        v[k] = std::move(c);
        return UniPoly(std::move(v), var);
    }

    char variable() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const C& coeff(std::size_t i) const {
        static const C zero = C(0);
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }
    const C& leading() const {
        if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
        return coeffs_.back();
    }
    const std::vector<C>& coeffs() const { return coeffs_; }

    UniPoly operator-() const {
        UniPoly r(var_);
        r.coeffs_.reserve(coeffs_.size());
        for (const auto& c : coeffs_) r.coeffs_.push_back(C(0) - c);
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        a.check_var(b);
        std::vector<C> v(std::max(a.coeffs_.size(), b.coeffs_.size()), C(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return UniPoly(std::move(v), a.var_);
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        a.check_var(b);
        if (a.is_zero() || b.is_zero()) return UniPoly(a.var_);
        std::vector<C> v(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (coeff_is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return UniPoly(std::move(v), a.var_);
    }

    friend UniPoly operator*(const C& c, const UniPoly& p) {
        UniPoly r(p.var_);
        if (coeff_is_zero(c)) return r;
        r.coeffs_.reserve(p.coeffs_.size());
        for (const auto& x : p.coeffs_) r.coeffs_.push_back(c * x);
        r.trim();
        return r;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
    }

    UniPoly derivative() const {
        UniPoly r(var_);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            r.coeffs_.push_back(C(static_cast<long>(i)) * coeffs_[i]);
        r.trim();
        return r;
    }

    // F.compose(G) = F(G(x)), by Horner in G.
    UniPoly compose(const UniPoly& g) const {
        check_var(g);
        UniPoly r(var_);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            r = r * g + constant(*it, var_);
        return r;
    }

    C evaluate(const C& x) const {
        C acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    // Quotient of an exact division; throws DivisibilityError if the
    // remainder is nonzero or a quotient coefficient leaves the domain.
    static UniPoly exact_div(const UniPoly& num, const UniPoly& den) {
        num.check_var(den);
        if (den.is_zero()) throw DomainError("exact_div by zero polynomial");
        if (num.is_zero()) return UniPoly(num.var_);
        if (num.degree() < den.degree())
            throw DivisibilityError("exact_div: divisor degree exceeds dividend");
        std::vector<C> rem = num.coeffs_;
        std::vector<C> quot(num.coeffs_.size() - den.coeffs_.size() + 1, C(0));
        const C& dlead = den.leading();
        for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
            C qc = coeff_exact_div(rem[k + den.degree()], dlead);
            if (!coeff_is_zero(qc)) {
                for (std::size_t j = 0; j < den.coeffs_.size(); ++j)
                    rem[k + j] -= qc * den.coeffs_[j];
            }
            quot[k] = std::move(qc);
        }
        for (const auto& c : rem)
            if (!coeff_is_zero(c)) throw DivisibilityError("exact_div: nonzero remainder");
        return UniPoly(std::move(quot), num.var_);
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            if (coeff_is_zero(coeffs_[i])) continue;
            if (!out.empty()) out += " + ";
            out += coeff_str(coeffs_[i]);
            if (i >= 1) out += std::string("*") + var_;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void check_var(const UniPoly& o) const {
        if (var_ != o.var_) throw DomainError("mismatched main variables");
    }
    void trim() {
        while (!coeffs_.empty() && coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<C> coeffs_;
    char var_;
};

using RatPoly = UniPoly<Rational>;
using ParamUniPoly = UniPoly<ParamPoly>;

// Sylvester resultant with F's coefficient rows first, exactly the
// convention of the matrix displayed in the border-polynomial definition.
// Computed by fraction-free (Bareiss) elimination, which keeps ParamPoly
// entries polynomial throughout.
template <class C>
C resultant(const UniPoly<C>& f, const UniPoly<C>& g);

template <class C>
C discriminant(const UniPoly<C>& f) {
    if (f.degree() < 1) throw DomainError("discriminant of a constant");
    return resultant(f, f.derivative());
}

// --- Rational-coefficient helpers ------------------------------------

// gcd via monic Euclidean remainders, result monic.
RatPoly poly_gcd(const RatPoly& f, const RatPoly& g);

// Squarefree part: product of distinct irreducible factors, normalized
// to coprime integer coefficients with positive leading coefficient.
RatPoly squarefree_part(const RatPoly& f);

// Yun squarefree decomposition: returns [(g1,1),(g2,2),...] with
// f proportional to prod g_i^i and the g_i pairwise coprime squarefree.
std::vector<std::pair<RatPoly, unsigned>> squarefree_decomposition(const RatPoly& f);

// Clears denominators and integer content; positive leading coefficient.
RatPoly primitive_integer_part(const RatPoly& f);

// Enclosure of {F(t) : t in I} by exact interval Horner evaluation.
RatInterval interval_eval(const RatPoly& f, const RatInterval& in);

// Cauchy bound: all real roots lie in (-B, B).
Rational cauchy_root_bound(const RatPoly& f);

ParamUniPoly to_param_poly(const RatPoly& f);
RatPoly substitute_params(const ParamUniPoly& f, const std::map<char, Rational>& values);

} // namespace mono

#endif

#include "parampoly.hpp"

#include <algorithm>
#include <sstream>

namespace mono {

int param_index(char name) {
    for (std::size_t i = 0; i < kNumParams; ++i)
        if (kParamVars[i] == name) return static_cast<int>(i);
    throw DomainError(std::string("unknown parameter name '") + name + "'");
}

ParamPoly::ParamPoly(const Rational& c) {
    if (sgn(c) != 0) terms_[ExpVec{}] = c;
}

ParamPoly ParamPoly::var(char name, unsigned exp) {
    ParamPoly p;
    if (exp == 0) return ParamPoly(Rational(1));
    ExpVec e{};
    e[param_index(name)] = static_cast<std::uint16_t>(exp);
    p.terms_[e] = 1;
    return p;
}

bool ParamPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == ExpVec{};
}

Rational ParamPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw DomainError("ParamPoly is not constant");
    return terms_.begin()->second;
}

unsigned ParamPoly::total_degree() const {
    if (terms_.empty()) return 0;
    const ExpVec& e = terms_.rbegin()->first; // grlex max has max total degree
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
}

void ParamPoly::add_term(const ExpVec& e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (sgn(c) != 0) terms_.emplace(e, c);
    } else {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ParamPoly operator*(const ParamPoly& x, const ParamPoly& y) {
    ParamPoly r;
    for (const auto& [ex, cx] : x.terms_) {
        for (const auto& [ey, cy] : y.terms_) {
            ExpVec e;
            for (std::size_t i = 0; i < kNumParams; ++i)
                e[i] = static_cast<std::uint16_t>(ex[i] + ey[i]);
            r.add_term(e, cx * cy);
        }
    }
    return r;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
    *this = *this * o;
    return *this;
}

ParamPoly ParamPoly::pow(unsigned n) const {
    ParamPoly r(Rational(1)), b = *this;
    while (n > 0) {
        if (n & 1u) r *= b;
        b *= b;
        n >>= 1u;
    }
    return r;
}

ParamPoly ParamPoly::exact_div(const ParamPoly& num, const ParamPoly& den) {
    if (den.is_zero()) throw DomainError("ParamPoly division by zero");
    if (num.is_zero()) return ParamPoly();
    ParamPoly rem = num, quot;
    const auto& dlead = *den.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        ExpVec qe;
        for (std::size_t i = 0; i < kNumParams; ++i) {
            if (rlead.first[i] < dlead.first[i])
                throw DivisibilityError("ParamPoly division not exact");
            qe[i] = static_cast<std::uint16_t>(rlead.first[i] - dlead.first[i]);
        }
        Rational qc = rlead.second / dlead.second;
        ParamPoly t;
        t.terms_.emplace(qe, qc);
        quot += t;
        rem -= t * den;
    }
    return quot;
}

Rational ParamPoly::evaluate(const std::map<char, Rational>& values) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < kNumParams; ++i) {
            if (e[i] == 0) continue;
            auto it = values.find(kParamVars[i]);
            if (it == values.end())
                throw DomainError(std::string("no value for parameter '") + kParamVars[i] + "'");
            t *= pow_rational(it->second, e[i]);
        }
        acc += t;
    }
    return acc;
}

ParamPoly ParamPoly::substitute(const std::map<char, Rational>& values) const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) {
        Rational coeff = c;
        ExpVec rest{};
        for (std::size_t i = 0; i < kNumParams; ++i) {
            if (e[i] == 0) continue;
            auto it = values.find(kParamVars[i]);
            if (it != values.end())
                coeff *= pow_rational(it->second, e[i]);
            else
                rest[i] = e[i];
        }
        r.add_term(rest, coeff);
    }
    return r;
}

bool ParamPoly::proportional(const ParamPoly& x, const ParamPoly& y) {
    if (x.is_zero() || y.is_zero()) return false;
    if (x.terms_.size() != y.terms_.size()) return false;
    Rational ratio = 0;
    auto ix = x.terms_.begin();
    auto iy = y.terms_.begin();
    for (; ix != x.terms_.end(); ++ix, ++iy) {
        if (ix->first != iy->first) return false;
        Rational r = ix->second / iy->second;
        if (sgn(ratio) == 0)
            ratio = r;
        else if (r != ratio)
            return false;
    }
    return true;
}

ParamPoly ParamPoly::normalized() const {
    if (is_zero()) return *this;
    // content = gcd of numerators / lcm of denominators
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(terms_.rbegin()->second) < 0) scale = -scale;
    ParamPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * scale);
    return r;
}

std::vector<Rational> ParamPoly::univariate_coeffs(char name) const {
    int idx = param_index(name);
    std::size_t deg = 0;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < kNumParams; ++i)
            if (static_cast<int>(i) != idx && e[i] != 0)
                throw DomainError("ParamPoly is not univariate in requested variable");
        deg = std::max<std::size_t>(deg, e[idx]);
    }
    std::vector<Rational> coeffs(deg + 1, Rational(0));
    for (const auto& [e, c] : terms_) coeffs[e[idx]] = c;
    return coeffs;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print from the grlex-leading term down
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->second;
        if (!first) os << (sgn(c) >= 0 ? " + " : " - ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        Rational ac = abs(c);
        bool has_vars = !(it->first == ExpVec{});
        if (ac != 1 || !has_vars) os << to_string(ac);
        bool star = ac != 1 || !has_vars;
        for (std::size_t i = 0; i < kNumParams; ++i) {
            if (it->first[i] == 0) continue;
            if (star) os << "*";
            os << kParamVars[i];
            if (it->first[i] > 1) os << "^" << it->first[i];
            star = true;
        }
    }
    return os.str();
}

} // namespace mono

#include "rational.hpp"

#include <cctype>
#include <cstdlib>

namespace mono {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw DomainError("empty rational literal");
    auto bad = [&]() { throw DomainError("bad rational literal: '" + text + "'"); };

    std::string s = text;
    // strip surrounding whitespace
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) bad();
    s = s.substr(b, e - b + 1);

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (num.empty() || den.empty()) bad();
        Rational q;
        if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0) bad();
        if (mpq_sgn(q.get_mpq_t()) != 0 || num.find_first_not_of("+-0") == std::string::npos) {
            // mpq_set_str accepts zero denominators; reject them.
            if (Int(den) == 0) bad();
        }
        q.canonicalize();
        return q;
    }

    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Int n;
        if (mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0) bad();
        return Rational(n);
    }

    // Decimal: sign, integer part, fractional part. Parsed exactly.
    std::string intpart = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool neg = false;
    if (!intpart.empty() && (intpart[0] == '+' || intpart[0] == '-')) {
        neg = intpart[0] == '-';
        intpart = intpart.substr(1);
    }
    if (intpart.empty() && frac.empty()) bad();
    for (char c : intpart) if (!std::isdigit(static_cast<unsigned char>(c))) bad();
    for (char c : frac) if (!std::isdigit(static_cast<unsigned char>(c))) bad();

    Int mant(intpart.empty() ? "0" : intpart);
    Int den = 1;
    for (char c : frac) {
        mant = mant * 10 + (c - '0');
        den *= 10;
    }
    Rational q(mant, den);
    q.canonicalize();
    if (neg) q = -q;
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal_string(const Rational& q, unsigned digits) {
    Int num = q.get_num(), den = q.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    Int scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    Int scaled = num * scale / den; // truncation toward zero
    Int ip = scaled / scale, fp = scaled % scale;
    std::string out = (neg && (ip != 0 || fp != 0) ? "-" : "") + ip.get_str();
    if (digits > 0) {
        std::string f = fp.get_str();
        out += "." + std::string(digits - f.size(), '0') + f;
    }
    return out;
}

Rational pow_rational(const Rational& base, unsigned exp) {
    Rational r = 1, b = base;
    unsigned n = exp;
    while (n > 0) {
        if (n & 1u) r *= b;
        b *= b;
        n >>= 1u;
    }
    return r;
}

long floor_log2_abs(const Rational& q) {
    if (sgn(q) == 0) throw DomainError("floor_log2_abs of zero");
    // sizeinbase gives ceil(log2) within 1; correct by comparison.
    long n = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2));
    long d = static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
    long guess = n - d; // |q| in [2^(guess-1), 2^(guess+1))
    Rational a = abs(q);
    Rational p = guess >= 0 ? Rational(Int(1) << guess) : Rational(1, Int(1) << (-guess));
    while (p > a) { p /= 2; --guess; }
    while (p * 2 <= a) { p *= 2; ++guess; }
    return guess;
}

} // namespace mono

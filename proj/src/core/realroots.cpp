#include "realroots.hpp"

#include <algorithm>
#include <deque>

namespace mono {

namespace {

using ZVec = std::vector<Int>; // dense integer coefficients, index = degree

void trim(ZVec& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// Count sign variations, capped at 2 (isolation only needs 0 / 1 / many).
int sign_variations_capped(const ZVec& c) {
    int v = 0, last = 0;
    for (const auto& x : c) {
        int s = sgn(x);
        if (s == 0) continue;
        if (last != 0 && s != last && ++v >= 2) return v;
        last = s;
    }
    return v;
}

// c(x) <- c(x+1), in place (Pascal-style additions).
void taylor_shift_1(ZVec& c) {
    const std::size_t n = c.size();
    if (n < 2) return;
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t j = n - 1; j-- > k;)
            c[j] += c[j + 1];
}

// c(x) <- 2^deg * c(x/2).
void scale_x_half(ZVec& c) {
    if (c.empty()) return;
    const std::size_t n = c.size() - 1;
    for (std::size_t i = 0; i + 1 <= n; ++i)
        mpz_mul_2exp(c[i].get_mpz_t(), c[i].get_mpz_t(), n - i);
}

// Remove the common power of two; keeps coefficient growth linear in depth.
void strip_two_content(ZVec& c) {
    mp_bitcnt_t min_tz = ~static_cast<mp_bitcnt_t>(0);
    for (const auto& x : c) {
        if (x == 0) continue;
        mp_bitcnt_t tz = mpz_scan1(x.get_mpz_t(), 0);
        min_tz = std::min(min_tz, tz);
        if (min_tz == 0) return;
    }
    if (min_tz == 0 || min_tz == ~static_cast<mp_bitcnt_t>(0)) return;
    for (auto& x : c)
        mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), min_tz);
}

// Divide by x (requires zero constant term).
void deflate_by_x(ZVec& c) {
    c.erase(c.begin());
}

// Divide by (x - 1) (requires c(1) == 0).
void deflate_root_one(ZVec& c) {
    const std::size_t n = c.size() - 1;
    ZVec q(n);
    Int carry = c[n];
    for (std::size_t i = n; i-- > 0;) {
        q[i] = carry;
        carry += c[i];
    }
    c = std::move(q);
}

struct VcaNode {
    Int num;        // interval = (B*num/2^depth, B*(num+1)/2^depth)
    unsigned depth;
    ZVec poly;      // node polynomial on (0,1)
};

struct VcaResult {
    std::vector<std::pair<Rational, Rational>> open_intervals; // (lo, hi)
    std::vector<Rational> exact_roots;
};

constexpr unsigned kMaxVcaDepth = 512;

// Isolates the roots of the squarefree integer polynomial g in (0, B),
// B = 2^b_log2. g must not vanish at 0.
VcaResult vca_positive(const ZVec& g, unsigned b_log2) {
    VcaResult out;
    if (g.size() < 2) return out;
    const std::size_t n = g.size() - 1;

    ZVec root_poly = g;
    for (std::size_t i = 0; i < g.size(); ++i)
        mpz_mul_2exp(root_poly[i].get_mpz_t(), root_poly[i].get_mpz_t(), b_log2 * i);
    strip_two_content(root_poly);

    auto node_interval = [&](const Int& num, unsigned depth) {
        Rational scale = Rational(Int(Int(1) << b_log2)) / Rational(Int(Int(1) << depth));
        return std::pair<Rational, Rational>(Rational(num) * scale, Rational(Int(num + 1)) * scale);
    };

    std::deque<VcaNode> stack;
    stack.push_back(VcaNode{Int(0), 0, std::move(root_poly)});
    while (!stack.empty()) {
        VcaNode node = std::move(stack.back());
        stack.pop_back();

        ZVec rev(node.poly.rbegin(), node.poly.rend());
        taylor_shift_1(rev);
        int v = sign_variations_capped(rev);
        if (v == 0) continue;
        if (v == 1) {
            auto [lo, hi] = node_interval(node.num, node.depth);
            out.open_intervals.emplace_back(lo, hi);
            continue;
        }
        if (node.depth >= kMaxVcaDepth)
            throw CertificationError(
                "root isolation exceeded depth limit; multiple root suspected");

        ZVec left = node.poly;
        scale_x_half(left);
        ZVec right = left;
        taylor_shift_1(right);
        if (right[0] == 0) {
            // exact dyadic root at the midpoint
            auto [lo, hi] = node_interval(node.num, node.depth);
            out.exact_roots.push_back((lo + hi) / 2);
            deflate_by_x(right);
            deflate_root_one(left);
        }
        strip_two_content(left);
        strip_two_content(right);
        stack.push_back(VcaNode{node.num * 2 + 1, node.depth + 1, std::move(right)});
        stack.push_back(VcaNode{node.num * 2, node.depth + 1, std::move(left)});
    }
    return out;
}

ZVec integer_coeffs(const RatPoly& f) {
    RatPoly p = primitive_integer_part(f);
    ZVec c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.push_back(q.get_num());
    return c;
}

unsigned ceil_log2_bound(const RatPoly& f) {
    Rational b = cauchy_root_bound(f);
    unsigned k = 0;
    Rational p = 1;
    while (p < b) { p *= 2; ++k; }
    return k;
}

struct RootEntry {
    RatInterval interval;
    unsigned multiplicity;
    RatPoly factor; // squarefree factor owning this root
};

// Distinct real roots of one squarefree polynomial.
std::vector<RatInterval> descartes_squarefree(const RatPoly& sf, RootDomain domain) {
    std::vector<RatInterval> out;
    if (sf.degree() <= 0) return out;
    ZVec c = integer_coeffs(sf);
    bool zero_root = false;
    while (c[0] == 0) { // squarefree => at most once
        deflate_by_x(c);
        zero_root = true;
    }
    if (zero_root && domain == RootDomain::All)
        out.push_back(RatInterval::point(Rational(0)));
    trim(c);
    if (c.size() >= 2) {
        unsigned blog = ceil_log2_bound(sf);
        VcaResult pos = vca_positive(c, blog);
        for (auto& [lo, hi] : pos.open_intervals)
            out.emplace_back(lo, hi, IntervalKind::Open);
        for (auto& r : pos.exact_roots) out.push_back(RatInterval::point(r));
        if (domain == RootDomain::All) {
            ZVec neg = c;
            for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
            VcaResult np = vca_positive(neg, blog);
            for (auto& [lo, hi] : np.open_intervals)
                out.emplace_back(-hi, -lo, IntervalKind::Open);
            for (auto& r : np.exact_roots) out.push_back(RatInterval::point(-r));
        }
    }
    // A dyadic root detected at some midpoint leaves sibling subtrees whose
    // emitted intervals can end exactly at that root. Pull such endpoints
    // strictly inside so open intervals never have roots as endpoints.
    for (auto& iv : out) {
        if (iv.is_point()) continue;
        while (sign_at(sf, iv.lo) == 0 || sign_at(sf, iv.hi) == 0) {
            Rational m = iv.midpoint();
            if (sign_at(sf, m) == 0) {
                iv = RatInterval::point(m);
                break;
            }
            if (sturm_count(sf, RatInterval(m, iv.hi, IntervalKind::Open)) == 1)
                iv = RatInterval(m, iv.hi, IntervalKind::Open);
            else
                iv = RatInterval(iv.lo, m, IntervalKind::Open);
        }
    }

    std::sort(out.begin(), out.end(), [](const RatInterval& a, const RatInterval& b) {
        return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
    });
    return out;
}

} // namespace

RootList isolate_roots(const RatPoly& f, RootDomain domain) {
    if (f.is_zero()) throw DomainError("isolate_roots of zero polynomial");
    RootList out;
    out.polynomial = f;
    if (f.degree() == 0) return out;

    std::vector<RootEntry> entries;
    if (f.degree() <= kSquarefreeDegreeLimit) {
        for (auto& [factor, mult] : squarefree_decomposition(f))
            for (auto& iv : descartes_squarefree(factor, domain))
                entries.push_back(RootEntry{iv, mult, factor});
    } else {
        // High-degree fast path: assume squarefree. A genuine multiple root
        // trips the VCA depth guard and surfaces as CertificationError.
        RatPoly g = primitive_integer_part(f);
        for (auto& iv : descartes_squarefree(g, domain))
            entries.push_back(RootEntry{iv, 1, g});
    }

    std::sort(entries.begin(), entries.end(),
              [](const RootEntry& a, const RootEntry& b) {
                  return a.interval.lo != b.interval.lo ? a.interval.lo < b.interval.lo
                                                        : a.interval.hi < b.interval.hi;
              });

    // Roots from different squarefree factors are distinct but their raw
    // isolating intervals may overlap; shrink until pairwise disjoint.
    for (int rounds = 0; rounds < 256; ++rounds) {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
            if (!entries[i].interval.disjoint_from(entries[i + 1].interval)) {
                ok = false;
                for (std::size_t j : {i, i + 1}) {
                    auto& en = entries[j];
                    if (!en.interval.is_point())
                        en.interval = refine(en.factor, en.interval, en.interval.width() / 2);
                }
            }
        }
        std::sort(entries.begin(), entries.end(),
                  [](const RootEntry& a, const RootEntry& b) {
                  return a.interval.lo != b.interval.lo ? a.interval.lo < b.interval.lo
                                                        : a.interval.hi < b.interval.hi;
              });
        if (ok) break;
        if (rounds == 255)
            throw CertificationError("failed to separate isolating intervals of distinct factors");
    }

    for (auto& en : entries) {
        out.intervals.push_back(en.interval);
        out.multiplicities.push_back(en.multiplicity);
    }
    return out;
}

// Exact sign of f at a rational point, with an integer fast path for
// dyadic arguments (the refinement hot loop).
int sign_at(const RatPoly& f, const Rational& x) {
    if (f.is_zero()) return 0;
    const Int& den = x.get_den();
    // fast path: integer coefficients, power-of-two denominator
    bool int_coeffs = true;
    for (const auto& c : f.coeffs())
        if (c.get_den() != 1) { int_coeffs = false; break; }
    if (int_coeffs && mpz_scan1(den.get_mpz_t(), 0) == mpz_sizeinbase(den.get_mpz_t(), 2) - 1) {
        unsigned k = static_cast<unsigned>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 1;
        const Int& p = x.get_num();
        Int acc = 0;
        const auto& cs = f.coeffs();
        for (std::size_t i = cs.size(); i-- > 0;) {
            acc *= p;
            Int t = cs[i].get_num();
            mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), k * (cs.size() - 1 - i));
            acc += t;
        }
        return sgn(acc);
    }
    return sgn(f.evaluate(x));
}

namespace {

RatPoly deflate_rational_root(const RatPoly& f, const Rational& r) {
    const auto& c = f.coeffs();
    std::vector<Rational> q(c.size() - 1, Rational(0));
    Rational carry = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = c[i] + r * carry;
    }
    if (sgn(carry) != 0) throw InternalError("deflation at a non-root");
    return RatPoly(std::move(q), f.variable());
}

std::vector<RatPoly> sturm_chain(const RatPoly& sf) {
    std::vector<RatPoly> chain{sf, sf.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        const RatPoly& a = chain[chain.size() - 2];
        const RatPoly& b = chain.back();
        RatPoly r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            Rational q = r.leading() / b.leading();
            int shift = r.degree() - b.degree();
            std::vector<Rational> sub(static_cast<std::size_t>(shift), Rational(0));
            for (const auto& c : b.coeffs()) sub.push_back(q * c);
            r = r - RatPoly(std::move(sub), r.variable());
        }
        if (r.is_zero()) break;
        // normalize by a positive constant to control coefficient growth
        RatPoly neg = primitive_integer_part(-r);
        if (sgn((-r).leading()) < 0) neg = Rational(-1) * neg;
        chain.push_back(neg);
    }
    return chain;
}

long sturm_variations(const std::vector<RatPoly>& chain, const Rational& x) {
    long v = 0;
    int last = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

} // namespace

long sturm_count(const RatPoly& f, const RatInterval& interval) {
    if (f.is_zero()) throw DomainError("sturm_count of zero polynomial");
    if (f.degree() == 0) return 0;
    RatPoly sf = squarefree_part(f);
    if (interval.is_point())
        return (interval.lo_closed() && interval.hi_closed() && sign_at(sf, interval.lo) == 0) ? 1
                                                                                               : 0;
    long count = 0;
    Rational a = interval.lo, b = interval.hi;
    if (sign_at(sf, a) == 0) {
        if (interval.lo_closed()) ++count;
        sf = deflate_rational_root(sf, a);
    }
    if (!sf.is_zero() && sf.degree() > 0 && sign_at(sf, b) == 0) {
        if (interval.hi_closed()) ++count;
        sf = deflate_rational_root(sf, b);
    }
    if (sf.degree() < 1) return count;
    auto chain = sturm_chain(sf);
    // endpoints are not roots of sf now, so V(a) - V(b) counts the open interval
    count += sturm_variations(chain, a) - sturm_variations(chain, b);
    return count;
}

RatInterval refine(const RatPoly& f, const RatInterval& isolating, const Rational& width) {
    if (f.is_zero()) throw DomainError("refine against zero polynomial");
    if (isolating.is_point()) {
        if (sign_at(f, isolating.lo) != 0)
            throw CertificationError("point interval does not contain a root");
        return isolating;
    }
    Rational lo = isolating.lo, hi = isolating.hi;
    int s_lo = sign_at(f, lo), s_hi = sign_at(f, hi);

    if (s_lo == 0 || s_hi == 0) {
        // An endpoint is a root: acceptable only if it is the isolated root.
        if (s_lo == 0 && isolating.lo_closed() &&
            sturm_count(f, RatInterval(lo, hi, IntervalKind::HalfOpenLo)) == 0)
            return RatInterval::point(lo);
        if (s_hi == 0 && isolating.hi_closed() &&
            sturm_count(f, RatInterval(lo, hi, IntervalKind::HalfOpenHi)) == 0)
            return RatInterval::point(hi);
        throw CertificationError("interval endpoint is a root; interval is not isolating");
    }

    if (s_lo * s_hi < 0) {
        while (hi - lo > width) {
            Rational mid = (lo + hi) / 2;
            int sm = sign_at(f, mid);
            if (sm == 0) return RatInterval::point(mid);
            if (sm == s_lo)
                lo = mid;
            else
                hi = mid;
        }
        return RatInterval(lo, hi, IntervalKind::Open);
    }

    // No sign change (even local multiplicity): certify and bisect by Sturm.
    if (sturm_count(f, RatInterval(lo, hi, IntervalKind::Open)) != 1)
        throw CertificationError("interval does not isolate exactly one root");
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        if (sign_at(f, mid) == 0) return RatInterval::point(mid);
        if (sturm_count(f, RatInterval(lo, mid, IntervalKind::Open)) == 1)
            hi = mid;
        else
            lo = mid;
    }
    return RatInterval(lo, hi, IntervalKind::Open);
}

} // namespace mono

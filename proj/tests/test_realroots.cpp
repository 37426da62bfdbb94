#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/realroots.hpp"

using namespace mono;

namespace {

RatPoly rp(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return RatPoly(std::move(v));
}

bool holds_value(const RatInterval& iv, const Rational& v) {
    return iv.lo <= v && v <= iv.hi;
}

} // namespace

TEST_CASE("sqrt2 isolation and refinement") {
    RatPoly f = rp({-2, 0, 1});
    RootList roots = isolate_roots(f);
    REQUIRE(roots.size() == 2);
    CHECK(roots.intervals[0].hi <= 0);
    CHECK(roots.intervals[1].lo >= 0);

    RatInterval iv = refine(f, roots.intervals[1], Rational(1, 1000000));
    CHECK(iv.width() <= Rational(1, 1000000));
    // sqrt(2) = 1.4142135623...
    CHECK(iv.lo > Rational(1414213, 1000000));
    CHECK(iv.hi < Rational(14142146, 10000000));
}

TEST_CASE("positive-only domain") {
    RatPoly f = rp({-2, 0, 1});
    RootList roots = isolate_roots(f, RootDomain::Positive);
    REQUIRE(roots.size() == 1);
    CHECK(roots.intervals[0].lo >= 0);
    CHECK(roots.intervals[0].hi > 1);
}

TEST_CASE("exact rational and zero roots") {
    // x^2 (3x - 1) (x - 2): roots 0 (double), 1/3, 2
    RatPoly f = rp({0, 0, 1}) * rp({-1, 3}) * rp({-2, 1});
    RootList roots = isolate_roots(f);
    REQUIRE(roots.size() == 3);
    CHECK(roots.intervals[0].is_point());
    CHECK(roots.intervals[0].lo == 0);
    CHECK(roots.multiplicities[0] == 2);
    CHECK(holds_value(roots.intervals[1], Rational(1, 3)));
    CHECK(roots.multiplicities[1] == 1);
    CHECK(holds_value(roots.intervals[2], Rational(2)));
    CHECK(roots.multiplicities[2] == 1);
    // intervals pairwise disjoint
    CHECK(roots.intervals[0].disjoint_from(roots.intervals[1]));
    CHECK(roots.intervals[1].disjoint_from(roots.intervals[2]));

    RootList pos = isolate_roots(f, RootDomain::Positive);
    CHECK(pos.size() == 2);
}

TEST_CASE("repeated irrational root via decomposition") {
    RatPoly f = rp({-2, 0, 1});
    RootList roots = isolate_roots(f * f * rp({-3, 1}));
    REQUIRE(roots.size() == 3);
    CHECK(roots.multiplicities[0] == 2); // -sqrt2
    CHECK(roots.multiplicities[1] == 2); // +sqrt2
    CHECK(roots.multiplicities[2] == 1); // 3
    CHECK(holds_value(roots.intervals[2], Rational(3)));
}

TEST_CASE("integer roots one through ten") {
    RatPoly f = RatPoly::constant(Rational(1));
    for (long k = 1; k <= 10; ++k) f = f * rp({-k, 1});
    RootList roots = isolate_roots(f);
    REQUIRE(roots.size() == 10);
    for (long k = 1; k <= 10; ++k)
        CHECK(holds_value(roots.intervals[static_cast<std::size_t>(k - 1)], Rational(k)));
}

TEST_CASE("no real roots") {
    RootList roots = isolate_roots(rp({1, 0, 1}));
    CHECK(roots.size() == 0);
    CHECK(isolate_roots(rp({5})).size() == 0);
    CHECK_THROWS_AS(isolate_roots(RatPoly()), DomainError);
}

TEST_CASE("high-degree squarefree path") {
    // degree 70 > the decomposition limit: x^70 - 2
    std::vector<Rational> cs(71, Rational(0));
    cs[0] = -2;
    cs[70] = 1;
    RatPoly f{std::move(cs)};
    RootList roots = isolate_roots(f);
    REQUIRE(roots.size() == 2);
    RatInterval iv = refine(f, roots.intervals[1], Rational(1, 1000));
    // 2^(1/70) = 1.00995...
    CHECK(iv.lo > Rational(1009, 1000));
    CHECK(iv.hi < Rational(1011, 1000));
}

TEST_CASE("sturm counts with endpoint semantics") {
    RatPoly f = rp({-1, 0, 0, 1}); // x^3 - 1
    CHECK(sturm_count(f, RatInterval(Rational(1, 10), Rational(11, 10), IntervalKind::Open)) == 1);
    CHECK(sturm_count(f, RatInterval(Rational(-11, 10), Rational(-1, 10), IntervalKind::Open)) == 0);
    CHECK(sturm_count(f, RatInterval(Rational(0), Rational(1), IntervalKind::Open)) == 0);
    CHECK(sturm_count(f, RatInterval(Rational(0), Rational(1), IntervalKind::Closed)) == 1);
    CHECK(sturm_count(f, RatInterval(Rational(0), Rational(1), IntervalKind::HalfOpenHi)) == 0);
    CHECK(sturm_count(f, RatInterval(Rational(1), Rational(2), IntervalKind::HalfOpenLo)) == 0);
    CHECK(sturm_count(f, RatInterval::point(Rational(1))) == 1);
    CHECK(sturm_count(f, RatInterval::point(Rational(2))) == 0);

    // multiplicities do not inflate the count
    RatPoly g = rp({-1, 1}) * rp({-1, 1}) * rp({3, 1});
    CHECK(sturm_count(g, RatInterval(Rational(-10), Rational(10))) == 2);
}

TEST_CASE("sturm count across many roots") {
    RatPoly f = RatPoly::constant(Rational(1));
    for (long k = 1; k <= 6; ++k) f = f * rp({-k, 1});
    CHECK(sturm_count(f, RatInterval(Rational(0), Rational(100))) == 6);
    CHECK(sturm_count(f, RatInterval(Rational(3, 2), Rational(9, 2))) == 3);
}

TEST_CASE("refine certifies and honors no-escape") {
    RatPoly f = rp({-2, 0, 1});
    RatInterval start(Rational(1), Rational(2), IntervalKind::Open);
    RatInterval iv = refine(f, start, Rational(1, 1024));
    CHECK(start.contains_interval(iv));
    CHECK(iv.width() <= Rational(1, 1024));

    // interval holding two roots is rejected
    CHECK_THROWS_AS(refine(rp({2, -3, 1}), RatInterval(Rational(0), Rational(3)), Rational(1, 4)),
                    CertificationError);
    // point interval that is not a root is rejected
    CHECK_THROWS_AS(refine(f, RatInterval::point(Rational(1)), Rational(1)), CertificationError);
    // exact root discovered mid-bisection collapses to a point
    RatPoly g = rp({-1, 0, 0, 1});
    RatInterval got = refine(g, RatInterval(Rational(0), Rational(2), IntervalKind::Open),
                             Rational(1, 1000000));
    CHECK(got.is_point());
    CHECK(got.lo == 1);
}

TEST_CASE("refine_until") {
    RatPoly f = rp({-2, 0, 1});
    RootList roots = isolate_roots(f, RootDomain::Positive);
    RatInterval iv = refine_until(f, roots.intervals[0], 128, [](const RatInterval& i) {
        return i.width() < Rational(1, 1000);
    });
    CHECK(iv.width() < Rational(1, 1000));
    CHECK_THROWS_AS(refine_until(f, roots.intervals[0], 2,
                                 [](const RatInterval&) { return false; }),
                    CertificationError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/models.hpp"
#include "core/semialg.hpp"

using namespace mono;

namespace {

RatPoly rp(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return RatPoly(std::move(v));
}

std::map<char, Rational> m2probe(const Rational& a, const Rational& b, const Rational& c,
                                 const Rational& d, const Rational& K) {
    return {{'a', a}, {'b', b}, {'c', c}, {'d', d}, {'K', K}};
}

} // namespace

TEST_CASE("hand-built systems") {
    // x^2 - 2 = 0
    SemiSystem s;
    s.equation = rp({-2, 0, 1});
    CHECK(count_solutions(s) == 2);

    s.positivity = true;
    CHECK(count_solutions(s) == 1); // sqrt(2) only

    s.positivity = false;
    s.constraints.emplace_back(rp({-1, 1}), Relation::Greater); // x > 1
    CHECK(count_solutions(s) == 1);

    s.constraints.clear();
    s.constraints.emplace_back(rp({-2, 0, 1}), Relation::NotEqual); // shares every root
    CHECK(count_solutions(s) == 0);

    // (x^2 - 2)(x - 1) = 0 with x != 1
    SemiSystem t;
    t.equation = rp({-2, 0, 1}) * rp({-1, 1});
    t.constraints.emplace_back(rp({-1, 1}), Relation::NotEqual);
    CHECK(count_solutions(t) == 2);

    // constant constraints decide the whole system
    SemiSystem u;
    u.equation = rp({-2, 0, 1});
    u.constraints.emplace_back(rp({-1}), Relation::Greater);
    CHECK(count_solutions(u) == 0);
    u.constraints.back() = {rp({5}), Relation::Greater};
    CHECK(count_solutions(u) == 2);

    SemiSystem z;
    z.equation = RatPoly();
    CHECK_THROWS_AS(count_solutions(z), DomainError);
}

TEST_CASE("random systems match a rational-root oracle") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 4), small(-5, 5);
    std::uniform_int_distribution<int> nroots(2, 5), nq(0, 3), qdeg(0, 3), coin(0, 1);

    for (int iter = 0; iter < 300; ++iter) {
        std::vector<Rational> roots;
        int want = nroots(rng);
        while (static_cast<int>(roots.size()) < want) {
            Rational r(num(rng), den(rng));
            r.canonicalize();
            bool dup = false;
            for (const auto& x : roots) dup = dup || x == r;
            if (!dup) roots.push_back(r);
        }
        RatPoly p = RatPoly::constant(Rational(1));
        for (const auto& r : roots) p = p * RatPoly(std::vector<Rational>{-r, Rational(1)});
        if (coin(rng)) p = p * rp({1, 0, 1}); // irreducible factor, no real roots

        SemiSystem s;
        s.equation = p;
        s.positivity = coin(rng) == 1;
        int m = nq(rng);
        for (int k = 0; k < m; ++k) {
            std::vector<Rational> cs;
            for (int i = 0; i <= qdeg(rng); ++i) cs.emplace_back(small(rng));
            s.constraints.emplace_back(RatPoly(std::move(cs)),
                                       coin(rng) ? Relation::Greater : Relation::NotEqual);
        }

        long expected = 0;
        for (const auto& r : roots) {
            bool ok = !s.positivity || sgn(r) > 0;
            for (const auto& [q, rel] : s.constraints) {
                if (!ok) break;
                Rational v = q.evaluate(r);
                ok = rel == Relation::Greater ? sgn(v) > 0 : sgn(v) != 0;
            }
            if (ok) ++expected;
        }
        CAPTURE(iter);
        CHECK(count_solutions(s) == expected);
    }
}

TEST_CASE("border polynomial of the first equilibrium system") {
    ParamSemiSystem sys = model1_equilibrium_system();
    BorderPoly bp = border_polynomial(sys);
    REQUIRE(bp.factors.size() == 4);

    ParamPoly e = ParamPoly::var('e'), f = ParamPoly::var('f');
    ParamPoly expected = e.pow(3) * (27 * (e.pow(2) * f.pow(3)) - ParamPoly(8));
    CHECK(ParamPoly::proportional(bp.product(), expected));

    CHECK(bp.vanishes_at({{'e', Rational(1)}, {'f', Rational(2, 3)}}));
    CHECK(!bp.vanishes_at({{'e', Rational(1)}, {'f', Rational(1, 2)}}));
}

TEST_CASE("border polynomial of the second equilibrium system") {
    ParamSemiSystem sys = model2_equilibrium_system();
    BorderPoly bp = border_polynomial(sys);
    REQUIRE(bp.factors.size() == 5);

    const StabilityConditionSet& r = model2_condition_polys();
    ParamPoly a = ParamPoly::var('a'), d = ParamPoly::var('d'), K = ParamPoly::var('K');
    ParamPoly expected = a * d.pow(4) * K.pow(14) * r.R1.pow(2) * r.R2;
    CHECK(ParamPoly::proportional(bp.product(), expected));
}

TEST_CASE("sample-point table of the second equilibrium system") {
    // (a, b, c, d, K), solution count, sign of R1, sign of R2
    struct Row {
        std::map<char, Rational> probe;
        long count;
        int s1, s2;
    };
    const Rational one(1);
    std::vector<Row> rows = {
        {m2probe(one, one, {1, 4}, {1, 64}, {1, 2}), 2, -1, -1},
        {m2probe(one, one, {1, 4}, {1, 64}, one), 1, -1, +1},
        {m2probe(one, one, {1, 4}, {1, 64}, 2), 0, -1, -1},
        {m2probe(one, one, {1, 4}, {19, 1024}, one), 2, -1, -1},
        {m2probe(one, one, {1, 4}, {19, 1024}, 2), 1, -1, +1},
        {m2probe(one, one, {1, 4}, {19, 1024}, 3), 0, -1, -1},
        {m2probe(one, one, {1, 4}, {1, 16}, one), 1, +1, -1},
        {m2probe(one, one, {1, 4}, {1, 16}, 2), 0, +1, +1},
        {m2probe(one, one, {1, 4}, one, {1, 2}), 1, +1, -1},
        {m2probe(one, one, {1, 4}, one, one), 0, +1, +1},
        {m2probe(one, one, {3, 8}, {1, 64}, {1, 8}), 1, +1, -1},
        {m2probe(one, one, {3, 8}, {1, 64}, one), 0, +1, +1},
        {m2probe(one, one, {3, 8}, {1, 32}, {1, 4}), 2, -1, -1},
        {m2probe(one, one, {3, 8}, {1, 32}, one), 1, -1, +1},
        {m2probe(one, one, {3, 8}, {1, 32}, 17), 0, -1, -1},
        {m2probe(one, one, {3, 8}, {49, 1024}, one), 2, -1, -1},
        {m2probe(one, one, {3, 8}, {49, 1024}, 4), 1, -1, +1},
        {m2probe(one, one, {3, 8}, {49, 1024}, 8), 0, -1, -1},
        // at (1,1,3/8,1/16): R1 = 25/512 > 0, which pins down the signs
        // for these two rows; the counts follow the R1/R2 sign rule
        {m2probe(one, one, {3, 8}, {1, 16}, one), 1, +1, -1},
        {m2probe(one, one, {3, 8}, {1, 16}, 3), 0, +1, +1},
        {m2probe(one, one, {3, 8}, one, {1, 2}), 1, +1, -1},
        {m2probe(one, one, {3, 8}, one, one), 0, +1, +1},
        {m2probe(one, one, {15, 32}, {1, 16}, {1, 2}), 1, +1, -1},
        {m2probe(one, one, {15, 32}, {1, 16}, one), 0, +1, +1},
        {m2probe(one, one, {15, 32}, {3, 32}, one), 1, +1, -1},
        {m2probe(one, one, {15, 32}, {3, 32}, 8), 0, +1, +1},
        {m2probe(one, one, {15, 32}, one, {1, 2}), 1, +1, -1},
        {m2probe(one, one, {15, 32}, one, one), 0, +1, +1},
        {m2probe(one, one, one, one, {1, 2}), 1, +1, -1},
        {m2probe(one, one, one, one, one), 0, +1, +1},
    };
    REQUIRE(rows.size() == 30);

    ParamSemiSystem sys = model2_equilibrium_system();
    const StabilityConditionSet& r = model2_condition_polys();
    std::vector<std::map<char, Rational>> probes;
    for (const auto& row : rows) probes.push_back(row.probe);

    SignReport rep = sign_conditions_report(sys, probes, {{"R1", r.R1}, {"R2", r.R2}});
    REQUIRE(rep.rows.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CAPTURE(i);
        CHECK(rep.rows[i].count == rows[i].count);
        REQUIRE(rep.rows[i].signs.size() == 2);
        CHECK(rep.rows[i].signs[0] == rows[i].s1);
        CHECK(rep.rows[i].signs[1] == rows[i].s2);
    }

    std::string csv = rep.to_csv();
    CHECK(csv.find("count,R1,R2") != std::string::npos);
}

TEST_CASE("degenerate probes are rejected") {
    ParamSemiSystem sys = model1_equilibrium_system();
    CHECK_THROWS_AS(
        sign_conditions_report(sys, {{{'e', Rational(1)}, {'f', Rational(2, 3)}}}, {}),
        DegenerateProbeError);
}

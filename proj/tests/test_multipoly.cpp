#include "dwitt/multipoly.hpp"
#include "dwitt/rng.hpp"

#include "doctest.h"

using namespace dwitt;

namespace {

ParamPoly random_parampoly(Rng& rng, std::size_t nvars, int max_terms, int max_exp) {
    ParamPoly p(nvars);
    const int terms = static_cast<int>(rng.range(1, max_terms));
    ParamPoly::Exps e(nvars);
    for (int t = 0; t < terms; ++t) {
        for (auto& x : e) x = static_cast<std::int32_t>(rng.range(0, max_exp));
        p.add_term(e, Int(rng.range(-6, 6)));
    }
    return p;
}

}  // namespace

TEST_CASE("parampoly arithmetic basics") {
    auto q = ParamPoly::variable(1, 0);
    auto one = ParamPoly::constant(1, 1);
    auto p = (one + q) * (one - q);
    ParamPoly expect(1);
    expect.add_term({0}, 1);
    expect.add_term({2}, -1);
    CHECK(p == expect);
    CHECK((p - p).is_zero());
    CHECK(q.pow(3).degree_in(0) == 3);
}

TEST_CASE("exact_div multiply-back on random pairs") {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t nvars = 1 + rng.below(2);
        ParamPoly a = random_parampoly(rng, nvars, 4, 4);
        ParamPoly b = random_parampoly(rng, nvars, 3, 3);
        if (b.is_zero()) continue;
        auto q = exact_div(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
}

TEST_CASE("exact_div rejects non-divisible input") {
    auto q = ParamPoly::variable(1, 0);
    auto one = ParamPoly::constant(1, 1);
    CHECK(!exact_div(one + q, q).has_value());
    CHECK(!exact_div(q, ParamPoly::constant(1, 2)).has_value());
}

TEST_CASE("gcd of univariate cyclotomic-style inputs") {
    auto q = ParamPoly::variable(1, 0);
    auto one = ParamPoly::constant(1, 1);
    // gcd(q^k - 1, q - 1) = q - 1
    for (unsigned k = 2; k <= 8; ++k) {
        auto g = poly_gcd(q.pow(k) - one, q - one);
        CHECK(g == q - one);
    }
}

TEST_CASE("gcd common-factor property on random triples") {
    Rng rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t nvars = 1 + rng.below(2);
        ParamPoly a = random_parampoly(rng, nvars, 3, 3);
        ParamPoly b = random_parampoly(rng, nvars, 3, 3);
        ParamPoly c = random_parampoly(rng, nvars, 2, 2);
        if (c.is_zero()) continue;
        const ParamPoly g = poly_gcd(a * c, b * c);
        if (g.is_zero()) continue;
        // c divides gcd(ac, bc), and the gcd divides both products
        CHECK(exact_div(g, poly_gcd(c, c)).has_value());
        if (!a.is_zero()) CHECK(exact_div(a * c, g).has_value());
        if (!b.is_zero()) CHECK(exact_div(b * c, g).has_value());
        CHECK(exact_div(g, c).has_value());
    }
}

TEST_CASE("gcd sign and content normalization") {
    auto q = ParamPoly::variable(2, 0);
    auto r = ParamPoly::variable(2, 1);
    auto p1 = multiply_by_int(q * r, -6);
    auto p2 = multiply_by_int(q, 4);
    auto g = poly_gcd(p1, p2);
    ParamPoly expect(2);
    expect.add_term({1, 0}, 2);
    CHECK(g == expect);
}

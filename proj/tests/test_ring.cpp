#include "dwitt/ring.hpp"
#include "dwitt/sampling.hpp"

#include "doctest.h"

using namespace dwitt;

namespace {

struct Fixtures {
    FieldPtr F = FieldDescriptor::rational_functions({"q"});
    RingPtr poly = RingDescriptor::make(F, {"t"}, {false});
    RingPtr laurent = RingDescriptor::make(F, {"t"}, {true});
    RingPtr multi = RingDescriptor::make(FieldDescriptor::rational_functions({"q1", "q2"}),
                                         {"x1", "x2"}, {true, true});
    Coefficient q = Coefficient::parameter(F, 0);
    Coefficient one = Coefficient::one(F);
};

}  // namespace

TEST_CASE("polynomial arithmetic") {
    Fixtures fx;
    auto t = RingElement::variable(fx.poly, 0);
    auto one = RingElement::one(fx.poly);
    CHECK((one + t) * (one - t) == one - t * t);

    auto tl = RingElement::variable(fx.laurent, 0);
    CHECK(RingElement::variable(fx.laurent, 0, -1) * tl == RingElement::one(fx.laurent));

    auto x1 = RingElement::variable(fx.multi, 0);
    auto x2 = RingElement::variable(fx.multi, 1);
    auto x1inv = RingElement::variable(fx.multi, 0, -1);
    CHECK((x1 + x2) * x1inv == RingElement::one(fx.multi) + x2 * x1inv);
}

TEST_CASE("exact division with confirmation") {
    Fixtures fx;
    // ((1 - q^2) t^2) / ((1 - q) t) = (1 + q) t
    auto a = RingElement::monomial(fx.poly, {2}, fx.one - fx.q * fx.q);
    auto b = RingElement::monomial(fx.poly, {1}, fx.one - fx.q);
    auto quo = exact_divide(a, b);
    REQUIRE(quo.has_value());
    CHECK(*quo == RingElement::monomial(fx.poly, {1}, fx.one + fx.q));
    CHECK(*quo * b == a);  // multiply back

    auto t = RingElement::variable(fx.poly, 0);
    CHECK(!exact_divide(RingElement::one(fx.poly) + t, t).has_value());

    auto tl = RingElement::variable(fx.laurent, 0);
    auto q2 = exact_divide(RingElement::one(fx.laurent) + tl, tl);
    REQUIRE(q2.has_value());
    CHECK(*q2 == RingElement::variable(fx.laurent, 0, -1) + RingElement::one(fx.laurent));

    CHECK_THROWS_AS(exact_divide(t, RingElement::zero(fx.poly)), DivisionByZero);
}

TEST_CASE("exact_divide(a*b, b) = a on random pairs") {
    Fixtures fx;
    Rng rng(5);
    SampleOptions opt;
    const std::vector<RingPtr> rings{fx.poly, fx.laurent, fx.multi};
    int done = 0;
    while (done < 300) {
        const RingPtr& ring = rings[done % rings.size()];
        RingElement a = random_element(rng, ring, opt);
        RingElement b = random_element(rng, ring, opt);
        if (b.is_zero()) continue;
        auto q = exact_divide(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
        ++done;
    }
}

TEST_CASE("gcd_normalized values") {
    Fixtures fx;
    auto a = RingElement::monomial(fx.poly, {1}, fx.one - fx.q);
    auto b = RingElement::monomial(fx.poly, {2}, fx.one - fx.q * fx.q);
    CHECK(gcd_normalized({a, b}) == RingElement::variable(fx.poly, 0));

    // t - qt is a unit in the Laurent ring
    auto tl = RingElement::variable(fx.laurent, 0);
    CHECK(gcd_normalized({tl - tl.scaled(fx.q)}) == RingElement::one(fx.laurent));

    // multivariate monomial inputs
    auto Fm = fx.multi->field();
    auto m1 = RingElement::monomial(fx.multi, {1, 0},
                                    Coefficient::one(Fm) - Coefficient::parameter(Fm, 0));
    auto m2 = RingElement::monomial(fx.multi, {0, 1},
                                    Coefficient::one(Fm) - Coefficient::parameter(Fm, 1));
    CHECK(gcd_normalized({m1, m2}) == RingElement::one(fx.multi));

    CHECK_THROWS_AS(gcd_normalized({RingElement::zero(fx.poly)}), AllZero);
    auto x1_plus_x2 = RingElement::variable(fx.multi, 0) + RingElement::variable(fx.multi, 1);
    CHECK_THROWS_AS(gcd_normalized({x1_plus_x2, x1_plus_x2}), UnsupportedMultivariateGcd);
}

TEST_CASE("gcd divides inputs and respects common factors") {
    Fixtures fx;
    Rng rng(9);
    SampleOptions opt;
    opt.max_terms = 3;
    opt.degree_cap = 4;
    for (int trial = 0; trial < 60; ++trial) {
        RingElement a = random_element(rng, fx.poly, opt);
        RingElement b = random_element(rng, fx.poly, opt);
        RingElement c = random_element(rng, fx.poly, opt);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        const RingElement g = gcd_normalized({a, b});
        CHECK(exact_divide(a, g).has_value());
        CHECK(exact_divide(b, g).has_value());
        // gcd(ac, bc) is an associate of gcd(a, b) * c
        const RingElement gc = gcd_normalized({a * c, b * c});
        const RingElement want = g * c;
        CHECK(exact_divide(gc, want).has_value());
        CHECK(exact_divide(want, gc).has_value());
    }
}

TEST_CASE("unit detection") {
    Fixtures fx;
    CHECK(RingElement::constant(fx.poly, Coefficient::from_rational(fx.F, Rat(2, 3))).is_unit());
    CHECK(!RingElement::variable(fx.poly, 0).is_unit());
    CHECK(RingElement::variable(fx.laurent, 0).is_unit());
    auto tl = RingElement::variable(fx.laurent, 0);
    CHECK(!(RingElement::one(fx.laurent) + tl).is_unit());
    CHECK(!RingElement::zero(fx.poly).is_unit());
}

TEST_CASE("mixed rings are rejected") {
    Fixtures fx;
    CHECK_THROWS_AS(RingElement::one(fx.poly) + RingElement::one(fx.laurent), MixedRings);
}

TEST_CASE("monomial box enumeration") {
    Fixtures fx;
    auto box_poly = monomial_box(fx.poly, 3);
    CHECK(box_poly.size() == 4);  // 0..3
    auto box_laurent = monomial_box(fx.laurent, 3);
    CHECK(box_laurent.size() == 7);  // -3..3
    CHECK(box_laurent.front().first == 0);
    auto box_multi = monomial_box(fx.multi, 2);
    CHECK(box_multi.size() == 25);
    // shells are nondecreasing
    for (std::size_t i = 1; i < box_multi.size(); ++i)
        CHECK(box_multi[i - 1].first <= box_multi[i].first);
}

#include "dwitt/endo.hpp"
#include "dwitt/sampling.hpp"

#include "doctest.h"

using namespace dwitt;

TEST_CASE("substitution on generator images") {
    auto F = FieldDescriptor::rational_functions({"q"});
    auto R = RingDescriptor::make(F, {"t"}, {false});
    auto q = Coefficient::parameter(F, 0);
    auto sigma = Endomorphism::diagonal(R, {q});

    // sigma(t) = qt: t^3 + 1 -> q^3 t^3 + 1
    auto t3 = RingElement::variable(R, 0, 3);
    auto expect = RingElement::monomial(R, {3}, q.pow(3)) + RingElement::one(R);
    CHECK(sigma(t3 + RingElement::one(R)) == expect);

    // sigma(t) = q t^3 on the Laurent ring: t^-1 -> q^-1 t^-3
    auto RL = RingDescriptor::make(F, {"t"}, {true});
    auto cube = Endomorphism::from_images(RL, {RingElement::monomial(RL, {3}, q)});
    CHECK(cube(RingElement::variable(RL, 0, -1)) ==
          RingElement::monomial(RL, {-3}, q.inverse()));

    // shared eigenvalue q * q^-1 = 1
    auto F2 = FieldDescriptor::rational_functions({"q"});
    auto RM = RingDescriptor::make(F2, {"x1", "x2"}, {true, true});
    auto qq = Coefficient::parameter(F2, 0);
    auto diag = Endomorphism::diagonal(RM, {qq, qq});
    auto ratio = RingElement::monomial(RM, {1, -1}, Coefficient::one(F2));
    CHECK(diag(ratio) == ratio);
    CHECK(fixed_by_sigma(diag, ratio));
}

TEST_CASE("homomorphism laws on random pairs") {
    auto F = FieldDescriptor::rational_functions({"q"});
    auto R = RingDescriptor::make(F, {"t"}, {true});
    auto sigma = Endomorphism::from_images(
        R, {RingElement::monomial(R, {3}, Coefficient::parameter(F, 0))});
    Rng rng(31);
    SampleOptions opt;
    for (int trial = 0; trial < 60; ++trial) {
        const RingElement a = random_element(rng, R, opt);
        const RingElement b = random_element(rng, R, opt);
        CHECK(sigma(a + b) == sigma(a) + sigma(b));
        CHECK(sigma(a * b) == sigma(a) * sigma(b));
    }
    CHECK(sigma(RingElement::one(R)) == RingElement::one(R));
}

TEST_CASE("epimorphism decision") {
    auto F = FieldDescriptor::rational_functions({"q"});
    auto q = Coefficient::parameter(F, 0);

    auto Rp = RingDescriptor::make(F, {"t"}, {false});
    CHECK(is_epimorphism(Endomorphism::diagonal(Rp, {q})).verdict == TriState::Yes);
    CHECK(is_epimorphism(Endomorphism::identity(Rp)).verdict == TriState::Yes);

    auto RL = RingDescriptor::make(F, {"t"}, {true});
    auto cube = Endomorphism::from_images(RL, {RingElement::monomial(RL, {3}, q)});
    auto epi = is_epimorphism(cube);
    CHECK(epi.verdict == TriState::No);
    REQUIRE(epi.witness.has_value());
    CHECK(*epi.witness == RingElement::variable(RL, 0));

    // unimodular exponent matrix on two Laurent variables: swap
    auto RM = RingDescriptor::make(F, {"x1", "x2"}, {true, true});
    auto swap = Endomorphism::from_images(
        RM, {RingElement::monomial(RM, {0, 1}, q), RingElement::variable(RM, 0)});
    auto sw = is_epimorphism(swap);
    CHECK(sw.verdict == TriState::Yes);
}

TEST_CASE("epimorphism preimages round-trip on a unimodular Laurent map") {
    auto F = FieldDescriptor::rational_functions({"q"});
    auto RM = RingDescriptor::make(F, {"x1", "x2"}, {true, true});
    auto q = Coefficient::parameter(F, 0);
    // sigma(x1) = q x1 x2, sigma(x2) = x2: determinant 1
    auto sigma = Endomorphism::from_images(
        RM, {RingElement::monomial(RM, {1, 1}, q), RingElement::variable(RM, 1)});
    REQUIRE(is_epimorphism(sigma).verdict == TriState::Yes);
    // explicit preimages: x1 = sigma(q^-1 x1 x2^-1), x2 = sigma(x2)
    auto pre1 = RingElement::monomial(RM, {1, -1}, q.inverse());
    CHECK(sigma(pre1) == RingElement::variable(RM, 0));
    CHECK(sigma(RingElement::variable(RM, 1)) == RingElement::variable(RM, 1));
}

TEST_CASE("monomorphism decision") {
    auto F = FieldDescriptor::rational_functions({"q"});
    auto q = Coefficient::parameter(F, 0);
    auto Rp = RingDescriptor::make(F, {"t"}, {false});
    CHECK(is_monomorphism(Endomorphism::diagonal(Rp, {q})).injective);

    auto RL = RingDescriptor::make(F, {"t"}, {true});
    CHECK(is_monomorphism(Endomorphism::from_images(RL, {RingElement::monomial(RL, {3}, q)}))
              .injective);

    // x1, x2 -> x1: kernel witness exists and maps to zero
    auto RM = RingDescriptor::make(F, {"x1", "x2"}, {false, false});
    auto collapse = Endomorphism::from_images(
        RM, {RingElement::variable(RM, 0), RingElement::variable(RM, 0)});
    auto mono = is_monomorphism(collapse);
    CHECK(!mono.injective);
    REQUIRE(mono.witness.has_value());
    CHECK(!mono.witness->is_zero());
    CHECK(collapse(*mono.witness).is_zero());
}

TEST_CASE("kernel witness on a collapsing Laurent map") {
    auto F = FieldDescriptor::rational_functions({"q"});
    auto RM = RingDescriptor::make(F, {"x1", "x2"}, {true, true});
    auto q = Coefficient::parameter(F, 0);
    const Coefficient one = Coefficient::one(F);
    // x1 -> q x1 x2, x2 -> x1 x2: exponent matrix is singular
    auto sigma = Endomorphism::from_images(RM, {RingElement::monomial(RM, {1, 1}, q),
                                                RingElement::monomial(RM, {1, 1}, one)});
    auto mono = is_monomorphism(sigma);
    CHECK(!mono.injective);
    REQUIRE(mono.witness.has_value());
    CHECK(!mono.witness->is_zero());
    CHECK(sigma(*mono.witness).is_zero());
    // and the map cannot be onto either
    auto epi = is_epimorphism(sigma);
    CHECK(epi.verdict == TriState::No);
    REQUIRE(epi.witness.has_value());
}

TEST_CASE("fixed elements form a subring") {
    auto F = FieldDescriptor::rational_functions({"q"});
    auto RM = RingDescriptor::make(F, {"x1", "x2"}, {true, true});
    auto q = Coefficient::parameter(F, 0);
    auto sigma = Endomorphism::diagonal(RM, {q, q});

    CHECK(fixed_by_sigma(sigma, RingElement::one(RM)));
    CHECK(!fixed_by_sigma(sigma, RingElement::variable(RM, 0)));

    // products and sums of fixed elements stay fixed
    auto u = RingElement::monomial(RM, {1, -1}, Coefficient::one(F));
    auto v = RingElement::monomial(RM, {2, -2}, Coefficient::from_int(F, 3));
    REQUIRE(fixed_by_sigma(sigma, u));
    REQUIRE(fixed_by_sigma(sigma, v));
    CHECK(fixed_by_sigma(sigma, u * v));
    CHECK(fixed_by_sigma(sigma, u + v));
}

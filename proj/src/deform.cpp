#include "dwitt/deform.hpp"

#include <cassert>

namespace dwitt {

ComputedG compute_g(const RingPtr& ring, const Endomorphism& sigma, int window) {
    StabilizationReport report;
    report.window = window;
    RingElement g = RingElement::zero(ring);
    bool have_g = false;
    for (const auto& [shell, exps] : monomial_box(ring, window)) {
        if (shell == 0) continue;  // (Id - sigma)(1) = 0
        const RingElement m =
            RingElement::monomial(ring, exps, Coefficient::one(ring->field()));
        const RingElement image = m - sigma(m);
        if (image.is_zero()) continue;
        ++report.samples;
        if (image.is_unit()) {
            report.unit_short_circuit = true;
            report.stabilized_shell = shell;
            report.stable_early = (window - shell) * 2 >= window;
            return {RingElement::one(ring), report};
        }
        RingElement next = have_g ? gcd_normalized({g, image}) : gcd_normalized({image});
        if (!have_g || next != g) report.stabilized_shell = shell;
        g = std::move(next);
        have_g = true;
    }
    if (!have_g) throw SigmaIsIdentityOnSample("compute_g over " + ring->name());
    report.stable_early = (window - report.stabilized_shell) * 2 >= window;
    return {std::move(g), report};
}

DeformedWittAlgebra DeformedWittAlgebra::make(RingPtr ring, Endomorphism sigma,
                                              std::optional<RingElement> g_override,
                                              int gcd_window, int validation_window) {
    if (sigma.is_identity())
        throw ConfigError("construction requires sigma != Id");
    ComputedG computed = compute_g(ring, sigma, gcd_window);

    DeformedWittAlgebra W(ring, std::move(sigma));
    W.gcd_report_ = computed.report;
    if (g_override) {
        if (!same_ring(g_override->ring(), ring)) throw MixedRings("g override");
        // associate check: two exact divisions
        const auto u1 = exact_divide(*g_override, computed.g);
        const auto u2 = exact_divide(computed.g, *g_override);
        if (!u1 || !u2)
            throw InvalidOverride("g override in " + ring->name());
        W.g_ = std::move(*g_override);
        W.provenance_ = GProvenance::PresetOverride;
    } else {
        W.g_ = std::move(computed.g);
        W.provenance_ = GProvenance::ComputedGcd;
    }

    // delta = sigma(g) / g must land in the ring
    const auto delta = exact_divide(W.sigma_(W.g_), W.g_);
    if (!delta) throw DeltaNotInRing("delta for g in " + ring->name());
    W.delta_ = std::move(*delta);

    // validated invariant: g divides (Id - sigma)(m) on the validation box
    if (!W.g_.is_unit()) {
        for (const auto& [shell, exps] : monomial_box(ring, validation_window)) {
            if (shell == 0) continue;
            const RingElement m =
                RingElement::monomial(ring, exps, Coefficient::one(ring->field()));
            const RingElement image = m - W.sigma_(m);
            if (image.is_zero()) continue;
            if (!exact_divide(image, W.g_))
                throw NotDivisible("g does not divide (Id - sigma) of a validation monomial; "
                                   "the gcd window is too small for " +
                                   ring->name());
        }
    }
    return W;
}

RingElement DeformedWittAlgebra::partial(const RingElement& a) const {
    if (!same_ring(a.ring(), ring_)) throw MixedRings("partial");
    auto q = exact_divide(a - sigma_(a), g_);
    if (!q)
        throw NotDivisible("partial: (Id - sigma)(a) escaped the validated g invariant; "
                           "enlarge the gcd window");
    return *q;
}

RingElement DeformedWittAlgebra::bracket(const RingElement& a, const RingElement& b) const {
    return sigma_(a) * partial(b) - sigma_(b) * partial(a);
}

RingElement DeformedWittAlgebra::sigma1(const RingElement& a) const {
    return sigma_(a) + delta_ * a;
}

RingElement DeformedWittAlgebra::leibniz_residual(const RingElement& a,
                                                  const RingElement& b) const {
    return partial(a * b) - partial(a) * b - sigma_(a) * partial(b);
}

RingElement DeformedWittAlgebra::twist_residual(const RingElement& a) const {
    return partial(sigma_(a)) - delta_ * sigma_(partial(a));
}

RingElement DeformedWittAlgebra::generalized_jacobi_residual(const RingElement& a,
                                                             const RingElement& b,
                                                             const RingElement& c) const {
    // [sigma(x), w] + delta [x, w] with partial(w) and sigma(w) shared
    auto twisted_pair = [&](const RingElement& x, const RingElement& w) {
        const RingElement dw = partial(w);
        const RingElement sw = sigma_(w);
        const RingElement sx = sigma_(x);
        return sigma_(sx) * dw - sw * partial(sx) + delta_ * (sx * dw - sw * partial(x));
    };
    return twisted_pair(a, bracket(b, c)) + twisted_pair(b, bracket(c, a)) +
           twisted_pair(c, bracket(a, b));
}

RingElement DeformedWittAlgebra::hom_jacobi_residual(const RingElement& a, const RingElement& b,
                                                     const RingElement& c) const {
    return bracket(sigma1(a), bracket(b, c)) + bracket(sigma1(b), bracket(c, a)) +
           bracket(sigma1(c), bracket(a, b));
}

SurjectivityResult is_partial_surjective(const DeformedWittAlgebra& W, int window) {
    const RingPtr& ring = W.ring();
    if (!W.sigma().is_diagonal())
        return {TriState::Unknown, std::nullopt, "sigma is not diagonal on monomials"};
    if (!W.g().is_monomial_scalar())
        return {TriState::Unknown, std::nullopt, "g is not coefficient * monomial"};

    const Exponents& e = W.g().terms().begin()->first;
    // widen the scan so finite eigenvalue orders (cyclotomic fields) are covered
    int scan = window;
    if (ring->field()->kind() == FieldKind::Cyclotomic) {
        long long e_norm = 0;
        for (auto k : e) e_norm = std::max<long long>(e_norm, k < 0 ? -k : k);
        for (std::size_t i = 0; i < ring->nvars(); ++i)
            if (auto ord = root_of_unity_order(W.sigma().scale(i)))
                scan = std::max<int>(scan, static_cast<int>(*ord + e_norm + 1));
    }

    const Coefficient one = Coefficient::one(ring->field());
    Exponents pre(ring->nvars());
    for (const auto& [shell, j] : monomial_box(ring, scan)) {
        bool valid = true;
        for (std::size_t i = 0; i < pre.size(); ++i) {
            pre[i] = j[i] + e[i];
            if (pre[i] < 0 && !ring->laurent(i)) valid = false;
        }
        if (!valid)
            return {TriState::No, RingElement::monomial(ring, j, one),
                    "no monomial preimage exists in the ring"};
        if (W.sigma().monomial_eigenvalue(pre) == one)
            return {TriState::No, RingElement::monomial(ring, j, one),
                    "the unique preimage candidate is annihilated (eigenvalue 1)"};
    }
    return {TriState::Yes, std::nullopt,
            "every monomial in the window has a monomial preimage; eigenvalues extend "
            "symbolically"};
}

std::optional<HomJacobiWitness> find_hom_jacobi_witness(const DeformedWittAlgebra& W,
                                                        int radius) {
    const RingPtr& ring = W.ring();
    const Coefficient one = Coefficient::one(ring->field());
    const auto box = monomial_box(ring, radius);
    for (const auto& [sa, ea] : box)
        for (const auto& [sb, eb] : box)
            for (const auto& [sc, ec] : box) {
                RingElement r = W.hom_jacobi_residual(RingElement::monomial(ring, ea, one),
                                                      RingElement::monomial(ring, eb, one),
                                                      RingElement::monomial(ring, ec, one));
                if (!r.is_zero()) return HomJacobiWitness{ea, eb, ec, std::move(r)};
            }
    return std::nullopt;
}

std::size_t hom_jacobi_search_space(const DeformedWittAlgebra& W, int radius) {
    const std::size_t n = monomial_box(W.ring(), radius).size();
    return n * n * n;
}

}  // namespace dwitt

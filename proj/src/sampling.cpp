#include "dwitt/sampling.hpp"

namespace dwitt {

Coefficient random_coefficient(Rng& rng, const FieldPtr& field, const SampleOptions& opt) {
    const long long num = rng.range(-9, 9);
    const long long den = rng.range(1, 4);
    Coefficient c = Coefficient::from_rational(field, Rat(num, den));
    if (!opt.parameter_coeffs || c.is_zero()) return c;
    if (field->kind() == FieldKind::RationalFunctions && rng.chance(1, 3)) {
        const std::size_t idx = rng.below(field->params().size());
        c = c * Coefficient::parameter(field, idx).pow(rng.range(1, 2));
    } else if (field->kind() == FieldKind::Cyclotomic && rng.chance(1, 3)) {
        c = c * Coefficient::zeta_power(field, rng.range(1, field->cyclotomic_order()));
    }
    return c;
}

RingElement random_element(Rng& rng, const RingPtr& ring, const SampleOptions& opt) {
    RingElement r = RingElement::zero(ring);
    const int terms = static_cast<int>(rng.range(1, opt.max_terms));
    const std::size_t n = ring->nvars();
    // keep the total degree magnitude within the cap across all variables
    const long long per_var = std::max<long long>(1, opt.degree_cap / static_cast<long long>(n));
    const long long half = per_var / 2 == 0 ? 1 : per_var / 2;
    Exponents e(n);
    for (int k = 0; k < terms; ++k) {
        for (std::size_t i = 0; i < n; ++i)
            e[i] = ring->laurent(i) ? rng.range(-half, half) : rng.range(0, per_var);
        r.add_term(e, random_coefficient(rng, ring->field(), opt));
    }
    return r;
}

RingElement random_nonzero_element(Rng& rng, const RingPtr& ring, const SampleOptions& opt) {
    for (;;) {
        RingElement r = random_element(rng, ring, opt);
        if (!r.is_zero()) return r;
    }
}

}  // namespace dwitt

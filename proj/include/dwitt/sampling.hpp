#pragma once

#include "dwitt/ring.hpp"
#include "dwitt/rng.hpp"

namespace dwitt {

struct SampleOptions {
    int max_terms = 5;
    long long degree_cap = 8;  // max total degree magnitude
    bool parameter_coeffs = true;  // sprinkle parameter / zeta factors into coefficients
};

Coefficient random_coefficient(Rng& rng, const FieldPtr& field, const SampleOptions& opt);
RingElement random_element(Rng& rng, const RingPtr& ring, const SampleOptions& opt);
RingElement random_nonzero_element(Rng& rng, const RingPtr& ring, const SampleOptions& opt);

}  // namespace dwitt

#pragma once

#include "dwitt/endo.hpp"

#include <optional>
#include <string>

namespace dwitt {

struct StabilizationReport {
    int stabilized_shell = 0;  // largest shell radius at which the running gcd changed
    int window = 0;
    bool stable_early = false;  // stabilized at least window/2 shells before the end
    bool unit_short_circuit = false;
    std::size_t samples = 0;  // nonzero images folded into the gcd
};

struct ComputedG {
    RingElement g;
    StabilizationReport report;
};

// Running gcd of (Id - sigma)(m) over all monomials m in the window box,
// shell by shell. Short-circuits to 1 as soon as an image is a unit.
ComputedG compute_g(const RingPtr& ring, const Endomorphism& sigma, int window);

enum class GProvenance { ComputedGcd, PresetOverride };

// The bundle (A, sigma, g, delta) with the derived operators. Immutable after
// construction; all operators are pure, so concurrent evaluation is safe.
class DeformedWittAlgebra {
  public:
    // g_override, when present, must be a unit multiple of the computed gcd.
    // Divisibility of (Id - sigma)(m) by g is validated on the monomial box of
    // radius validation_window; escapes later surface as loud NotDivisible.
    static DeformedWittAlgebra make(RingPtr ring, Endomorphism sigma,
                                    std::optional<RingElement> g_override, int gcd_window,
                                    int validation_window = 12);

    const RingPtr& ring() const { return ring_; }
    const Endomorphism& sigma() const { return sigma_; }
    const RingElement& g() const { return g_; }
    const RingElement& delta() const { return delta_; }
    GProvenance provenance() const { return provenance_; }
    const StabilizationReport& gcd_report() const { return gcd_report_; }

    // delta lies in the ground field iff it is constant in the ring variables
    bool delta_in_ground_field() const { return delta_.is_constant(); }

    // the sigma-derivation (Id - sigma)/g; throws NotDivisible when the
    // validated g-invariant is violated outside the validation window
    RingElement partial(const RingElement& a) const;

    // [a, b] = sigma(a) partial(b) - sigma(b) partial(a)
    RingElement bracket(const RingElement& a, const RingElement& b) const;

    // sigma_1(a) = sigma(a) + delta * a
    RingElement sigma1(const RingElement& a) const;

    // partial(ab) - partial(a) b - sigma(a) partial(b); contract: zero
    RingElement leibniz_residual(const RingElement& a, const RingElement& b) const;
    // partial(sigma(a)) - delta * sigma(partial(a)); contract: zero
    RingElement twist_residual(const RingElement& a) const;
    // delta-twisted Jacobi sum; contract: zero for every valid algebra
    RingElement generalized_jacobi_residual(const RingElement& a, const RingElement& b,
                                            const RingElement& c) const;
    // Hom-Jacobi sum with sigma_1; zero whenever delta is constant
    RingElement hom_jacobi_residual(const RingElement& a, const RingElement& b,
                                    const RingElement& c) const;

  private:
    DeformedWittAlgebra(RingPtr ring, Endomorphism sigma)
        : ring_(std::move(ring)), sigma_(std::move(sigma)), g_(RingElement::zero(ring_)),
          delta_(RingElement::zero(ring_)) {}
    RingPtr ring_;
    Endomorphism sigma_;
    RingElement g_;
    RingElement delta_;
    GProvenance provenance_ = GProvenance::ComputedGcd;
    StabilizationReport gcd_report_;
};

struct SurjectivityResult {
    TriState verdict = TriState::Unknown;
    std::optional<RingElement> witness;  // a monomial with no preimage, when No
    std::string note;
};

// Image analysis of partial on monomials. Decidable when sigma is diagonal
// and g is coefficient * monomial: partial maps x^k to a scalar multiple of
// x^(k - e), injectively on exponents, so span coverage reduces to eigenvalue
// checks. Exact within the window; the window is widened to cover finite
// eigenvalue orders over cyclotomic fields.
SurjectivityResult is_partial_surjective(const DeformedWittAlgebra& W, int window);

struct HomJacobiWitness {
    Exponents a, b, c;
    RingElement residual;
};

// Scans monomial triples with exponents in [-radius, radius] for a nonzero
// Hom-Jacobi residual, in deterministic order. The residual is in fact
// identically zero for every algebra of this construction (the sigma_1 twist
// always yields a Hom-Lie algebra), so the search reports absence.
std::optional<HomJacobiWitness> find_hom_jacobi_witness(const DeformedWittAlgebra& W,
                                                        int radius);

// Number of monomial triples a bounded witness search visits.
std::size_t hom_jacobi_search_space(const DeformedWittAlgebra& W, int radius);

}  // namespace dwitt

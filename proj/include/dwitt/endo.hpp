#pragma once

#include "dwitt/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dwitt {

enum class TriState { Yes, No, Unknown };

// Algebra endomorphism given by generator images, restricted to the
// monomial-scalar shape sigma(x_i) = c_i * monomial with c_i != 0.
class Endomorphism {
  public:
    static Endomorphism identity(RingPtr ring);
    // diagonal sigma(x_i) = c_i x_i
    static Endomorphism diagonal(RingPtr ring, std::vector<Coefficient> scales);
    // general monomial-scalar images, validated against the type invariants
    static Endomorphism from_images(RingPtr ring, const std::vector<RingElement>& images);

    const RingPtr& ring() const { return ring_; }
    RingElement image_of_var(std::size_t i) const;
    const Coefficient& scale(std::size_t i) const { return scale_[i]; }
    const Exponents& image_exponents(std::size_t i) const { return expo_[i]; }

    bool is_identity() const;
    // every image is c_i x_i
    bool is_diagonal() const;
    // eigenvalue of the monomial x^k under a diagonal endomorphism
    Coefficient monomial_eigenvalue(const Exponents& k) const;

    RingElement operator()(const RingElement& a) const;

  private:
    Endomorphism(RingPtr ring) : ring_(std::move(ring)) {}
    RingPtr ring_;
    std::vector<Coefficient> scale_;
    std::vector<Exponents> expo_;
};

struct EpiResult {
    TriState verdict;
    std::optional<RingElement> witness;  // a generator outside the image, when No
    std::string detail;
};
EpiResult is_epimorphism(const Endomorphism& sigma);

struct MonoResult {
    bool injective;
    std::optional<RingElement> witness;  // a nonzero kernel element, when not
};
MonoResult is_monomorphism(const Endomorphism& sigma);

bool fixed_by_sigma(const Endomorphism& sigma, const RingElement& a);

}  // namespace dwitt

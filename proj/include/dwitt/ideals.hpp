#pragma once

#include "dwitt/presets.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dwitt {

// Principal ideal (p), generator kept in canonical associate form: Laurent
// variables shifted to lowest exponent 0, then scaled monic.
struct PrincipalIdeal {
    RingElement generator;
    bool proper() const { return !generator.is_unit(); }
};

PrincipalIdeal make_principal(const RingElement& generator);

// Outcome of the stability criterion p | partial(p), with either the exact
// quotient or a concrete failing multiplier.
struct StabilityCertificate {
    bool stable = false;
    std::optional<RingElement> quotient;  // partial(p)/p when stable
    struct Counterexample {
        RingElement multiplier;  // monomial m with p not dividing partial(p m)
        RingElement image;       // partial(p m)
    };
    std::optional<Counterexample> counterexample;
    std::string justification;
};

StabilityCertificate is_partial_stable(const DeformedWittAlgebra& W, const PrincipalIdeal& I);

// Independent oracle: tests divisibility of partial(p m) by p directly for
// every monomial m in the window box.
struct BruteForceResult {
    bool stable = true;
    std::size_t checked = 0;
    std::vector<std::pair<Exponents, bool>> log;
};

BruteForceResult brute_force_stability(const DeformedWittAlgebra& W, const PrincipalIdeal& I,
                                       int multiplier_window);

// Vandermonde monomial extraction: expresses each term of p as an explicit
// combination of sigma^0(p), ..., sigma^(r-1)(p).
struct ExtractionRow {
    RingElement term;                      // a_i * m_i
    std::vector<Coefficient> combination;  // row of the inverse Vandermonde
};

struct Extraction {
    bool singular = false;
    std::vector<ExtractionRow> rows;                    // when !singular
    std::optional<std::pair<std::size_t, std::size_t>> coinciding;  // term indices, when singular
    std::optional<Coefficient> shared_eigenvalue;
};

Extraction extract_monomials(const DeformedWittAlgebra& W, const RingElement& p);

enum class Verdict { Simple, NotSimple, Inconclusive };

std::string verdict_name(Verdict v);

struct EvidenceItem {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> fields;
};

struct HypothesisReport {
    EpiResult epimorphism{TriState::Unknown, std::nullopt, ""};
    SurjectivityResult partial_surjective;
    bool delta_in_field = false;
    // divergences between computed hypothesis checks and the family's
    // expected narrative, reported verbatim, never reinterpreted
    std::vector<std::string> divergences;
};

struct SimplicityVerdict {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<PrincipalIdeal> witness;
    std::optional<StabilityCertificate> witness_certificate;
    std::optional<BruteForceResult> witness_brute_force;
    HypothesisReport hypotheses;
    std::vector<EvidenceItem> evidence;
    std::uint64_t seed = 0;
    Windows windows;
};

struct DecisionOptions {
    std::uint64_t seed = 1;
    Windows windows;
    int vandermonde_samples = 10;
};

SimplicityVerdict decide_simplicity(const FamilyDescriptor& family, const DecisionOptions& opt);

// Bounded probe of bracket-ideal closure: the span of the generators is
// closed under v -> [m, v] for window monomials m, truncated to the window;
// saturation means the closure contains every window monomial.
struct SaturationResult {
    bool saturates = false;
    std::vector<std::size_t> basis_growth;  // dimension after each pass
    std::size_t window_monomials = 0;
    std::size_t dropped_terms = 0;  // bracket terms truncated away at the box edge
};

SaturationResult bracket_ideal_saturates(const DeformedWittAlgebra& W,
                                         const std::vector<RingElement>& generators, int window);

}  // namespace dwitt

#pragma once

#include "dwitt/field.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dwitt {

class RingDescriptor;
using RingPtr = std::shared_ptr<const RingDescriptor>;

// The ambient (Laurent) polynomial ring over an exact ground field.
class RingDescriptor {
  public:
    static RingPtr make(FieldPtr field, std::vector<std::string> vars, std::vector<bool> laurent);

    const FieldPtr& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    bool laurent(std::size_t var) const { return laurent_[var]; }
    const std::vector<bool>& laurent_flags() const { return laurent_; }
    std::size_t nvars() const { return vars_.size(); }
    bool all_laurent() const;
    std::string name() const;

    friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
        return same_field(a.field_, b.field_) && a.vars_ == b.vars_ && a.laurent_ == b.laurent_;
    }

  private:
    RingDescriptor() = default;
    FieldPtr field_;
    std::vector<std::string> vars_;
    std::vector<bool> laurent_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

using Exponents = std::vector<std::int64_t>;

struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        return graded_lex_cmp(a, b) < 0;
    }
};

// Sparse element: finite map from exponent vectors to nonzero coefficients,
// kept in graded-lex order. Zero has an empty term map.
class RingElement {
  public:
    using Terms = std::map<Exponents, Coefficient, GradedLexLess>;

    static RingElement zero(RingPtr ring);
    static RingElement one(RingPtr ring);
    static RingElement constant(RingPtr ring, Coefficient c);
    static RingElement monomial(RingPtr ring, Exponents e, Coefficient c);
    static RingElement variable(RingPtr ring, std::size_t index, std::int64_t power = 1);

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Exponents& e, const Coefficient& c);

    // single term whose monomial involves only Laurent variables
    bool is_unit() const;
    bool is_monomial_scalar() const { return terms_.size() == 1; }
    // constant in the ring variables (zero exponent vector or zero element)
    bool is_constant() const;
    std::optional<Coefficient> constant_coefficient() const;

    const std::pair<const Exponents, Coefficient>& leading() const { return *terms_.rbegin(); }
    long long max_total_degree() const;  // -1 on zero
    std::int64_t min_exponent(std::size_t var) const;
    std::int64_t max_exponent(std::size_t var) const;

    RingElement operator-() const;
    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend bool operator==(const RingElement& a, const RingElement& b);
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

    RingElement scaled(const Coefficient& c) const;
    // multiply by the monomial x^delta; asserts domain validity
    RingElement shifted(const Exponents& delta) const;

  private:
    explicit RingElement(RingPtr ring) : ring_(std::move(ring)) {}
    RingPtr ring_;
    Terms terms_;
};

// Exact quotient a / b, or nullopt when b does not divide a in the ring.
// For Laurent variables divisibility is up to monomial units. Throws
// DivisionByZero when b = 0.
std::optional<RingElement> exact_divide(const RingElement& a, const RingElement& b);

// Canonical-associate gcd of a nonempty list; see module contract for the
// supported multivariate shapes.
RingElement gcd_normalized(const std::vector<RingElement>& elems);

// All exponent vectors with entries in [-radius, radius] (Laurent variables)
// or [0, radius] (polynomial variables), grouped shell by shell in max-norm,
// lexicographically ordered within a shell. Deterministic enumeration order.
std::vector<std::pair<int, Exponents>> monomial_box(const RingPtr& ring, int radius);

}  // namespace dwitt

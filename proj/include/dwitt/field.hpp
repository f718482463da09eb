#pragma once

#include "dwitt/errors.hpp"
#include "dwitt/multipoly.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dwitt {

enum class FieldKind { Rationals, RationalFunctions, Cyclotomic };

// n-th cyclotomic polynomial, ascending integer coefficients, monic.
std::vector<Int> cyclotomic_polynomial(unsigned n);

class FieldDescriptor;
using FieldPtr = std::shared_ptr<const FieldDescriptor>;

// Describes the exact ground field: Q, Q(q1,...,qm), or Q[q]/Phi_n(q).
class FieldDescriptor {
  public:
    static FieldPtr rationals();
    static FieldPtr rational_functions(std::vector<std::string> params);
    static FieldPtr cyclotomic(unsigned n);

    FieldKind kind() const { return kind_; }
    const std::vector<std::string>& params() const { return params_; }
    unsigned cyclotomic_order() const { return cyclo_n_; }
    const std::vector<Int>& modulus() const { return modulus_; }
    std::size_t extension_degree() const { return modulus_.empty() ? 0 : modulus_.size() - 1; }
    std::string name() const;

    friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
        return a.kind_ == b.kind_ && a.params_ == b.params_ && a.cyclo_n_ == b.cyclo_n_;
    }

  private:
    FieldDescriptor() = default;
    FieldKind kind_ = FieldKind::Rationals;
    std::vector<std::string> params_;
    unsigned cyclo_n_ = 0;
    std::vector<Int> modulus_;  // Phi_n, for Cyclotomic
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

// Element of the ground field in canonical reduced form. Immutable in spirit:
// every operation returns a fresh value, so sharing across threads is safe.
class Coefficient {
  public:
    Coefficient() : Coefficient(zero(FieldDescriptor::rationals())) {}

    static Coefficient zero(FieldPtr f);
    static Coefficient one(FieldPtr f);
    static Coefficient from_int(FieldPtr f, long long v);
    static Coefficient from_rational(FieldPtr f, Rat r);
    // the parameter q_index as a field element (RationalFunctions only)
    static Coefficient parameter(FieldPtr f, std::size_t index);
    // zeta_n^j (Cyclotomic only)
    static Coefficient zeta_power(FieldPtr f, long long j);

    const FieldPtr& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    // payload accessors (valid for the matching field kind)
    const Rat& rational() const { return rat_; }
    const ParamPoly& numerator() const { return num_; }
    const ParamPoly& denominator() const { return den_; }
    const std::vector<Rat>& cyclotomic_coeffs() const { return cyc_; }

    std::optional<Rat> as_rational_constant() const;

    Coefficient operator-() const;
    Coefficient inverse() const;
    Coefficient pow(long long e) const;

    friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator/(const Coefficient& a, const Coefficient& b);
    friend bool operator==(const Coefficient& a, const Coefficient& b);
    friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

    // sign of the first atom in canonical print order; drives "a - b" layout
    bool display_negative() const;

  private:
    explicit Coefficient(FieldPtr f) : field_(std::move(f)) {}
    void reduce_fraction();

    FieldPtr field_;
    Rat rat_;             // Rationals
    ParamPoly num_, den_;  // RationalFunctions, reduced, den lex-leading > 0
    std::vector<Rat> cyc_;  // Cyclotomic, ascending, trailing zeros trimmed
};

// Multiplicative order of c when finite. Throws ZeroInput on c = 0.
std::optional<unsigned> root_of_unity_order(const Coefficient& c);

}  // namespace dwitt

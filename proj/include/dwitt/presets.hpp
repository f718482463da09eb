#pragma once

#include "dwitt/deform.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dwitt {

// How a deformation parameter is specified: a fresh/shared symbol, an exact
// rational, or a root of unity zeta(n)^j.
struct QSpec {
    enum class Kind { Symbolic, Rational, ZetaPower };
    Kind kind = Kind::Symbolic;
    std::string symbol = "q";
    Rat value;
    unsigned zeta_n = 0;
    long long zeta_pow = 1;

    static QSpec symbolic(std::string name);
    static QSpec rational(Rat v);
    static QSpec zeta(unsigned n, long long pow = 1);
    std::string to_string() const;
};

enum class FamilyKind { QwittPoly, QwittLaurent, PowerTwist, MultiLaurent };

std::string family_name(FamilyKind k);
std::optional<FamilyKind> family_from_name(const std::string& name);

struct FamilyDescriptor {
    FamilyKind kind = FamilyKind::QwittPoly;
    QSpec q;                       // qwitt_poly, qwitt_laurent, power_twist
    long long laurent_power = 1;   // k in qwitt_laurent (g = t^k)
    long long twist_exponent = 3;  // s in power_twist (s not in {0, 1, 2})
    std::vector<QSpec> qs;         // multi_laurent parameters q_1..q_n
};

struct Windows {
    int gcd_window = 8;
    int validation_window = 12;
    int multiplier_window = 10;
    int dependence_bound = 8;
    int jacobi_samples = 100;
    int surjectivity_window = 12;
};

// Ring, endomorphism, and the family's literal g for one instance.
struct FamilySetup {
    FamilyDescriptor family;
    RingPtr ring;
    Endomorphism sigma;
    RingElement preset_g;
    std::vector<Coefficient> q_values;  // one per parameter spec
};

FamilySetup family_setup(const FamilyDescriptor& fam);

void validate_windows(const Windows& w);

// Builds the validated algebra with the preset g (times an optional extra
// unit factor) as the override.
DeformedWittAlgebra build_family_algebra(const FamilySetup& setup, const Windows& windows,
                                         const std::optional<RingElement>& extra_unit = {});

}  // namespace dwitt

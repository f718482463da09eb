#include "dwitt/presets.hpp"

#include <algorithm>
#include <set>

namespace dwitt {

QSpec QSpec::symbolic(std::string name) {
    QSpec s;
    s.kind = Kind::Symbolic;
    s.symbol = std::move(name);
    return s;
}

QSpec QSpec::rational(Rat v) {
    QSpec s;
    s.kind = Kind::Rational;
    s.value = std::move(v);
    return s;
}

QSpec QSpec::zeta(unsigned n, long long pow) {
    QSpec s;
    s.kind = Kind::ZetaPower;
    s.zeta_n = n;
    s.zeta_pow = pow;
    return s;
}

std::string QSpec::to_string() const {
    switch (kind) {
        case Kind::Symbolic:
            return symbol;
        case Kind::Rational: {
            const Int num = boost::multiprecision::numerator(value);
            const Int den = boost::multiprecision::denominator(value);
            return den == 1 ? num.str() : num.str() + "/" + den.str();
        }
        case Kind::ZetaPower:
            return zeta_pow == 1 ? "zeta(" + std::to_string(zeta_n) + ")"
                                 : "zeta(" + std::to_string(zeta_n) + ")^" +
                                       std::to_string(zeta_pow);
    }
    return "?";
}

std::string family_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::QwittPoly:
            return "qwitt_poly";
        case FamilyKind::QwittLaurent:
            return "qwitt_laurent";
        case FamilyKind::PowerTwist:
            return "power_twist";
        case FamilyKind::MultiLaurent:
            return "multi_laurent";
    }
    return "?";
}

std::optional<FamilyKind> family_from_name(const std::string& name) {
    if (name == "qwitt_poly") return FamilyKind::QwittPoly;
    if (name == "qwitt_laurent") return FamilyKind::QwittLaurent;
    if (name == "power_twist") return FamilyKind::PowerTwist;
    if (name == "multi_laurent") return FamilyKind::MultiLaurent;
    return std::nullopt;
}

namespace {

// ground field housing every parameter spec, plus the coefficient values
struct FieldAndValues {
    FieldPtr field;
    std::vector<Coefficient> values;
};

FieldAndValues resolve_field(const std::vector<QSpec>& specs) {
    bool any_zeta = false;
    unsigned zeta_n = 0;
    std::vector<std::string> symbols;
    for (const auto& s : specs) {
        switch (s.kind) {
            case QSpec::Kind::Symbolic:
                if (std::find(symbols.begin(), symbols.end(), s.symbol) == symbols.end())
                    symbols.push_back(s.symbol);
                break;
            case QSpec::Kind::ZetaPower:
                if (any_zeta && zeta_n != s.zeta_n)
                    throw ConfigError("all zeta parameters must share one cyclotomic order");
                any_zeta = true;
                zeta_n = s.zeta_n;
                break;
            case QSpec::Kind::Rational:
                if (s.value == 0) throw ConfigError("parameter value must be nonzero");
                break;
        }
    }
    if (any_zeta && !symbols.empty())
        throw ConfigError("mixing symbolic and zeta parameters is not supported");

    FieldPtr field;
    if (any_zeta)
        field = FieldDescriptor::cyclotomic(zeta_n);
    else if (!symbols.empty())
        field = FieldDescriptor::rational_functions(symbols);
    else
        field = FieldDescriptor::rationals();

    std::vector<Coefficient> values;
    for (const auto& s : specs) {
        switch (s.kind) {
            case QSpec::Kind::Symbolic: {
                const auto& params = field->params();
                const std::size_t idx = static_cast<std::size_t>(
                    std::find(params.begin(), params.end(), s.symbol) - params.begin());
                values.push_back(Coefficient::parameter(field, idx));
                break;
            }
            case QSpec::Kind::Rational:
                values.push_back(Coefficient::from_rational(field, s.value));
                break;
            case QSpec::Kind::ZetaPower:
                values.push_back(Coefficient::zeta_power(field, s.zeta_pow));
                break;
        }
    }
    return {std::move(field), std::move(values)};
}

}  // namespace

FamilySetup family_setup(const FamilyDescriptor& fam) {
    switch (fam.kind) {
        case FamilyKind::QwittPoly:
        case FamilyKind::QwittLaurent:
        case FamilyKind::PowerTwist: {
            auto fv = resolve_field({fam.q});
            const Coefficient& q = fv.values[0];
            if (q.is_zero()) throw ConfigError("q must be nonzero");
            const bool laurent = fam.kind != FamilyKind::QwittPoly;
            RingPtr ring = RingDescriptor::make(fv.field, {"t"}, {laurent});
            const Coefficient one = Coefficient::one(fv.field);
            if (fam.kind == FamilyKind::PowerTwist) {
                const long long s = fam.twist_exponent;
                if (s == 0 || s == 1 || s == 2)
                    throw ConfigError("power_twist requires s not in {0, 1, 2}");
                Endomorphism sigma =
                    Endomorphism::from_images(ring, {RingElement::monomial(ring, {s}, q)});
                // g = 1 - q t^(s-1) for s > 2, g = 1 - q^-1 t^(1-s) for s < 0
                RingElement g =
                    s > 2 ? RingElement::one(ring) - RingElement::monomial(ring, {s - 1}, q)
                          : RingElement::one(ring) -
                                RingElement::monomial(ring, {1 - s}, q.inverse());
                return {fam, ring, std::move(sigma), std::move(g), std::move(fv.values)};
            }
            if (q.is_one()) throw ConfigError("q = 1 makes sigma the identity");
            Endomorphism sigma = Endomorphism::diagonal(ring, {q});
            RingElement g =
                fam.kind == FamilyKind::QwittPoly
                    ? RingElement::monomial(ring, {1}, one - q)  // g = t - qt
                    : RingElement::monomial(ring, {fam.laurent_power}, one);  // g = t^k
            return {fam, ring, std::move(sigma), std::move(g), std::move(fv.values)};
        }
        case FamilyKind::MultiLaurent: {
            if (fam.qs.empty()) throw ConfigError("multi_laurent needs at least one parameter");
            auto fv = resolve_field(fam.qs);
            const std::size_t n = fam.qs.size();
            std::vector<std::string> vars;
            for (std::size_t i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i + 1));
            RingPtr ring =
                RingDescriptor::make(fv.field, std::move(vars), std::vector<bool>(n, true));
            for (const auto& v : fv.values)
                if (v.is_zero()) throw ConfigError("every q_i must be nonzero");
            bool all_one = true;
            for (const auto& v : fv.values) all_one = all_one && v.is_one();
            if (all_one) throw ConfigError("all q_i = 1 makes sigma the identity");
            Endomorphism sigma = Endomorphism::diagonal(ring, fv.values);
            return {fam, ring, std::move(sigma), RingElement::one(ring), std::move(fv.values)};
        }
    }
    throw UnsupportedFamily("unknown family kind");
}

void validate_windows(const Windows& w) {
    if (w.gcd_window < 1 || w.validation_window < 1 || w.multiplier_window < 1 ||
        w.dependence_bound < 1 || w.jacobi_samples < 1 || w.surjectivity_window < 1)
        throw ConfigError("every window must be positive");
}

DeformedWittAlgebra build_family_algebra(const FamilySetup& setup, const Windows& windows,
                                         const std::optional<RingElement>& extra_unit) {
    validate_windows(windows);
    RingElement g = setup.preset_g;
    if (extra_unit) {
        if (!extra_unit->is_unit())
            throw ConfigError("g override factor must be a unit of the ring");
        g = g * *extra_unit;
    }
    return DeformedWittAlgebra::make(setup.ring, setup.sigma, g, windows.gcd_window,
                                     windows.validation_window);
}

}  // namespace dwitt

#include "dwitt/format.hpp"

namespace dwitt {

namespace {

std::string rat_text(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

std::string power_text(const std::string& name, std::int64_t e) {
    if (e == 1) return name;
    return name + "^" + std::to_string(e);
}

// one ParamPoly term, unsigned magnitude part; sign handled by the joiner
std::string parampoly_term_text(const ParamPoly::Exps& e, const Int& coeff,
                                const std::vector<std::string>& names) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += power_text(names[i], e[i]);
    }
    const Int a = boost::multiprecision::abs(coeff);
    if (mono.empty()) return a.str();
    if (a == 1) return mono;
    return a.str() + "*" + mono;
}

std::string parampoly_text(const ParamPoly& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += parampoly_term_text(e, c, names);
    }
    return out;
}

bool parampoly_multiterm(const ParamPoly& p) { return p.terms().size() > 1; }

// a denominator can stand bare after '/' only when it is one parse factor
bool parampoly_single_factor(const ParamPoly& p) {
    if (p.is_constant()) return true;
    if (p.terms().size() != 1) return false;
    const auto& [e, c] = *p.terms().begin();
    if (c != 1) return false;
    int used = 0;
    for (auto k : e)
        if (k != 0) ++used;
    return used == 1;
}

std::string cyc_text(const std::vector<Rat>& v, unsigned n) {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        const Rat a = v[i] < 0 ? Rat(-v[i]) : v[i];
        if (first) {
            if (v[i] < 0) out += "-";
            first = false;
        } else {
            out += v[i] < 0 ? " - " : " + ";
        }
        std::string atom;
        if (i == 0) {
            atom = rat_text(a);
        } else {
            const std::string z = power_text("zeta(" + std::to_string(n) + ")",
                                             static_cast<std::int64_t>(i));
            atom = a == 1 ? z : rat_text(a) + "*" + z;
        }
        out += atom;
    }
    return out.empty() ? "0" : out;
}

bool coefficient_multiterm(const Coefficient& c) {
    switch (c.field()->kind()) {
        case FieldKind::Rationals:
            return false;
        case FieldKind::RationalFunctions:
            return c.denominator().is_constant() && c.denominator().constant_value() == 1 &&
                   parampoly_multiterm(c.numerator());
        case FieldKind::Cyclotomic: {
            std::size_t nonzero = 0;
            for (const auto& x : c.cyclotomic_coeffs())
                if (x != 0) ++nonzero;
            return nonzero > 1;
        }
    }
    return false;
}

}  // namespace

std::string format_coefficient(const Coefficient& c) {
    switch (c.field()->kind()) {
        case FieldKind::Rationals:
            return rat_text(c.rational());
        case FieldKind::RationalFunctions: {
            const auto& names = c.field()->params();
            const ParamPoly& num = c.numerator();
            const ParamPoly& den = c.denominator();
            if (den.is_constant() && den.constant_value() == 1)
                return parampoly_text(num, names);
            const std::string num_txt = parampoly_multiterm(num)
                                            ? "(" + parampoly_text(num, names) + ")"
                                            : parampoly_text(num, names);
            const std::string den_txt = parampoly_single_factor(den)
                                            ? parampoly_text(den, names)
                                            : "(" + parampoly_text(den, names) + ")";
            return num_txt + "/" + den_txt;
        }
        case FieldKind::Cyclotomic:
            return cyc_text(c.cyclotomic_coeffs(), c.field()->cyclotomic_order());
    }
    return "?";
}

std::string format_element(const RingElement& a) {
    if (a.is_zero()) return "0";
    const auto& vars = a.ring()->vars();
    std::string out;
    bool first = true;
    for (const auto& [e, c] : a.terms()) {
        const bool neg = c.display_negative();
        const Coefficient mag = neg ? -c : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += power_text(vars[i], e[i]);
        }
        if (mono.empty()) {
            // a subtracted multi-term constant needs parens to distribute the sign
            const std::string ct = format_coefficient(mag);
            out += neg && coefficient_multiterm(mag) ? "(" + ct + ")" : ct;
        } else if (mag.is_one()) {
            out += mono;
        } else {
            const std::string ct = format_coefficient(mag);
            out += (coefficient_multiterm(mag) ? "(" + ct + ")" : ct) + "*" + mono;
        }
    }
    return out;
}

}  // namespace dwitt

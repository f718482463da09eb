#include "dwitt/multipoly.hpp"

#include <cassert>
#include <stdexcept>

namespace dwitt {

ParamPoly ParamPoly::constant(std::size_t nvars, Int c) {
    ParamPoly p(nvars);
    if (c != 0) p.terms_.emplace(Exps(nvars, 0), std::move(c));
    return p;
}

ParamPoly ParamPoly::variable(std::size_t nvars, std::size_t index, std::int32_t power) {
    assert(index < nvars && power >= 0);
    ParamPoly p(nvars);
    if (power == 0) return constant(nvars, 1);
    Exps e(nvars, 0);
    e[index] = power;
    p.terms_.emplace(std::move(e), Int(1));
    return p;
}

bool ParamPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (auto e : terms_.begin()->first)
        if (e != 0) return false;
    return true;
}

Int ParamPoly::constant_value() const {
    if (terms_.empty()) return Int(0);
    assert(is_constant());
    return terms_.begin()->second;
}

void ParamPoly::add_term(const Exps& e, const Int& c) {
    assert(e.size() == nvars_);
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

long long ParamPoly::total_degree() const {
    if (terms_.empty()) return -1;
    long long d = 0;
    for (auto e : terms_.rbegin()->first) d += e;
    return d;
}

std::int32_t ParamPoly::degree_in(std::size_t var) const {
    std::int32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

int ParamPoly::max_var() const {
    int mv = -1;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) mv = std::max(mv, static_cast<int>(i));
    return mv;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
    assert(a.nvars_ == b.nvars_);
    ParamPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) {
    assert(a.nvars_ == b.nvars_);
    ParamPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    assert(a.nvars_ == b.nvars_);
    ParamPoly r(a.nvars_);
    ParamPoly::Exps e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

ParamPoly ParamPoly::pow(unsigned e) const {
    ParamPoly r = constant(nvars_, 1);
    ParamPoly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

Int int_content(const ParamPoly& p) {
    Int g = 0;
    for (const auto& [e, c] : p.terms()) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

ParamPoly divide_by_int(const ParamPoly& p, const Int& c) {
    assert(c != 0);
    ParamPoly r(p.nvars());
    for (const auto& [e, coef] : p.terms()) {
        assert(coef % c == 0);
        r.add_term(e, coef / c);
    }
    return r;
}

ParamPoly multiply_by_int(const ParamPoly& p, const Int& c) {
    ParamPoly r(p.nvars());
    if (c == 0) return r;
    for (const auto& [e, coef] : p.terms()) r.add_term(e, coef * c);
    return r;
}

std::optional<ParamPoly> exact_div(const ParamPoly& a, const ParamPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("exact_div: division by zero polynomial");
    ParamPoly q(a.nvars());
    ParamPoly r = a;
    const auto& [eb, cb] = b.leading();
    ParamPoly::Exps qe(a.nvars());
    while (!r.is_zero()) {
        const auto& [er, cr] = r.leading();
        // leading monomial of b must divide that of r, with exact integer quotient
        for (std::size_t i = 0; i < qe.size(); ++i) {
            qe[i] = er[i] - eb[i];
            if (qe[i] < 0) return std::nullopt;
        }
        if (cr % cb != 0) return std::nullopt;
        ParamPoly t(a.nvars());
        t.add_term(qe, cr / cb);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

namespace {

// coefficients of p viewed as univariate in `var`, each with var's exponent zeroed
std::map<std::int32_t, ParamPoly> coeffs_in(const ParamPoly& p, std::size_t var) {
    std::map<std::int32_t, ParamPoly> out;
    for (const auto& [e, c] : p.terms()) {
        ParamPoly::Exps rest = e;
        std::int32_t d = rest[var];
        rest[var] = 0;
        auto [it, inserted] = out.try_emplace(d, ParamPoly(p.nvars()));
        it->second.add_term(rest, c);
    }
    return out;
}

ParamPoly shift_in(const ParamPoly& p, std::size_t var, std::int32_t k) {
    ParamPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        ParamPoly::Exps s = e;
        s[var] += k;
        r.add_term(s, c);
    }
    return r;
}

// content of p w.r.t. var: gcd of the univariate-view coefficients
ParamPoly content_in(const ParamPoly& p, std::size_t var) {
    ParamPoly g(p.nvars());
    for (const auto& [d, cp] : coeffs_in(p, var)) g = poly_gcd(g, cp);
    return g;
}

// pseudo-remainder of a by b w.r.t. var (sign/scale irrelevant: callers take
// the primitive part afterwards)
ParamPoly pseudo_rem(ParamPoly a, const ParamPoly& b, std::size_t var) {
    const std::int32_t db = b.degree_in(var);
    auto bc = coeffs_in(b, var);
    const ParamPoly lb = bc.rbegin()->second;
    while (!a.is_zero()) {
        const std::int32_t da = a.degree_in(var);
        if (da < db) break;
        auto ac = coeffs_in(a, var);
        const ParamPoly la = ac.rbegin()->second;
        a = lb * a - shift_in(la * b, var, da - db);
    }
    return a;
}

ParamPoly normalize_sign(ParamPoly p) {
    if (!p.is_zero() && p.leading().second < 0) return -p;
    return p;
}

// gcd of nonzero integer-primitive polynomials (result primitive up to sign)
ParamPoly primitive_gcd(ParamPoly a, ParamPoly b) {
    const int v_ = std::max(a.max_var(), b.max_var());
    if (v_ < 0) return ParamPoly::constant(a.nvars(), 1);
    const auto v = static_cast<std::size_t>(v_);

    const ParamPoly ca = content_in(a, v);
    const ParamPoly cb = content_in(b, v);
    const ParamPoly gamma = poly_gcd(ca, cb);
    a = *exact_div(a, ca);
    b = *exact_div(b, cb);

    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    while (!b.is_zero()) {
        ParamPoly r = pseudo_rem(a, b, v);
        a = std::move(b);
        if (!r.is_zero()) {
            const ParamPoly cr = content_in(r, v);
            r = *exact_div(r, cr);
        }
        b = std::move(r);
    }
    return gamma * a;
}

}  // namespace

namespace {

// gcd with a single term needs no remainder sequence
ParamPoly single_term_gcd(const ParamPoly& mono, const ParamPoly& p) {
    const auto& [e, c] = *mono.terms().begin();
    ParamPoly::Exps g = e;
    for (const auto& [ep, cp] : p.terms())
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], ep[i]);
    ParamPoly r(mono.nvars());
    r.add_term(g, boost::multiprecision::gcd(boost::multiprecision::abs(c), int_content(p)));
    return r;
}

}  // namespace

ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);
    // gcd with a constant reduces to integer contents
    if (a.is_constant() || b.is_constant())
        return ParamPoly::constant(
            a.nvars(), boost::multiprecision::gcd(int_content(a), int_content(b)));
    if (a.terms().size() == 1) return single_term_gcd(a, b);
    if (b.terms().size() == 1) return single_term_gcd(b, a);
    const Int ca = int_content(a);
    const Int cb = int_content(b);
    const Int c = boost::multiprecision::gcd(ca, cb);
    const ParamPoly g = primitive_gcd(divide_by_int(a, ca), divide_by_int(b, cb));
    return normalize_sign(multiply_by_int(g, c));
}

}  // namespace dwitt

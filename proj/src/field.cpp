#include "dwitt/field.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace dwitt {

namespace {

// dense Z[x] helpers for cyclotomic polynomial construction (ascending coeffs)

std::vector<Int> dense_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// exact quotient of monic division over Z
std::vector<Int> dense_div_exact(std::vector<Int> a, const std::vector<Int>& b) {
    assert(!b.empty() && b.back() == 1);
    if (a.size() < b.size()) {
        assert(std::all_of(a.begin(), a.end(), [](const Int& c) { return c == 0; }));
        return {};
    }
    std::vector<Int> q(a.size() - b.size() + 1, Int(0));
    for (std::size_t i = q.size(); i-- > 0;) {
        Int c = a[i + b.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
    }
    assert(std::all_of(a.begin(), a.end(), [](const Int& c) { return c == 0; }));
    return q;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(unsigned n) {
    assert(n >= 1);
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Int> xn_minus_1(n + 1, Int(0));
    xn_minus_1[0] = -1;
    xn_minus_1[n] = 1;
    std::vector<Int> divisor_product{Int(1)};
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) divisor_product = dense_mul(divisor_product, cyclotomic_polynomial(d));
    return dense_div_exact(std::move(xn_minus_1), divisor_product);
}

FieldPtr FieldDescriptor::rationals() {
    static const FieldPtr instance = [] {
        auto f = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
        f->kind_ = FieldKind::Rationals;
        return f;
    }();
    return instance;
}

FieldPtr FieldDescriptor::rational_functions(std::vector<std::string> params) {
    if (params.empty()) throw ConfigError("rational-function field needs at least one parameter");
    std::set<std::string> seen;
    for (const auto& p : params) {
        if (p.empty()) throw ConfigError("empty parameter name");
        if (!seen.insert(p).second) throw ConfigError("duplicate parameter name '" + p + "'");
    }
    auto f = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    f->kind_ = FieldKind::RationalFunctions;
    f->params_ = std::move(params);
    return f;
}

FieldPtr FieldDescriptor::cyclotomic(unsigned n) {
    if (n < 1) throw ConfigError("cyclotomic order must be >= 1");
    auto f = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    f->kind_ = FieldKind::Cyclotomic;
    f->cyclo_n_ = n;
    f->modulus_ = cyclotomic_polynomial(n);
    return f;
}

std::string FieldDescriptor::name() const {
    switch (kind_) {
        case FieldKind::Rationals:
            return "QQ";
        case FieldKind::RationalFunctions: {
            std::string s = "QQ(";
            for (std::size_t i = 0; i < params_.size(); ++i) {
                if (i) s += ",";
                s += params_[i];
            }
            return s + ")";
        }
        case FieldKind::Cyclotomic:
            return "QQ(zeta_" + std::to_string(cyclo_n_) + ")";
    }
    return "?";
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a == b || (a && b && *a == *b);
}

namespace {

void require_same_field(const Coefficient& a, const Coefficient& b, const char* op) {
    if (!same_field(a.field(), b.field()))
        throw MixedFields(std::string(op) + " over " + a.field()->name() + " and " +
                          b.field()->name());
}

void trim(std::vector<Rat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// remainder of a modulo the monic integer modulus, over Q
std::vector<Rat> mod_reduce(std::vector<Rat> a, const std::vector<Int>& modulus) {
    const std::size_t deg = modulus.size() - 1;
    while (a.size() > deg) {
        const Rat lead = a.back();
        const std::size_t shift = a.size() - 1 - deg;
        if (lead != 0)
            for (std::size_t j = 0; j < deg; ++j) a[shift + j] -= lead * Rat(modulus[j]);
        a.pop_back();
        trim(a);
    }
    trim(a);
    return a;
}

std::vector<Rat> cyc_mul(const std::vector<Rat>& a, const std::vector<Rat>& b,
                         const std::vector<Int>& modulus) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return mod_reduce(std::move(r), modulus);
}

// extended Euclid in Q[x]: inverse of a modulo the (irreducible) modulus
std::vector<Rat> cyc_inverse(const std::vector<Rat>& a, const std::vector<Int>& modulus) {
    std::vector<Rat> r0(modulus.size());
    for (std::size_t i = 0; i < modulus.size(); ++i) r0[i] = Rat(modulus[i]);
    std::vector<Rat> r1 = a;
    std::vector<Rat> s0{}, s1{Rat(1)};
    while (!r1.empty()) {
        // divide r0 by r1
        std::vector<Rat> rem = r0;
        std::vector<Rat> q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, Rat(0));
        while (rem.size() >= r1.size()) {
            const Rat c = rem.back() / r1.back();
            const std::size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (std::size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= c * r1[j];
            trim(rem);
        }
        // s_next = s0 - q * s1
        std::vector<Rat> qs1;
        if (!q.empty() && !s1.empty()) {
            qs1.assign(q.size() + s1.size() - 1, Rat(0));
            for (std::size_t i = 0; i < q.size(); ++i)
                for (std::size_t j = 0; j < s1.size(); ++j) qs1[i + j] += q[i] * s1[j];
        }
        std::vector<Rat> s2(std::max(s0.size(), qs1.size()), Rat(0));
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd, a nonzero constant since the modulus is irreducible
    assert(r0.size() == 1);
    std::vector<Rat> inv = std::move(s0);
    for (auto& c : inv) c /= r0[0];
    return mod_reduce(std::move(inv), modulus);
}

}  // namespace

Coefficient Coefficient::zero(FieldPtr f) {
    Coefficient c(std::move(f));
    if (c.field_->kind() == FieldKind::RationalFunctions) {
        const std::size_t m = c.field_->params().size();
        c.num_ = ParamPoly(m);
        c.den_ = ParamPoly::constant(m, 1);
    }
    return c;
}

Coefficient Coefficient::one(FieldPtr f) { return from_int(std::move(f), 1); }

Coefficient Coefficient::from_int(FieldPtr f, long long v) {
    return from_rational(std::move(f), Rat(v));
}

Coefficient Coefficient::from_rational(FieldPtr f, Rat r) {
    Coefficient c = zero(std::move(f));
    switch (c.field_->kind()) {
        case FieldKind::Rationals:
            c.rat_ = std::move(r);
            break;
        case FieldKind::RationalFunctions: {
            const std::size_t m = c.field_->params().size();
            c.num_ = ParamPoly::constant(m, boost::multiprecision::numerator(r));
            c.den_ = ParamPoly::constant(m, boost::multiprecision::denominator(r));
            break;
        }
        case FieldKind::Cyclotomic:
            if (r != 0) c.cyc_ = {std::move(r)};
            break;
    }
    return c;
}

Coefficient Coefficient::parameter(FieldPtr f, std::size_t index) {
    if (f->kind() != FieldKind::RationalFunctions)
        throw ConfigError("parameter element requested over " + f->name());
    assert(index < f->params().size());
    Coefficient c = zero(std::move(f));
    c.num_ = ParamPoly::variable(c.field_->params().size(), index);
    return c;
}

Coefficient Coefficient::zeta_power(FieldPtr f, long long j) {
    if (f->kind() != FieldKind::Cyclotomic)
        throw ConfigError("zeta element requested over " + f->name());
    const long long n = f->cyclotomic_order();
    long long e = ((j % n) + n) % n;
    Coefficient c = zero(f);
    std::vector<Rat> v(static_cast<std::size_t>(e) + 1, Rat(0));
    v.back() = 1;
    c.cyc_ = mod_reduce(std::move(v), f->modulus());
    return c;
}

bool Coefficient::is_zero() const {
    switch (field_->kind()) {
        case FieldKind::Rationals:
            return rat_ == 0;
        case FieldKind::RationalFunctions:
            return num_.is_zero();
        case FieldKind::Cyclotomic:
            return cyc_.empty();
    }
    return false;
}

bool Coefficient::is_one() const {
    switch (field_->kind()) {
        case FieldKind::Rationals:
            return rat_ == 1;
        case FieldKind::RationalFunctions:
            return num_.is_constant() && den_.is_constant() &&
                   num_.constant_value() == den_.constant_value() && !num_.is_zero();
        case FieldKind::Cyclotomic:
            return cyc_.size() == 1 && cyc_[0] == 1;
    }
    return false;
}

std::optional<Rat> Coefficient::as_rational_constant() const {
    switch (field_->kind()) {
        case FieldKind::Rationals:
            return rat_;
        case FieldKind::RationalFunctions:
            if (num_.is_constant() && den_.is_constant())
                return Rat(num_.constant_value(), den_.constant_value());
            return std::nullopt;
        case FieldKind::Cyclotomic:
            if (cyc_.empty()) return Rat(0);
            if (cyc_.size() == 1) return cyc_[0];
            return std::nullopt;
    }
    return std::nullopt;
}

void Coefficient::reduce_fraction() {
    if (num_.is_zero()) {
        den_ = ParamPoly::constant(num_.nvars(), 1);
        return;
    }
    if (den_.is_constant() && den_.constant_value() == 1) return;
    const ParamPoly g = poly_gcd(num_, den_);
    num_ = *exact_div(num_, g);
    den_ = *exact_div(den_, g);
    if (den_.leading().second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Coefficient Coefficient::operator-() const {
    Coefficient r = *this;
    switch (field_->kind()) {
        case FieldKind::Rationals:
            r.rat_ = -r.rat_;
            break;
        case FieldKind::RationalFunctions:
            r.num_ = -r.num_;
            break;
        case FieldKind::Cyclotomic:
            for (auto& c : r.cyc_) c = -c;
            break;
    }
    return r;
}

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
    require_same_field(a, b, "add");
    Coefficient r = a;
    switch (a.field_->kind()) {
        case FieldKind::Rationals:
            r.rat_ += b.rat_;
            break;
        case FieldKind::RationalFunctions:
            if (a.den_ == b.den_) {
                r.num_ = a.num_ + b.num_;
            } else {
                r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
                r.den_ = a.den_ * b.den_;
            }
            r.reduce_fraction();
            break;
        case FieldKind::Cyclotomic: {
            std::vector<Rat> v(std::max(a.cyc_.size(), b.cyc_.size()), Rat(0));
            for (std::size_t i = 0; i < a.cyc_.size(); ++i) v[i] += a.cyc_[i];
            for (std::size_t i = 0; i < b.cyc_.size(); ++i) v[i] += b.cyc_[i];
            trim(v);
            r.cyc_ = std::move(v);
            break;
        }
    }
    return r;
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + (-b); }

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    require_same_field(a, b, "mul");
    Coefficient r = a;
    switch (a.field_->kind()) {
        case FieldKind::Rationals:
            r.rat_ *= b.rat_;
            break;
        case FieldKind::RationalFunctions: {
            const bool a_unit_den = a.den_.is_constant() && a.den_.constant_value() == 1;
            const bool b_unit_den = b.den_.is_constant() && b.den_.constant_value() == 1;
            if (a_unit_den && b_unit_den) {
                r.num_ = a.num_ * b.num_;
                break;
            }
            // cross-reduce to keep gcd inputs small
            const ParamPoly g1 = poly_gcd(a.num_, b.den_);
            const ParamPoly g2 = poly_gcd(b.num_, a.den_);
            r.num_ = *exact_div(a.num_, g1) * *exact_div(b.num_, g2);
            r.den_ = *exact_div(a.den_, g2) * *exact_div(b.den_, g1);
            if (r.num_.is_zero())
                r.den_ = ParamPoly::constant(r.num_.nvars(), 1);
            else if (r.den_.leading().second < 0) {
                r.num_ = -r.num_;
                r.den_ = -r.den_;
            }
            break;
        }
        case FieldKind::Cyclotomic:
            r.cyc_ = cyc_mul(a.cyc_, b.cyc_, a.field_->modulus());
            break;
    }
    return r;
}

Coefficient Coefficient::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + field_->name());
    Coefficient r = *this;
    switch (field_->kind()) {
        case FieldKind::Rationals:
            r.rat_ = 1 / rat_;
            break;
        case FieldKind::RationalFunctions:
            std::swap(r.num_, r.den_);
            if (r.den_.leading().second < 0) {
                r.num_ = -r.num_;
                r.den_ = -r.den_;
            }
            break;
        case FieldKind::Cyclotomic:
            r.cyc_ = cyc_inverse(cyc_, field_->modulus());
            break;
    }
    return r;
}

Coefficient operator/(const Coefficient& a, const Coefficient& b) {
    require_same_field(a, b, "div");
    if (b.is_zero()) throw DivisionByZero("coefficient division in " + a.field()->name());
    return a * b.inverse();
}

Coefficient Coefficient::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Coefficient r = one(field_);
    Coefficient base = *this;
    auto u = static_cast<unsigned long long>(e);
    while (u) {
        if (u & 1ull) r = r * base;
        base = base * base;
        u >>= 1ull;
    }
    return r;
}

bool operator==(const Coefficient& a, const Coefficient& b) {
    require_same_field(a, b, "compare");
    switch (a.field_->kind()) {
        case FieldKind::Rationals:
            return a.rat_ == b.rat_;
        case FieldKind::RationalFunctions:
            return a.num_ == b.num_ && a.den_ == b.den_;
        case FieldKind::Cyclotomic:
            return a.cyc_ == b.cyc_;
    }
    return false;
}

bool Coefficient::display_negative() const {
    switch (field_->kind()) {
        case FieldKind::Rationals:
            return rat_ < 0;
        case FieldKind::RationalFunctions:
            return !num_.is_zero() && num_.terms().begin()->second < 0;
        case FieldKind::Cyclotomic:
            for (const auto& c : cyc_)
                if (c != 0) return c < 0;
            return false;
    }
    return false;
}

std::optional<unsigned> root_of_unity_order(const Coefficient& c) {
    if (c.is_zero()) throw ZeroInput("root_of_unity_order");
    if (c.field()->kind() == FieldKind::Cyclotomic) {
        const unsigned n = c.field()->cyclotomic_order();
        const unsigned L = std::lcm(2u, n);
        const Coefficient unit = Coefficient::one(c.field());
        for (unsigned m = 1; m <= L; ++m)
            if (L % m == 0 && c.pow(m) == unit) return m;
        return std::nullopt;
    }
    // in QQ and QQ(q...) only the constants 1 and -1 have finite order
    if (auto r = c.as_rational_constant()) {
        if (*r == 1) return 1;
        if (*r == -1) return 2;
    }
    return std::nullopt;
}

}  // namespace dwitt

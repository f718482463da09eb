#include "dwitt/ring.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace dwitt {

RingPtr RingDescriptor::make(FieldPtr field, std::vector<std::string> vars,
                             std::vector<bool> laurent) {
    if (vars.empty()) throw ConfigError("ring needs at least one variable");
    if (vars.size() != laurent.size()) throw ConfigError("one laurent flag per variable required");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw ConfigError("empty variable name");
        if (!seen.insert(v).second) throw ConfigError("duplicate variable name '" + v + "'");
    }
    if (field->kind() == FieldKind::RationalFunctions)
        for (const auto& p : field->params())
            if (seen.count(p))
                throw ConfigError("variable '" + p + "' collides with a field parameter");
    auto r = std::shared_ptr<RingDescriptor>(new RingDescriptor());
    r->field_ = std::move(field);
    r->vars_ = std::move(vars);
    r->laurent_ = std::move(laurent);
    return r;
}

bool RingDescriptor::all_laurent() const {
    return std::all_of(laurent_.begin(), laurent_.end(), [](bool b) { return b; });
}

std::string RingDescriptor::name() const {
    std::string s = field_->name() + "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
        if (laurent_[i]) s += "^+-1";
    }
    return s + "]";
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

namespace {
void require_same_ring(const RingElement& a, const RingElement& b, const char* op) {
    if (!same_ring(a.ring(), b.ring()))
        throw MixedRings(std::string(op) + " over " + a.ring()->name() + " and " +
                         b.ring()->name());
}
}  // namespace

RingElement RingElement::zero(RingPtr ring) { return RingElement(std::move(ring)); }

RingElement RingElement::one(RingPtr ring) {
    return constant(ring, Coefficient::one(ring->field()));
}

RingElement RingElement::constant(RingPtr ring, Coefficient c) {
    RingElement r(ring);
    r.add_term(Exponents(ring->nvars(), 0), c);
    return r;
}

RingElement RingElement::monomial(RingPtr ring, Exponents e, Coefficient c) {
    RingElement r(ring);
    r.add_term(e, c);
    return r;
}

RingElement RingElement::variable(RingPtr ring, std::size_t index, std::int64_t power) {
    Exponents e(ring->nvars(), 0);
    e.at(index) = power;
    return monomial(ring, std::move(e), Coefficient::one(ring->field()));
}

void RingElement::add_term(const Exponents& e, const Coefficient& c) {
    assert(e.size() == ring_->nvars());
    assert(same_field(c.field(), ring_->field()));
    for (std::size_t i = 0; i < e.size(); ++i) assert(ring_->laurent(i) || e[i] >= 0);
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool RingElement::is_unit() const {
    if (terms_.size() != 1) return false;
    const Exponents& e = terms_.begin()->first;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0 && !ring_->laurent(i)) return false;
    return true;
}

bool RingElement::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::int64_t k) { return k == 0; });
}

std::optional<Coefficient> RingElement::constant_coefficient() const {
    if (!is_constant()) return std::nullopt;
    if (terms_.empty()) return Coefficient::zero(ring_->field());
    return terms_.begin()->second;
}

long long RingElement::max_total_degree() const {
    if (terms_.empty()) return -1;
    long long d = 0;
    for (auto e : terms_.rbegin()->first) d += e;
    return d;
}

std::int64_t RingElement::min_exponent(std::size_t var) const {
    std::int64_t m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[var] < m) m = e[var];
        first = false;
    }
    return m;
}

std::int64_t RingElement::max_exponent(std::size_t var) const {
    std::int64_t m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[var] > m) m = e[var];
        first = false;
    }
    return m;
}

RingElement RingElement::operator-() const {
    RingElement r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

RingElement operator+(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "add");
    RingElement r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

RingElement operator-(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "sub");
    RingElement r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(e, -c);
    return r;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "mul");
    RingElement r = RingElement::zero(a.ring());
    Exponents e(a.ring()->nvars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

bool operator==(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "compare");
    return a.terms_ == b.terms_;
}

RingElement RingElement::scaled(const Coefficient& c) const {
    RingElement r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
    return r;
}

RingElement RingElement::shifted(const Exponents& delta) const {
    assert(delta.size() == ring_->nvars());
    RingElement r(ring_);
    Exponents e(delta.size());
    for (const auto& [ea, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + delta[i];
        r.add_term(e, c);
    }
    return r;
}

std::optional<RingElement> exact_divide(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b, "exact_divide");
    if (b.is_zero()) throw DivisionByZero("exact_divide in " + a.ring()->name());
    if (a.is_zero()) return RingElement::zero(a.ring());

    const std::size_t n = a.ring()->nvars();

    // single-term divisor: divide term by term
    if (b.is_monomial_scalar()) {
        const auto& [eb, cb] = *b.terms().begin();
        RingElement q = RingElement::zero(a.ring());
        Exponents qe(n);
        for (const auto& [ea, ca] : a.terms()) {
            for (std::size_t i = 0; i < n; ++i) {
                qe[i] = ea[i] - eb[i];
                if (qe[i] < 0 && !a.ring()->laurent(i)) return std::nullopt;
            }
            q.add_term(qe, ca / cb);
        }
        return q;
    }

    // shift Laurent variables so both operands have min exponent 0; in that
    // normal form the quotient, when it exists, has nonnegative exponents too
    Exponents shift_a(n, 0), shift_b(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (a.ring()->laurent(i)) {
            shift_a[i] = -a.min_exponent(i);
            shift_b[i] = -b.min_exponent(i);
        }
    RingElement::Terms rem = a.shifted(shift_a).terms();
    const RingElement d = b.shifted(shift_b);
    RingElement q = RingElement::zero(a.ring());

    const auto& [eb, cb] = d.leading();
    Exponents qe(n), key(n);
    while (!rem.empty()) {
        const auto& [er, cr] = *rem.rbegin();
        for (std::size_t i = 0; i < n; ++i) {
            qe[i] = er[i] - eb[i];
            if (qe[i] < 0) return std::nullopt;
        }
        const Coefficient qc = cr / cb;
        q.add_term(qe, qc);
        // rem -= qc * x^qe * d, in place
        for (const auto& [ed, cd] : d.terms()) {
            for (std::size_t i = 0; i < n; ++i) key[i] = qe[i] + ed[i];
            auto it = rem.find(key);
            if (it == rem.end()) {
                rem.emplace(key, -(qc * cd));
            } else {
                it->second = it->second - qc * cd;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
    }
    Exponents back(n, 0);
    for (std::size_t i = 0; i < n; ++i) back[i] = shift_b[i] - shift_a[i];
    return q.shifted(back);
}

namespace {

// normalize a univariate element: Laurent shift to min exponent 0
RingElement laurent_normalized(const RingElement& e) {
    if (!e.ring()->laurent(0) || e.is_zero()) return e;
    Exponents d{-e.min_exponent(0)};
    return e.shifted(d);
}

// remainder of univariate a modulo b over the coefficient field
RingElement univ_mod(RingElement a, const RingElement& b) {
    const auto& [eb, cb] = b.leading();
    while (!a.is_zero() && a.leading().first[0] >= eb[0]) {
        const auto& [ea, ca] = a.leading();
        RingElement t = RingElement::monomial(a.ring(), Exponents{ea[0] - eb[0]}, ca / cb);
        a = a - t * b;
    }
    return a;
}

RingElement make_monic(const RingElement& e) {
    if (e.is_zero()) return e;
    return e.scaled(e.leading().second.inverse());
}

}  // namespace

RingElement gcd_normalized(const std::vector<RingElement>& elems) {
    if (elems.empty()) throw AllZero("gcd of empty list");
    const RingPtr ring = elems.front().ring();
    std::vector<RingElement> nonzero;
    for (const auto& e : elems) {
        require_same_ring(e, elems.front(), "gcd");
        if (!e.is_zero()) nonzero.push_back(e);
    }
    if (nonzero.empty()) throw AllZero("gcd");
    for (const auto& e : nonzero)
        if (e.is_unit()) return RingElement::one(ring);

    if (ring->nvars() == 1) {
        RingElement g = laurent_normalized(nonzero.front());
        for (std::size_t i = 1; i < nonzero.size(); ++i) {
            RingElement b = laurent_normalized(nonzero[i]);
            while (!b.is_zero()) {
                RingElement r = univ_mod(g, b);
                g = std::move(b);
                b = make_monic(r);
            }
            if (g.is_constant()) break;
        }
        return make_monic(g);
    }

    // multivariate: only scalar-monomial inputs are supported (units were
    // already handled above)
    for (const auto& e : nonzero)
        if (!e.is_monomial_scalar())
            throw UnsupportedMultivariateGcd("in " + ring->name());
    Exponents g(ring->nvars(), 0);
    bool first = true;
    for (const auto& e : nonzero) {
        const Exponents& m = e.terms().begin()->first;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (ring->laurent(i))
                g[i] = 0;  // Laurent factors are units
            else
                g[i] = first ? m[i] : std::min(g[i], m[i]);
        }
        first = false;
    }
    return RingElement::monomial(ring, g, Coefficient::one(ring->field()));
}

std::vector<std::pair<int, Exponents>> monomial_box(const RingPtr& ring, int radius) {
    const std::size_t n = ring->nvars();
    std::vector<std::pair<int, Exponents>> out;
    Exponents e(n, 0);
    auto shell_of = [](const Exponents& v) {
        std::int64_t m = 0;
        for (auto k : v) m = std::max(m, k < 0 ? -k : k);
        return static_cast<int>(m);
    };
    // enumerate the whole box lexicographically, then stable-partition by shell
    std::vector<Exponents> all;
    std::vector<std::size_t> idx(n, 0);
    std::vector<std::vector<std::int64_t>> domain(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::int64_t k = ring->laurent(i) ? -radius : 0; k <= radius; ++k)
            domain[i].push_back(k);
    while (true) {
        for (std::size_t i = 0; i < n; ++i) e[i] = domain[i][idx[i]];
        all.push_back(e);
        std::size_t i = n;
        while (i-- > 0) {
            if (++idx[i] < domain[i].size()) break;
            idx[i] = 0;
            if (i == 0) {
                for (int r = 0; r <= radius; ++r)
                    for (const auto& v : all)
                        if (shell_of(v) == r) out.emplace_back(r, v);
                return out;
            }
        }
    }
}

}  // namespace dwitt

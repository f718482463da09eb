#include "dwitt/endo.hpp"

#include <cassert>
#include <numeric>

namespace dwitt {

Endomorphism Endomorphism::identity(RingPtr ring) {
    Endomorphism s(ring);
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        s.scale_.push_back(Coefficient::one(ring->field()));
        Exponents e(ring->nvars(), 0);
        e[i] = 1;
        s.expo_.push_back(std::move(e));
    }
    return s;
}

Endomorphism Endomorphism::diagonal(RingPtr ring, std::vector<Coefficient> scales) {
    if (scales.size() != ring->nvars())
        throw ConfigError("diagonal endomorphism needs one scalar per variable");
    Endomorphism s = identity(ring);
    for (std::size_t i = 0; i < scales.size(); ++i) {
        if (scales[i].is_zero()) throw ConfigError("endomorphism image scalar must be nonzero");
        s.scale_[i] = std::move(scales[i]);
    }
    return s;
}

Endomorphism Endomorphism::from_images(RingPtr ring, const std::vector<RingElement>& images) {
    if (images.size() != ring->nvars())
        throw ConfigError("endomorphism needs one image per variable");
    Endomorphism s(ring);
    for (std::size_t i = 0; i < images.size(); ++i) {
        const RingElement& im = images[i];
        if (!same_ring(im.ring(), ring)) throw MixedRings("endomorphism image");
        if (!im.is_monomial_scalar())
            throw ConfigError("image of '" + ring->vars()[i] + "' must be coefficient * monomial");
        if (ring->laurent(i) && !im.is_unit())
            throw ConfigError("image of Laurent variable '" + ring->vars()[i] +
                              "' must be a unit");
        s.scale_.push_back(im.terms().begin()->second);
        s.expo_.push_back(im.terms().begin()->first);
    }
    return s;
}

RingElement Endomorphism::image_of_var(std::size_t i) const {
    return RingElement::monomial(ring_, expo_[i], scale_[i]);
}

bool Endomorphism::is_identity() const {
    if (!is_diagonal()) return false;
    for (const auto& c : scale_)
        if (!c.is_one()) return false;
    return true;
}

bool Endomorphism::is_diagonal() const {
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
        for (std::size_t j = 0; j < expo_[i].size(); ++j)
            if (expo_[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

Coefficient Endomorphism::monomial_eigenvalue(const Exponents& k) const {
    assert(is_diagonal());
    Coefficient r = Coefficient::one(ring_->field());
    for (std::size_t i = 0; i < k.size(); ++i)
        if (k[i] != 0) r = r * scale_[i].pow(k[i]);
    return r;
}

RingElement Endomorphism::operator()(const RingElement& a) const {
    if (!same_ring(a.ring(), ring_)) throw MixedRings("endo_apply");
    RingElement r = RingElement::zero(ring_);
    const std::size_t n = ring_->nvars();
    Exponents e(n);
    // scalar powers repeat across terms; cache them per call
    std::map<std::pair<std::size_t, std::int64_t>, Coefficient> powers;
    for (const auto& [k, c] : a.terms()) {
        Coefficient s = c;
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (k[i] == 0) continue;
            auto it = powers.find({i, k[i]});
            if (it == powers.end())
                it = powers.emplace(std::make_pair(i, k[i]), scale_[i].pow(k[i])).first;
            s = s * it->second;
            for (std::size_t j = 0; j < n; ++j) e[j] += k[i] * expo_[i][j];
        }
        r.add_term(e, s);
    }
    return r;
}

namespace {

// fraction-free Bareiss determinant
Int int_det(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return Int(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// solve M y = rhs over Q; nullopt when inconsistent
std::optional<std::vector<Rat>> solve_rational(std::vector<std::vector<Rat>> m,
                                               std::vector<Rat> rhs) {
    const std::size_t n = m.size();
    std::vector<std::size_t> piv_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && m[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(m[row], m[p]);
        std::swap(rhs[row], rhs[p]);
        const Rat d = m[row][col];
        for (std::size_t j = 0; j < n; ++j) m[row][j] /= d;
        rhs[row] /= d;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rat f = m[i][col];
            for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[row][j];
            rhs[i] -= f * rhs[row];
        }
        piv_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (rhs[i] != 0) return std::nullopt;
    std::vector<Rat> y(n, Rat(0));
    for (std::size_t i = 0; i < piv_col.size(); ++i) y[piv_col[i]] = rhs[i];
    return y;
}

// nonzero integer kernel vector of a singular square matrix
std::vector<Int> integer_kernel_vector(const std::vector<std::vector<Rat>>& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rat>> a = m;
    std::vector<long long> pivot_of_col(n, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(a[row], a[p]);
        const Rat d = a[row][col];
        for (std::size_t j = 0; j < n; ++j) a[row][j] /= d;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const Rat f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_of_col[col] = static_cast<long long>(row);
        ++row;
    }
    std::size_t free_col = 0;
    while (free_col < n && pivot_of_col[free_col] >= 0) ++free_col;
    assert(free_col < n);
    std::vector<Rat> v(n, Rat(0));
    v[free_col] = 1;
    for (std::size_t col = 0; col < n; ++col)
        if (pivot_of_col[col] >= 0)
            v[col] = -a[static_cast<std::size_t>(pivot_of_col[col])][free_col];
    Int lcm_den(1);
    for (const auto& x : v)
        lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(x));
    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = Int(v[i] * Rat(lcm_den));
    return out;
}

}  // namespace

EpiResult is_epimorphism(const Endomorphism& sigma) {
    const RingPtr& ring = sigma.ring();
    const std::size_t n = ring->nvars();

    if (sigma.is_diagonal())
        return {TriState::Yes, std::nullopt, "diagonal images with nonzero scalars"};

    if (ring->all_laurent()) {
        std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[j][i] = sigma.image_exponents(i)[j];
        const Int det = int_det(m);
        if (det == 1 || det == -1)
            return {TriState::Yes, std::nullopt, "exponent matrix unimodular"};
        std::vector<std::vector<Rat>> mr(n, std::vector<Rat>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) mr[i][j] = Rat(m[i][j]);
        for (std::size_t g = 0; g < n; ++g) {
            std::vector<Rat> e(n, Rat(0));
            e[g] = 1;
            auto y = solve_rational(mr, e);
            bool integral = y.has_value();
            if (y)
                for (const auto& x : *y)
                    if (boost::multiprecision::denominator(x) != 1) integral = false;
            if (!integral)
                return {TriState::No, RingElement::variable(ring, g),
                        "exponent lattice has index |det| = " + det.str()};
        }
        return {TriState::Yes, std::nullopt, "all generators in the exponent lattice"};
    }

    if (n == 1) {
        // univariate polynomial ring, non-diagonal image c*t^s with s != 1:
        // the image subalgebra F[c t^s] misses t
        return {TriState::No, RingElement::variable(ring, 0),
                "image subalgebra misses the generator"};
    }
    return {TriState::Unknown, std::nullopt, "unsupported image shape"};
}

MonoResult is_monomorphism(const Endomorphism& sigma) {
    const RingPtr& ring = sigma.ring();
    const std::size_t n = ring->nvars();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    std::vector<std::vector<Int>> mi(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            mi[j][i] = sigma.image_exponents(i)[j];
            m[j][i] = Rat(mi[j][i]);
        }
    if (int_det(mi) != 0) return {true, std::nullopt};

    // exponent map collapses a direction d; the matching two-term element
    // lies in the kernel
    const std::vector<Int> d = integer_kernel_vector(m);
    Exponents kp(n, 0), km(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const long long di = d[i].convert_to<long long>();
        if (di > 0)
            kp[i] = di;
        else
            km[i] = -di;
    }
    Coefficient sp = Coefficient::one(ring->field());
    Coefficient sm = Coefficient::one(ring->field());
    for (std::size_t i = 0; i < n; ++i) {
        if (kp[i] != 0) sp = sp * sigma.scale(i).pow(kp[i]);
        if (km[i] != 0) sm = sm * sigma.scale(i).pow(km[i]);
    }
    RingElement w = RingElement::monomial(ring, kp, sm) - RingElement::monomial(ring, km, sp);
    return {false, std::move(w)};
}

bool fixed_by_sigma(const Endomorphism& sigma, const RingElement& a) { return sigma(a) == a; }

}  // namespace dwitt

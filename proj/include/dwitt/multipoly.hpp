#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dwitt {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Graded-lex order on exponent tuples: total degree first, then leftmost
// differing entry. Used as the canonical term order everywhere.
template <class E>
int graded_lex_cmp(const std::vector<E>& a, const std::vector<E>& b) {
    long long da = 0, db = 0;
    for (E e : a) da += e;
    for (E e : b) db += e;
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

// Sparse multivariate polynomial over Z with nonnegative exponents.
// Backs the numerator/denominator of rational-function coefficients;
// variables are the field parameters, not the ring variables.
class ParamPoly {
  public:
    using Exps = std::vector<std::int32_t>;
    struct Less {
        bool operator()(const Exps& a, const Exps& b) const { return graded_lex_cmp(a, b) < 0; }
    };
    using Terms = std::map<Exps, Int, Less>;

    ParamPoly() : nvars_(0) {}
    explicit ParamPoly(std::size_t nvars) : nvars_(nvars) {}

    static ParamPoly constant(std::size_t nvars, Int c);
    static ParamPoly variable(std::size_t nvars, std::size_t index, std::int32_t power = 1);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // constant term as Int; zero polynomial reads as 0. Requires is_constant().
    Int constant_value() const;

    void add_term(const Exps& e, const Int& c);

    long long total_degree() const;  // -1 for zero
    std::int32_t degree_in(std::size_t var) const;
    // largest variable index actually appearing, or -1 if constant
    int max_var() const;

    // leading term under graded-lex
    const std::pair<const Exps, Int>& leading() const { return *terms_.rbegin(); }

    ParamPoly operator-() const;
    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    ParamPoly pow(unsigned e) const;

  private:
    std::size_t nvars_;
    Terms terms_;
};

// gcd of the integer coefficients, nonnegative; 0 for the zero polynomial.
Int int_content(const ParamPoly& p);

ParamPoly divide_by_int(const ParamPoly& p, const Int& c);
ParamPoly multiply_by_int(const ParamPoly& p, const Int& c);

// Exact quotient a / b over Z[params], or nullopt when b does not divide a.
std::optional<ParamPoly> exact_div(const ParamPoly& a, const ParamPoly& b);

// Full gcd over Z[params] (content included), normalized so the graded-lex
// leading coefficient is positive. gcd(0, 0) = 0.
ParamPoly poly_gcd(const ParamPoly& a, const ParamPoly& b);

}  // namespace dwitt

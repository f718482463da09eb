#include "dwitt/parse.hpp"

#include <algorithm>
#include <cctype>

namespace dwitt {

namespace {

class Parser {
  public:
    Parser(std::string_view src, RingPtr ring) : src_(src), ring_(std::move(ring)) {}

    RingElement run() {
        RingElement r = element();
        skip_ws();
        if (pos_ != src_.size()) throw SyntaxError(pos_, "end of input");
        return r;
    }

  private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) throw SyntaxError(pos_, what);
    }

    bool digit_ahead(std::size_t offset = 0) {
        std::size_t p = pos_ + offset;
        return p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]));
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (pos_ < src_.size() && src_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        if (!digit_ahead()) throw SyntaxError(pos_, "digits");
        std::string digits;
        while (digit_ahead()) digits += src_[pos_++];
        (void)start;
        Int v(digits);
        return neg ? -v : v;
    }

    long long small_integer(const char* what) {
        const Int v = integer();
        if (v > 1000000 || v < -1000000) throw SyntaxError(pos_, what);
        return v.convert_to<long long>();
    }

    std::string identifier() {
        skip_ws();
        if (pos_ >= src_.size() || !(std::isalpha(static_cast<unsigned char>(src_[pos_])) ||
                                     src_[pos_] == '_'))
            throw SyntaxError(pos_, "identifier");
        std::string name;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                      src_[pos_] == '_'))
            name += src_[pos_++];
        return name;
    }

    RingElement element() {
        bool neg = false;
        if (peek() == '-') {
            ++pos_;
            neg = true;
        } else if (peek() == '+') {
            ++pos_;
        }
        RingElement r = term();
        if (neg) r = -r;
        for (;;) {
            const char c = peek();
            if (c == '+') {
                ++pos_;
                r = r + term();
            } else if (c == '-') {
                ++pos_;
                r = r - term();
            } else {
                return r;
            }
        }
    }

    RingElement term() {
        RingElement r = factor();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                r = r * factor();
            } else if (c == '/') {
                const std::size_t at = pos_;
                ++pos_;
                RingElement d = factor();
                const auto cst = d.constant_coefficient();
                if (!cst)
                    throw SyntaxError(at, "a divisor constant in the ring variables");
                if (cst->is_zero()) throw SyntaxError(at, "a nonzero divisor");
                r = r.scaled(cst->inverse());
            } else {
                return r;
            }
        }
    }

    RingElement factor() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            RingElement r = element();
            expect(')', "')'");
            return r;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return number();
        const std::size_t at = pos_;
        const std::string name = identifier();
        if (name == "zeta" && peek() == '(') return zeta_atom(at);
        // ring variable?
        const auto& vars = ring_->vars();
        const auto vit = std::find(vars.begin(), vars.end(), name);
        if (vit != vars.end()) {
            const std::size_t idx = static_cast<std::size_t>(vit - vars.begin());
            long long exp = 1;
            if (accept('^')) exp = small_integer("a small exponent");
            if (exp < 0 && !ring_->laurent(idx)) throw ExponentDomainError(at, name);
            return RingElement::variable(ring_, idx, exp);
        }
        // field parameter?
        if (ring_->field()->kind() == FieldKind::RationalFunctions) {
            const auto& params = ring_->field()->params();
            const auto pit = std::find(params.begin(), params.end(), name);
            if (pit != params.end()) {
                Coefficient p = Coefficient::parameter(
                    ring_->field(), static_cast<std::size_t>(pit - params.begin()));
                if (accept('^')) p = p.pow(small_integer("a small exponent"));
                return RingElement::constant(ring_, p);
            }
        }
        throw UnknownSymbol(at, name);
    }

    RingElement number() {
        const Int num = integer();
        // integer '/' posint is a fraction literal; other divisors stay with term()
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '/' && digit_ahead(1)) {
            ++pos_;
            const Int den = integer();
            if (den <= 0) throw SyntaxError(pos_, "a positive denominator");
            return RingElement::constant(ring_,
                                         Coefficient::from_rational(ring_->field(), Rat(num, den)));
        }
        return RingElement::constant(ring_,
                                     Coefficient::from_rational(ring_->field(), Rat(num)));
    }

    RingElement zeta_atom(std::size_t at) {
        expect('(', "'('");
        const long long n = small_integer("a positive cyclotomic order");
        if (n < 1) throw SyntaxError(at, "a positive cyclotomic order");
        expect(')', "')'");
        long long power = 1;
        if (accept('^')) power = small_integer("a small exponent");
        if (ring_->field()->kind() != FieldKind::Cyclotomic ||
            ring_->field()->cyclotomic_order() != static_cast<unsigned>(n))
            throw UnknownSymbol(at, "zeta(" + std::to_string(n) + ")");
        return RingElement::constant(ring_, Coefficient::zeta_power(ring_->field(), power));
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    RingPtr ring_;
};

}  // namespace

RingElement parse_element(std::string_view text, const RingPtr& ring) {
    return Parser(text, ring).run();
}

}  // namespace dwitt

#pragma once

#include "e36/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace e36 {

// Sparse multivariate polynomials over Q with a fixed variable list, plus
// rational functions. Used for the symbolic identity checks (blow-up
// equations, line parametrizations, discriminant factors).

class Poly {
public:
    using Exp = std::vector<int>;  // one entry per variable, >= 0

    Poly() = default;
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}
    static Poly constant(std::size_t nvars, const Rational& c);
    static Poly variable(std::size_t nvars, std::size_t idx);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp, Rational>& terms() const { return terms_; }

    void add_term(const Exp& e, const Rational& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    Poly pow(unsigned e) const;
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Rational eval(const std::vector<Rational>& point) const;
    // substitute each variable by a polynomial (in a possibly different ring)
    Poly substitute(const std::vector<Poly>& images) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::size_t nvars_ = 0;
    std::map<Exp, Rational> terms_;
};

// num/den pair; den must be a nonzero polynomial. No gcd reduction: the
// checks only need exact zero tests, which read the numerator.
struct RationalFn {
    Poly num, den;

    static RationalFn from_poly(const Poly& p);
    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    RationalFn operator*(const RationalFn& o) const;
    bool is_zero() const { return num.is_zero(); }
};

// substitute rational functions into a polynomial
RationalFn substitute(const Poly& p, const std::vector<RationalFn>& images);

// tiny expression parser for bundled equation data: sums of signed integer
// multiples of variable products, e.g. "W1*W2 - U*V*z" or "1 + x^2".
Poly parse_poly(const std::string& text, const std::vector<std::string>& names);

}  // namespace e36

#pragma once

#include "e36/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace e36 {

// Truncated exact Laurent series. Exponents are integer vectors; a series
// may carry a fixed half-integer offset vector (exponents are then
// offset + integer part). The truncation window is measured by a declared
// degree functional deg(e) = sum_i w_i * (|e_i| or e_i), which keeps every
// window finite even when some exponents range over negative integers.

struct DegreeFunctional {
    std::vector<long> weights;
    std::vector<bool> use_abs;

    long operator()(const std::vector<int>& e) const {
        long d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            long x = e[i];
            if (use_abs[i] && x < 0) x = -x;
            d += weights[i] * x;
        }
        return d;
    }
    static DegreeFunctional total(std::size_t nvars);
};

class LaurentSeries {
public:
    using Exp = std::vector<int>;

    LaurentSeries(std::vector<std::string> vars, long truncation, DegreeFunctional deg);

    const std::vector<std::string>& vars() const { return vars_; }
    long truncation() const { return truncation_; }
    const DegreeFunctional& degree() const { return deg_; }
    const std::map<Exp, Rational>& terms() const { return terms_; }

    // fixed half-integer offset (entries with denominator 1 or 2); empty = none
    const RationalVector& offset() const { return offset_; }
    void set_offset(RationalVector off);

    bool in_window(const Exp& e) const { return deg_(e) <= truncation_; }
    void add_term(const Exp& e, const Rational& c);  // drops terms outside window
    Rational coeff(const Exp& e) const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator*(const Rational& c) const;
    bool operator==(const LaurentSeries& o) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    // substitute each variable by a signed monomial in a target ring:
    // var i -> sign_i * prod_j target_j^{m_{ij}}. Ring homomorphism on the
    // truncated algebra; rejects substitutions making the target degree
    // functional unbounded below on the source window.
    struct MonomialImage {
        Rational coefficient;  // nonzero
        Exp exponents;         // in target variables
    };
    LaurentSeries substitute_monomials(const std::vector<MonomialImage>& images,
                                       std::vector<std::string> target_vars, long target_truncation,
                                       DegreeFunctional target_deg) const;

private:
    std::vector<std::string> vars_;
    long truncation_;
    DegreeFunctional deg_;
    RationalVector offset_;
    std::map<Exp, Rational> terms_;
};

}  // namespace e36

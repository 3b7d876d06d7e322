#include "e36/series.hpp"

#include <stdexcept>

namespace e36 {

DegreeFunctional DegreeFunctional::total(std::size_t nvars) {
    return {std::vector<long>(nvars, 1), std::vector<bool>(nvars, false)};
}

LaurentSeries::LaurentSeries(std::vector<std::string> vars, long truncation, DegreeFunctional deg)
    : vars_(std::move(vars)), truncation_(truncation), deg_(std::move(deg)) {
    if (deg_.weights.size() != vars_.size() || deg_.use_abs.size() != vars_.size())
        throw std::invalid_argument("degree functional arity mismatch");
}

void LaurentSeries::set_offset(RationalVector off) {
    if (off.size() != vars_.size()) throw std::invalid_argument("offset arity mismatch");
    for (const Rational& q : off)
        if (q.get_den() != 1 && q.get_den() != 2)
            throw std::invalid_argument("offset entries must lie in (1/2)Z");
    offset_ = std::move(off);
}

void LaurentSeries::add_term(const Exp& e, const Rational& c) {
    if (c == 0 || !in_window(e)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational LaurentSeries::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    if (vars_ != o.vars_ || offset_ != o.offset_) throw std::invalid_argument("series ring mismatch");
    LaurentSeries r(vars_, std::min(truncation_, o.truncation_), deg_);
    r.offset_ = offset_;
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("series ring mismatch");
    if (!offset_.empty() && !o.offset_.empty())
        throw std::invalid_argument("product of two offset-carrying series");
    LaurentSeries r(vars_, std::min(truncation_, o.truncation_), deg_);
    r.offset_ = offset_.empty() ? o.offset_ : offset_;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exp e(vars_.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

LaurentSeries LaurentSeries::operator*(const Rational& c) const {
    LaurentSeries r(vars_, truncation_, deg_);
    r.offset_ = offset_;
    if (c == 0) return r;
    for (const auto& [e, q] : terms_) r.add_term(e, q * c);
    return r;
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
    return vars_ == o.vars_ && truncation_ == o.truncation_ && offset_ == o.offset_ &&
           terms_ == o.terms_;
}

Rational LaurentSeries::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("evaluate arity");
    if (!offset_.empty()) throw std::domain_error("cannot evaluate an offset-carrying series");
    Rational out(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) t *= rat_pow(point[i], e[i]);
        out += t;
    }
    return out;
}

LaurentSeries LaurentSeries::substitute_monomials(const std::vector<MonomialImage>& images,
                                                  std::vector<std::string> target_vars,
                                                  long target_truncation,
                                                  DegreeFunctional target_deg) const {
    if (images.size() != vars_.size()) throw std::invalid_argument("substitution arity");
    if (!offset_.empty()) throw std::domain_error("substitute into an offset-carrying series");
    for (const auto& im : images)
        if (im.coefficient == 0) throw std::invalid_argument("monomial image with zero coefficient");
    // The target degree must be bounded below on the source window, else the
    // result is not a faithful truncation. Two recognized shapes: an all-abs
    // functional (finite window), or positive weights with power-series
    // support (stored exponents all nonnegative).
    bool all_abs = true;
    for (bool b : deg_.use_abs) all_abs = all_abs && b;
    if (!all_abs) {
        bool positive = true;
        for (long w : deg_.weights) positive = positive && w > 0;
        bool orthant = true;
        for (const auto& [e, c] : terms_)
            for (int x : e) orthant = orthant && x >= 0;
        if (!(positive && orthant))
            throw std::domain_error("substitution with degree functional unbounded below on window");
    }
    LaurentSeries out(std::move(target_vars), target_truncation, std::move(target_deg));
    for (const auto& [e, c] : terms_) {
        Rational coef = c;
        Exp te(out.vars_.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            coef *= rat_pow(images[i].coefficient, e[i]);
            for (std::size_t j = 0; j < te.size(); ++j) te[j] += e[i] * images[i].exponents[j];
        }
        out.add_term(te, coef);
    }
    return out;
}

}  // namespace e36

#include "e36/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace e36 {

Poly Poly::constant(std::size_t nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Exp(nvars, 0), c);
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t idx) {
    Poly p(nvars);
    Exp e(nvars, 0);
    e[idx] = 1;
    p.add_term(e, Rational(1));
    return p;
}

void Poly::add_term(const Exp& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exp e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, q] : terms_) r.terms_.emplace(e, q * c);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(nvars_, Rational(1));
    Poly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
    Rational out(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        out += t;
    }
    return out;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (images.size() != nvars_) throw std::invalid_argument("substitute arity");
    std::size_t target = images.empty() ? 0 : images[0].nvars();
    Poly out(target);
    for (const auto& [e, c] : terms_) {
        Poly t = Poly::constant(target, c);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i]) t = t * images[i].pow(static_cast<unsigned>(e[i]));
        out = out + t;
    }
    return out;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // reverse map order so leading variables print first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool hasvar = false;
        for (std::size_t i = 0; i < nvars_; ++i) hasvar = hasvar || e[i];
        if (ac != 1 || !hasvar) {
            os << ac;
            if (hasvar) os << "*";
        }
        bool firstv = true;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << names[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

RationalFn RationalFn::from_poly(const Poly& p) {
    return {p, Poly::constant(p.nvars(), Rational(1))};
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    return {num * o.den + o.num * den, den * o.den};
}

RationalFn RationalFn::operator-(const RationalFn& o) const {
    return {num * o.den - o.num * den, den * o.den};
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
    return {num * o.num, den * o.den};
}

RationalFn substitute(const Poly& p, const std::vector<RationalFn>& images) {
    if (images.size() != p.nvars()) throw std::invalid_argument("substitute arity");
    std::size_t target = images.empty() ? 0 : images[0].num.nvars();
    RationalFn out = RationalFn::from_poly(Poly(target));
    for (const auto& [e, c] : p.terms()) {
        RationalFn t = RationalFn::from_poly(Poly::constant(target, c));
        for (std::size_t i = 0; i < p.nvars(); ++i)
            for (int k = 0; k < e[i]; ++k) t = t * images[i];
        out = out + t;
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    const std::vector<std::string>& names;

    void skip() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }

    Poly parse_sum() {
        Poly out(names.size());
        skip();
        int sign = 1;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        out = out + parse_product() * Rational(sign);
        skip();
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
            out = out + parse_product() * Rational(sign);
            skip();
        }
        return out;
    }

    Poly parse_product() {
        Poly out = parse_factor();
        skip();
        while (pos < s.size() && s[pos] == '*') {
            ++pos;
            out = out * parse_factor();
            skip();
        }
        return out;
    }

    Poly parse_factor() {
        skip();
        Poly base(names.size());
        if (pos < s.size() && s[pos] == '(') {
            ++pos;
            base = parse_sum();
            skip();
            if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("expected ')'");
            ++pos;
        } else if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            base = Poly::constant(names.size(), Rational(Int(s.substr(start, pos - start))));
        } else {
            // longest matching variable name
            std::size_t best = names.size();
            std::size_t blen = 0;
            for (std::size_t i = 0; i < names.size(); ++i) {
                const auto& n = names[i];
                if (n.size() > blen && s.compare(pos, n.size(), n) == 0) {
                    best = i;
                    blen = n.size();
                }
            }
            if (best == names.size()) throw std::invalid_argument("unknown symbol at '" + s.substr(pos) + "'");
            pos += blen;
            base = Poly::variable(names.size(), best);
        }
        skip();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            skip();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            base = base.pow(static_cast<unsigned>(std::stoul(s.substr(start, pos - start))));
        }
        return base;
    }
};

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& names) {
    Parser p{text, 0, names};
    Poly out = p.parse_sum();
    p.skip();
    if (p.pos != text.size()) throw std::invalid_argument("trailing characters in '" + text + "'");
    return out;
}

}  // namespace e36

#include "bricard/rational_expression.hpp"

#include <stdexcept>

namespace bricard {

RationalExpression RationalExpression::of(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw std::invalid_argument("rational expression with zero denominator");
    RationalExpression r;
    if (num.is_zero()) {
        r.num_ = num;
        r.den_ = Polynomial::constant(den.universe(), 1);
        return r;
    }
    Polynomial g = poly_gcd(num, den);
    if (!g.is_constant() || g.constant_value() != 1) {
        num = num.divided_by(g);
        den = den.divided_by(g);
    }
    // Scale so the denominator is integer-primitive with positive lead.
    Q c = den.content();
    r.num_ = num * (Q(1) / c);
    r.den_ = den * (Q(1) / c);
    return r;
}

bool RationalExpression::is_polynomial() const {
    return den_.is_constant() && den_.constant_value() == 1;
}

RationalExpression RationalExpression::operator+(const RationalExpression& o) const {
    return of(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalExpression RationalExpression::operator-(const RationalExpression& o) const {
    return of(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalExpression RationalExpression::operator*(const RationalExpression& o) const {
    return of(num_ * o.num_, den_ * o.den_);
}

RationalExpression RationalExpression::operator/(const RationalExpression& o) const {
    if (o.is_zero()) throw std::invalid_argument("division by zero rational expression");
    return of(num_ * o.den_, den_ * o.num_);
}

RationalExpression RationalExpression::operator-() const {
    RationalExpression r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

bool RationalExpression::operator==(const RationalExpression& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

Q RationalExpression::evaluate(const std::unordered_map<std::string, Q>& binding) const {
    Q d = den_.evaluate(binding);
    if (d == 0) throw std::domain_error("rational expression denominator vanishes");
    return num_.evaluate(binding) / d;
}

double RationalExpression::evaluate_double(
    const std::unordered_map<std::string, double>& binding) const {
    return num_.evaluate_double(binding) / den_.evaluate_double(binding);
}

namespace {

// A denominator can go unparenthesized only when it is a single power of one
// variable or a positive integer constant; "/a*b" would rebind as "(…/a)*b".
bool needs_parens_as_denominator(const Polynomial& p) {
    if (p.term_count() != 1) return true;
    const Term& t = p.terms().front();
    if (t.mono.is_constant()) return t.coeff < 0 || t.coeff.get_den() != 1;
    if (t.coeff != 1) return true;
    int nvars = 0;
    for (std::size_t i = 0; i < t.mono.size(); ++i)
        if (t.mono[i] != 0) ++nvars;
    return nvars != 1;
}

}  // namespace

std::string RationalExpression::to_string() const {
    if (is_polynomial()) return num_.to_string();
    std::string n = num_.term_count() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
    std::string d = needs_parens_as_denominator(den_) ? "(" + den_.to_string() + ")"
                                                      : den_.to_string();
    return n + "/" + d;
}

Polynomial substitute_clearing(const Polynomial& p, const std::string& var,
                               const Polynomial& num, const Polynomial& den) {
    std::size_t v = p.universe()->index_of(var);
    int d = p.degree_in(v);
    if (d <= 0) return p;
    auto coeffs = p.coefficients_wrt(v);  // descending degree
    // Horner in num; each lower coefficient enters scaled by den^(d-k).
    Polynomial acc = Polynomial::zero(p.universe());
    unsigned prev = static_cast<unsigned>(d);
    bool first = true;
    for (const auto& [k, c] : coeffs) {
        if (first) {
            acc = c;
            first = false;
        } else {
            for (unsigned i = k; i < prev; ++i) acc = acc * num;
            acc = acc + c * den.pow(static_cast<unsigned>(d) - k);
        }
        prev = k;
    }
    for (unsigned i = 0; i < prev; ++i) acc = acc * num;
    return acc;
}

RationalExpression substitute(const Polynomial& p, const std::string& var,
                              const RationalExpression& value) {
    int d = p.degree_in(var);
    if (d <= 0) return RationalExpression(p);
    Polynomial num = substitute_clearing(p, var, value.numerator(), value.denominator());
    return RationalExpression::of(std::move(num),
                                  value.denominator().pow(static_cast<unsigned>(d)));
}

}  // namespace bricard

#pragma once

#include <string>

#include "bricard/polynomial.hpp"

namespace bricard {

/// Quotient of two polynomials in normal form: nonzero denominator,
/// constant gcd(num, den), denominator integer-primitive with positive
/// leading coefficient.  The normal form is unique.
class RationalExpression {
public:
    RationalExpression() = default;
    explicit RationalExpression(Polynomial num)
        : num_(std::move(num)), den_(Polynomial::constant(num_.universe(), 1)) {}
    static RationalExpression of(Polynomial num, Polynomial den);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;

    RationalExpression operator+(const RationalExpression& o) const;
    RationalExpression operator-(const RationalExpression& o) const;
    RationalExpression operator*(const RationalExpression& o) const;
    RationalExpression operator/(const RationalExpression& o) const;
    RationalExpression operator-() const;
    bool operator==(const RationalExpression& o) const;

    bool mentions(const std::string& var) const {
        return num_.mentions(var) || den_.mentions(var);
    }

    Q evaluate(const std::unordered_map<std::string, Q>& binding) const;
    double evaluate_double(const std::unordered_map<std::string, double>& binding) const;

    std::string to_string() const;

private:
    Polynomial num_;
    Polynomial den_;
};

/// Exact substitution var := value into p; result in normal form.
/// Throws when value's denominator is the zero polynomial.
RationalExpression substitute(const Polynomial& p, const std::string& var,
                              const RationalExpression& value);

/// Substitution that only tracks the numerator: returns
/// sum_k coeff_k(p) * num^k * den^(D-k), i.e. p after var := num/den with
/// denominators cleared by den^D.  Zero iff the substituted value is zero.
Polynomial substitute_clearing(const Polynomial& p, const std::string& var,
                               const Polynomial& num, const Polynomial& den);

}  // namespace bricard

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bricard/universe.hpp"

namespace bricard {

using Q = mpq_class;
using Z = mpz_class;

/// Exponent vector aligned with a VariableUniverse.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint16_t> exps) : exp_(std::move(exps)) {}

    std::size_t size() const { return exp_.size(); }
    std::uint16_t operator[](std::size_t i) const { return exp_[i]; }
    std::uint16_t& operator[](std::size_t i) { return exp_[i]; }
    const std::vector<std::uint16_t>& exponents() const { return exp_; }

    unsigned total_degree() const;
    bool is_constant() const;

    Monomial operator*(const Monomial& o) const;
    /// Exponent-wise division; nullopt when some exponent would go negative.
    std::optional<Monomial> divide(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exp_ == o.exp_; }

private:
    std::vector<std::uint16_t> exp_;
};

/// Graded lexicographic: total degree first, ties broken by the exponent of
/// the most significant (last-listed) universe variable.
bool grlex_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

struct Term {
    Monomial mono;
    Q coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed variable universe.  Terms are kept in descending graded-lex order
/// and no stored coefficient is zero.
class Polynomial {
public:
    Polynomial() : universe_(standard_universe()) {}
    explicit Polynomial(UniversePtr u) : universe_(std::move(u)) {}

    static Polynomial zero(UniversePtr u) { return Polynomial(std::move(u)); }
    static Polynomial constant(UniversePtr u, const Q& c);
    static Polynomial variable(UniversePtr u, const std::string& name);
    /// From an arbitrary term map; normalizes (drops zeros, sorts).
    static Polynomial from_terms(UniversePtr u, std::vector<Term> terms);

    const UniversePtr& universe() const { return universe_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant value; throws unless is_constant().
    Q constant_value() const;

    const Term& leading_term() const;

    unsigned total_degree() const;
    int degree_in(std::size_t var) const;          // -1 for the zero polynomial
    int degree_in(const std::string& var) const;
    bool mentions(std::size_t var) const;
    bool mentions(const std::string& var) const;
    std::vector<std::size_t> variables_present() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Q& c) const;
    bool operator==(const Polynomial& o) const;

    Polynomial pow(unsigned n) const;
    Polynomial derivative(std::size_t var) const;
    Polynomial derivative(const std::string& var) const;

    /// Coefficients with respect to one variable, descending degree,
    /// nonzero entries only; each coefficient is free of `var`.
    std::vector<std::pair<unsigned, Polynomial>> coefficients_wrt(std::size_t var) const;
    std::vector<std::pair<unsigned, Polynomial>> coefficients_wrt(const std::string& var) const;
    /// Coefficient of var^k (possibly zero).
    Polynomial coefficient_of(std::size_t var, unsigned k) const;

    /// Plain polynomial substitution var := value.
    Polynomial substituted(std::size_t var, const Polynomial& value) const;

    /// Rational content: c with p/c integer, coprime, leading coeff positive.
    Q content() const;
    /// p / content() — integer-primitive with positive leading coefficient.
    Polynomial primitive_part() const;

    /// Exact quotient p/d; nullopt when d does not divide p.
    std::optional<Polynomial> divide_exact(const Polynomial& d) const;
    /// Exact quotient; throws when not divisible.
    Polynomial divided_by(const Polynomial& d) const;

    /// Square root of a perfect square; nullopt when p is not one.
    std::optional<Polynomial> sqrt_exact() const;

    /// Divides every exponent of `var` by n; requires all its exponents to
    /// be multiples of n (n >= 2).
    Polynomial even_power_reduce(std::size_t var, unsigned n) const;
    Polynomial even_power_reduce(const std::string& var, unsigned n) const;
    /// Largest n >= 1 dividing every exponent of var (0 when var absent).
    unsigned exponent_gcd(std::size_t var) const;

    Q evaluate(const std::unordered_map<std::string, Q>& binding) const;
    double evaluate_double(const std::unordered_map<std::string, double>& binding) const;

    /// Canonical text form: descending graded-lex, explicit `*`, `^` powers.
    std::string to_string() const;

private:
    void check_same_universe(const Polynomial& o) const;

    UniversePtr universe_;
    std::vector<Term> terms_;  // descending grlex, nonzero coefficients
};

/// GCD, primitive with positive leading coefficient; gcd(0, q) = normalized q.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

}  // namespace bricard

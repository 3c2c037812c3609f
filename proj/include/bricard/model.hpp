#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bricard/rational_expression.hpp"
#include "bricard/table.hpp"

namespace bricard {

/// The eleven sides s1..s9, e, b; each symbolic (no value) or an exact
/// rational.  Negative values are allowed for s3, s8, s2, s7.
class SideAssignment {
public:
    static const std::vector<std::string>& names();
    static SideAssignment symbolic(UniversePtr u = standard_universe());
    static SideAssignment from_values(const std::map<std::string, Q>& values,
                                      UniversePtr u = standard_universe());

    const UniversePtr& universe() const { return universe_; }
    bool is_numeric(const std::string& side) const { return values_.count(side) != 0; }
    bool fully_numeric() const;
    Q value(const std::string& side) const { return values_.at(side); }
    /// The side as a polynomial: its value when numeric, else the variable.
    Polynomial poly(const std::string& side) const;

    void set(const std::string& side, const Q& v) { values_[side] = v; }

private:
    explicit SideAssignment(UniversePtr u) : universe_(std::move(u)) {}
    UniversePtr universe_;
    std::map<std::string, Q> values_;
};

/// The fifteen parameters of Eq. (4), expanded.
struct ParameterSet {
    Polynomial a1, b1, c1, d1, e1;
    Polynomial a2, b2, c2, d2, e2;
    Polynomial a3, b3, c3, d3, e3;
    SideAssignment sides;

    /// (a_i, b_i, c_i, d_i, e_i) for equation i in 1..3.
    std::array<const Polynomial*, 5> equation_params(int i) const;
};

ParameterSet parameters_from_sides(const SideAssignment& sides);

/// Eqs. (1)-(3): a_i x^2 y^2 + d_i y^2 + 2 c_i x y + b_i x^2 + e_i in
/// (t1,t2), (t2,t3), (t1,t3).
std::array<Polynomial, 3> build_equations(const ParameterSet& params);

/// The same three equations built from coordinates: A=(0,0), E=(e,0),
/// B=(b,0), D and G on the alpha-ray from A at s1, s7; F and H on the
/// beta-ray from E at s2, s8; C and I on the gamma-ray from B at s9, s3.
/// Half-angle substitution, denominators (1+t_i^2) cleared.
std::array<Polynomial, 3> derive_equations_from_geometry(const SideAssignment& sides);

/// Radicands of the quadratic formula: F (eq1 solved for t2) and F1 (eq3
/// solved for t3), both polynomials in t1.
/// F = c1^2 t1^2 - (a1 t1^2 + d1)(b1 t1^2 + e1).
std::pair<Polynomial, Polynomial> F_polynomials(const ParameterSet& params);

/// One row of the section-4 style case table.
struct SplitClassification {
    int equation;                          // 1..3
    std::array<std::string, 2> zero_pair;  // e.g. {"a1", "d1"}
    std::vector<Relation> side_relations;  // e.g. s7 = s5, s2 = e
    Polynomial F;                          // radicand after substitution (a square)
    struct Branch {
        RationalExpression t;  // dependent half-angle tangent
        bool degenerate;       // constant during the flex
    };
    std::vector<Branch> branches;
};

/// Enumerates the zero-pairs of {a_i, b_i, d_i, e_i}, solves each pair of
/// linear factors from Eq. (4) for side relations, and returns the resulting
/// rows with dependent-t expressions.
std::vector<SplitClassification> classify_split(const ParameterSet& params, int equation);

/// The six non-split polynomials of Eq. (23).  `signs` flips cos(theta2)
/// per quadrilateral pair (alpha, gamma, beta); all +1 reproduces the
/// printed system.
std::array<Polynomial, 6> six_system(const SideAssignment& sides, int sign = 1);
std::array<Polynomial, 6> six_system(const SideAssignment& sides, const std::array<int, 3>& signs);

/// Eq. (24): f = c5 t^5 + ... + c0 with the six polynomials as coefficients
/// in printed order (first printed = c5).
Polynomial probe_polynomial(const std::array<Polynomial, 6>& six);

/// The law-of-cosines pair for one quadrilateral pair (0 = alpha i.e.
/// Eqs. (21)-(22)), in cosA, cosT1, cosT2; sign flips cosT2.
std::array<Polynomial, 2> cosine_pair(const SideAssignment& sides, int pair, int sign = 1);

/// Theorem 4's system (18)-(22) in s-variables, r1, cosA, cosT1, cosT2.
std::array<Polynomial, 5> theorem4_system(const SideAssignment& sides);

/// Planar mobility M = 3(n - g - 1) + sum f_i.
int mobility(int members, int joints, const std::vector<int>& joint_freedoms);

struct DegeneracyReport {
    bool degenerate = false;
    std::vector<std::string> reasons;
};

/// Zero sides or collapsed pairs (b=e, s7=s1, s3=s9, s2=s8), checked
/// symbolically or numerically.
DegeneracyReport is_degenerate(const SideAssignment& sides);
/// Same checks on the sides after applying a solution table.
DegeneracyReport is_degenerate(const SolutionTable& table);

}  // namespace bricard

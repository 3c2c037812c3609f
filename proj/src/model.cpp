#include "bricard/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bricard {

const std::vector<std::string>& SideAssignment::names() {
    static const std::vector<std::string> n = {"s1", "s2", "s3", "s4", "s5", "s6",
                                               "s7", "s8", "s9", "e",  "b"};
    return n;
}

SideAssignment SideAssignment::symbolic(UniversePtr u) { return SideAssignment(std::move(u)); }

SideAssignment SideAssignment::from_values(const std::map<std::string, Q>& values,
                                           UniversePtr u) {
    SideAssignment s(std::move(u));
    for (const auto& [name, v] : values) {
        if (std::find(names().begin(), names().end(), name) == names().end())
            throw std::invalid_argument("unknown side '" + name + "'");
        s.values_[name] = v;
    }
    return s;
}

bool SideAssignment::fully_numeric() const { return values_.size() == names().size(); }

Polynomial SideAssignment::poly(const std::string& side) const {
    auto it = values_.find(side);
    if (it != values_.end()) return Polynomial::constant(universe_, it->second);
    return Polynomial::variable(universe_, side);
}

namespace {

// The two linear factors of each Eq. (4) parameter; c_i is a monomial.
struct Factors {
    Polynomial f, g;
    Polynomial product() const { return f * g; }
};

struct EquationFactors {
    Factors a, b, d, e;
    Polynomial c;
};

EquationFactors eq_factors(const SideAssignment& s, int i) {
    auto p = [&](const char* n) { return s.poly(n); };
    switch (i) {
        case 1: {
            Polynomial s2 = p("s2"), s5 = p("s5"), s7 = p("s7"), e = p("e");
            return {{-s2 + e - s5 + s7, -s2 + e + s5 + s7},
                    {s2 + e - s5 + s7, s2 + e + s5 + s7},
                    {-s2 + e + s5 - s7, -s2 + e - s5 - s7},
                    {s2 + e - s7 - s5, s2 - s7 + s5 + e},
                    p("s2") * p("s7") * Q(-4)};
        }
        case 2: {
            Polynomial s3 = p("s3"), s6 = p("s6"), s8 = p("s8"), e = p("e"), b = p("b");
            return {{-b + e + s3 - s8 - s6, -b + e + s3 - s8 + s6},
                    {-b + e - s3 + s6 - s8, -b + e - s3 - s6 - s8},
                    {-b + e + s8 + s3 - s6, -b + e + s8 + s3 + s6},
                    {-b + e - s3 + s8 - s6, -b + e - s3 + s8 + s6},
                    p("s3") * p("s8") * Q(-4)};
        }
        case 3: {
            Polynomial s1 = p("s1"), s4 = p("s4"), s9 = p("s9"), b = p("b");
            return {{b + s1 - s9 - s4, b + s1 - s9 + s4},
                    {b + s1 + s4 + s9, b + s1 - s4 + s9},
                    {-b + s1 + s9 + s4, -b + s1 + s9 - s4},
                    {-b + s1 - s9 - s4, -b + s1 - s9 + s4},
                    p("s9") * p("s1") * Q(-4)};
        }
        default:
            throw std::invalid_argument("equation index must be 1..3");
    }
}

}  // namespace

ParameterSet parameters_from_sides(const SideAssignment& sides) {
    EquationFactors f1 = eq_factors(sides, 1);
    EquationFactors f2 = eq_factors(sides, 2);
    EquationFactors f3 = eq_factors(sides, 3);
    return ParameterSet{f1.a.product(), f1.b.product(), f1.c, f1.d.product(), f1.e.product(),
                        f2.a.product(), f2.b.product(), f2.c, f2.d.product(), f2.e.product(),
                        f3.a.product(), f3.b.product(), f3.c, f3.d.product(), f3.e.product(),
                        sides};
}

std::array<const Polynomial*, 5> ParameterSet::equation_params(int i) const {
    switch (i) {
        case 1: return {&a1, &b1, &c1, &d1, &e1};
        case 2: return {&a2, &b2, &c2, &d2, &e2};
        case 3: return {&a3, &b3, &c3, &d3, &e3};
        default: throw std::invalid_argument("equation index must be 1..3");
    }
}

namespace {

// a x^2 y^2 + d y^2 + 2 c x y + b x^2 + e
Polynomial biquadratic(const std::array<const Polynomial*, 5>& p, const Polynomial& x,
                       const Polynomial& y) {
    const Polynomial &a = *p[0], &b = *p[1], &c = *p[2], &d = *p[3], &e = *p[4];
    return a * x * x * y * y + d * y * y + c * x * y * Q(2) + b * x * x + e;
}

}  // namespace

std::array<Polynomial, 3> build_equations(const ParameterSet& params) {
    const auto& u = params.sides.universe();
    Polynomial t1 = Polynomial::variable(u, "t1");
    Polynomial t2 = Polynomial::variable(u, "t2");
    Polynomial t3 = Polynomial::variable(u, "t3");
    return {biquadratic(params.equation_params(1), t1, t2),
            biquadratic(params.equation_params(2), t2, t3),
            biquadratic(params.equation_params(3), t1, t3)};
}

namespace {

struct Point {
    RationalExpression x, y;
};

RationalExpression dist2(const Point& p, const Point& q) {
    RationalExpression dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}

}  // namespace

std::array<Polynomial, 3> derive_equations_from_geometry(const SideAssignment& sides) {
    const auto& u = sides.universe();
    auto R = [&](const Polynomial& p) { return RationalExpression(p); };
    auto side = [&](const char* n) { return R(sides.poly(n)); };
    RationalExpression one = R(Polynomial::constant(u, 1));
    RationalExpression two = R(Polynomial::constant(u, 2));

    auto ray = [&](const char* tvar) {
        RationalExpression t = R(Polynomial::variable(u, tvar));
        RationalExpression den = one + t * t;
        return Point{(one - t * t) / den, two * t / den};  // (cos, sin)
    };
    Point dir_a = ray("t1"), dir_b = ray("t2"), dir_g = ray("t3");

    Point A{R(Polynomial::zero(u)), R(Polynomial::zero(u))};
    Point E{side("e"), R(Polynomial::zero(u))};
    Point B{side("b"), R(Polynomial::zero(u))};
    auto along = [&](const Point& base, const Point& dir, RationalExpression len) {
        return Point{base.x + len * dir.x, base.y + len * dir.y};
    };
    Point D = along(A, dir_a, side("s1")), G = along(A, dir_a, side("s7"));
    Point F = along(E, dir_b, side("s2")), H = along(E, dir_b, side("s8"));
    Point C = along(B, dir_g, side("s9")), I = along(B, dir_g, side("s3"));

    auto equation = [&](const Point& p, const Point& q, const char* rod) {
        RationalExpression r = dist2(p, q) - side(rod) * side(rod);
        return r.numerator().primitive_part();
    };
    return {equation(G, F, "s5"), equation(H, I, "s6"), equation(D, C, "s4")};
}

namespace {

Polynomial radicand(const std::array<const Polynomial*, 5>& p, const Polynomial& x) {
    const Polynomial &a = *p[0], &b = *p[1], &c = *p[2], &d = *p[3], &e = *p[4];
    return c * c * x * x - (a * x * x + d) * (b * x * x + e);
}

}  // namespace

std::pair<Polynomial, Polynomial> F_polynomials(const ParameterSet& params) {
    Polynomial t1 = Polynomial::variable(params.sides.universe(), "t1");
    return {radicand(params.equation_params(1), t1), radicand(params.equation_params(3), t1)};
}

namespace {

const std::vector<std::string>& pivot_priority(int equation) {
    static const std::vector<std::string> p1 = {"s7", "s2", "s5", "e"};
    static const std::vector<std::string> p2 = {"s3", "s8", "s6", "b", "e"};
    static const std::vector<std::string> p3 = {"s9", "s1", "s4", "b"};
    switch (equation) {
        case 1: return p1;
        case 2: return p2;
        case 3: return p3;
        default: throw std::invalid_argument("equation index must be 1..3");
    }
}

// Solve the linear equation p = 0 for var: var = -rest/coeff.
RationalExpression solve_linear(const Polynomial& p, const std::string& var) {
    std::size_t v = p.universe()->index_of(var);
    Polynomial c = p.coefficient_of(v, 1);
    Polynomial rest = p.coefficient_of(v, 0);
    return RationalExpression::of(-rest, c);
}

// Gaussian solve of {f = 0, g = 0} over the pivot priority list.  Returns
// relations with back-substituted right-hand sides, or nullopt when the
// system is inconsistent or forces a side to zero.
std::optional<std::vector<Relation>> solve_factor_pair(Polynomial f, Polynomial g,
                                                       const std::vector<std::string>& priority) {
    std::vector<Relation> rels;
    for (const Polynomial* cur : {&f, &g}) {
        Polynomial p = *cur;
        for (const auto& r : rels) {
            auto sub = substitute(p, r.target, r.rhs);
            p = sub.numerator();
        }
        if (p.is_zero()) continue;
        std::string pivot;
        for (const auto& var : priority)
            if (p.degree_in(var) == 1) {
                pivot = var;
                break;
            }
        if (pivot.empty()) return std::nullopt;  // nonzero constant: inconsistent
        RationalExpression rhs = solve_linear(p, pivot);
        if (rhs.is_zero()) return std::nullopt;  // forces a side to 0
        // Back-substitute into earlier relations.
        for (auto& r : rels) {
            RationalExpression combined =
                substitute(r.rhs.numerator(), pivot, rhs) /
                substitute(r.rhs.denominator(), pivot, rhs);
            r.rhs = combined;
            if (r.rhs.is_zero()) return std::nullopt;
        }
        rels.push_back({pivot, 1, rhs});
    }
    return rels;
}

Polynomial apply_relations(const Polynomial& p, const std::vector<Relation>& rels) {
    RationalExpression r(p);
    for (const auto& rel : rels) {
        if (!r.mentions(rel.target)) continue;
        r = substitute(r.numerator(), rel.target, rel.rhs) /
            substitute(r.denominator(), rel.target, rel.rhs);
    }
    if (!r.is_polynomial())
        throw std::logic_error("split relations produced a non-polynomial parameter");
    return r.numerator();
}

}  // namespace

std::vector<SplitClassification> classify_split(const ParameterSet& params, int equation) {
    EquationFactors fac = eq_factors(params.sides, equation);
    const auto& priority = pivot_priority(equation);
    const auto& u = params.sides.universe();
    const char* suffix = equation == 1 ? "1" : (equation == 2 ? "2" : "3");
    // x is the independent half-angle tangent, y the dependent one.
    Polynomial x = Polynomial::variable(u, equation == 2 ? "t2" : "t1");

    struct Named {
        const char* name;
        const Factors* fac;
    };
    std::array<Named, 4> named = {
        Named{"a", &fac.a}, Named{"b", &fac.b}, Named{"d", &fac.d}, Named{"e", &fac.e}};

    std::vector<SplitClassification> rows;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < named.size(); ++i) {
        for (std::size_t j = i + 1; j < named.size(); ++j) {
            for (const Polynomial* pf : {&named[i].fac->f, &named[i].fac->g}) {
                for (const Polynomial* qf : {&named[j].fac->f, &named[j].fac->g}) {
                    auto rels = solve_factor_pair(*pf, *qf, priority);
                    if (!rels || rels->empty()) continue;

                    // The claimed pair must actually vanish.
                    if (!apply_relations(named[i].fac->product(), *rels).is_zero()) continue;
                    if (!apply_relations(named[j].fac->product(), *rels).is_zero()) continue;

                    SplitClassification row;
                    row.equation = equation;
                    row.zero_pair = {std::string(named[i].name) + suffix,
                                     std::string(named[j].name) + suffix};
                    row.side_relations = *rels;

                    std::string key;
                    for (const auto& r : *rels) key += r.target + "=" + r.rhs.to_string() + ";";
                    if (!seen.insert(key).second) continue;

                    auto ps = params.equation_params(equation);
                    Polynomial a = apply_relations(*ps[0], *rels);
                    Polynomial b = apply_relations(*ps[1], *rels);
                    Polynomial c = apply_relations(*ps[2], *rels);
                    Polynomial d = apply_relations(*ps[3], *rels);
                    Polynomial e = apply_relations(*ps[4], *rels);
                    row.F = c * c * x * x - (a * x * x + d) * (b * x * x + e);

                    if (a.is_zero() && d.is_zero()) {
                        // 2 c x y + b x^2 + e = 0
                        row.branches.push_back(
                            {RationalExpression::of(-(b * x * x + e), c * x * Q(2)), false});
                    } else {
                        auto s = row.F.sqrt_exact();
                        if (!s) continue;  // not a split after all
                        for (int sgn : {+1, -1}) {
                            Polynomial num = -(c * x) + (sgn > 0 ? *s : -*s);
                            RationalExpression t =
                                RationalExpression::of(num, a * x * x + d);
                            bool dup = false;
                            for (const auto& br : row.branches)
                                if (br.t == t) dup = true;
                            if (!dup) row.branches.push_back({t, false});
                        }
                    }
                    for (auto& br : row.branches)
                        br.degenerate = !br.t.mentions(equation == 2 ? "t2" : "t1");
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return rows;
}

namespace {

// Resultant of two polynomials linear in `var`.
Polynomial linear_resultant(const Polynomial& f, const Polynomial& g, const std::string& var) {
    std::size_t v = f.universe()->index_of(var);
    return f.coefficient_of(v, 1) * g.coefficient_of(v, 0) -
           g.coefficient_of(v, 1) * f.coefficient_of(v, 0);
}

// One quadrilateral pair's law-of-cosines equations, with ct1/ct2 the two
// opposite-angle cosines and ca the shared base-angle cosine.
std::array<Polynomial, 2> raw_cosine_pair(const SideAssignment& s, int pair,
                                          const Polynomial& ca, const Polynomial& ct1,
                                          const Polynomial& ct2) {
    auto p = [&](const char* n) { return s.poly(n); };
    Polynomial two = Polynomial::constant(s.universe(), 2);
    switch (pair) {
        case 0: {  // alpha: Eqs. (21), (22)
            Polynomial e = p("e"), b = p("b");
            Polynomial lhs1 = p("s7") * p("s7") + e * e - two * e * p("s7") * ca -
                              (p("s5") * p("s5") + p("s2") * p("s2") -
                               two * p("s5") * p("s2") * ct1);
            Polynomial lhs2 = p("s1") * p("s1") + b * b - two * b * p("s1") * ca -
                              (p("s4") * p("s4") + p("s9") * p("s9") -
                               two * p("s4") * p("s9") * ct2);
            return {lhs1, lhs2};
        }
        case 1: {  // gamma: inner triangle uses pi - gamma, hence +2(b-e)s3 ca
            Polynomial be = p("b") - p("e"), b = p("b");
            Polynomial lhs1 = p("s3") * p("s3") + be * be + two * be * p("s3") * ca -
                              (p("s6") * p("s6") + p("s8") * p("s8") -
                               two * p("s6") * p("s8") * ct1);
            Polynomial lhs2 = p("s9") * p("s9") + b * b + two * b * p("s9") * ca -
                              (p("s4") * p("s4") + p("s1") * p("s1") -
                               two * p("s1") * p("s4") * ct2);
            return {lhs1, lhs2};
        }
        case 2: {  // beta
            Polynomial be = p("b") - p("e"), e = p("e");
            Polynomial lhs1 = p("s8") * p("s8") + be * be - two * be * p("s8") * ca -
                              (p("s6") * p("s6") + p("s3") * p("s3") -
                               two * p("s6") * p("s3") * ct1);
            Polynomial lhs2 = e * e + p("s2") * p("s2") + two * e * p("s2") * ca -
                              (p("s7") * p("s7") + p("s5") * p("s5") -
                               two * p("s7") * p("s5") * ct2);
            // Printed order eliminates from (lhs2, lhs1).
            return {lhs2, lhs1};
        }
        default:
            throw std::invalid_argument("pair index must be 0..2");
    }
}

}  // namespace

std::array<Polynomial, 2> cosine_pair(const SideAssignment& sides, int pair, int sign) {
    const auto& u = sides.universe();
    Polynomial ca = Polynomial::variable(u, "cosA");
    Polynomial ct1 = Polynomial::variable(u, "cosT1");
    Polynomial ct2 = Polynomial::variable(u, "cosT2") * Q(sign);
    return raw_cosine_pair(sides, pair, ca, ct1, ct2);
}

std::array<Polynomial, 6> six_system(const SideAssignment& sides,
                                     const std::array<int, 3>& signs) {
    const auto& u = sides.universe();
    std::size_t va = u->index_of("cosA");
    Polynomial ca = Polynomial::variable(u, "cosA");
    Polynomial ct = Polynomial::variable(u, "cosT1");
    std::array<Polynomial, 6> out = {Polynomial::zero(u), Polynomial::zero(u),
                                     Polynomial::zero(u), Polynomial::zero(u),
                                     Polynomial::zero(u), Polynomial::zero(u)};
    for (int pair = 0; pair < 3; ++pair) {
        auto eqs = raw_cosine_pair(sides, pair, ca, ct, ct * Q(signs[static_cast<std::size_t>(pair)]));
        Polynomial r = linear_resultant(eqs[0], eqs[1], "cosT1");
        out[static_cast<std::size_t>(2 * pair)] = r.coefficient_of(va, 1) * Q(1, 4);
        out[static_cast<std::size_t>(2 * pair + 1)] = r.coefficient_of(va, 0) * Q(1, 2);
    }
    return out;
}

std::array<Polynomial, 6> six_system(const SideAssignment& sides, int sign) {
    return six_system(sides, std::array<int, 3>{sign, sign, sign});
}

Polynomial probe_polynomial(const std::array<Polynomial, 6>& six) {
    const auto& u = six[0].universe();
    Polynomial t = Polynomial::variable(u, "t");
    Polynomial f = Polynomial::zero(u);
    for (std::size_t i = 0; i < 6; ++i) f = f + six[i] * t.pow(static_cast<unsigned>(5 - i));
    return f;
}

std::array<Polynomial, 5> theorem4_system(const SideAssignment& sides) {
    ParameterSet p = parameters_from_sides(sides);
    const auto& u = sides.universe();
    Polynomial r1 = Polynomial::variable(u, "r1");
    Polynomial ca = Polynomial::variable(u, "cosA");
    Polynomial ct1 = Polynomial::variable(u, "cosT1");
    Polynomial ct2 = Polynomial::variable(u, "cosT2");
    auto alpha = raw_cosine_pair(sides, 0, ca, ct1, ct2);
    return {p.d1 * p.e1 - r1 * p.d3 * p.e3, p.b1 * p.a1 - r1 * p.b3 * p.a3,
            (p.c1 * p.c1 - p.a1 * p.e1 - p.b1 * p.d1) -
                r1 * (p.c3 * p.c3 - p.a3 * p.e3 - p.b3 * p.d3),
            alpha[0], alpha[1]};
}

int mobility(int members, int joints, const std::vector<int>& joint_freedoms) {
    if (static_cast<std::size_t>(joints) != joint_freedoms.size())
        throw std::invalid_argument("mobility: joint count does not match freedoms list");
    int sum = 0;
    for (int f : joint_freedoms) sum += f;
    return 3 * (members - joints - 1) + sum;
}

namespace {

void check_pair(const std::string& x, const std::string& y,
                const std::map<std::string, RationalExpression>& vals, DegeneracyReport& rep) {
    auto ix = vals.find(x), iy = vals.find(y);
    if (ix == vals.end() || iy == vals.end()) return;
    if ((ix->second - iy->second).is_zero()) {
        rep.degenerate = true;
        rep.reasons.push_back(x + " = " + y);
    }
}

DegeneracyReport check_side_values(const std::map<std::string, RationalExpression>& vals) {
    DegeneracyReport rep;
    for (const auto& [name, v] : vals)
        if (v.is_zero()) {
            rep.degenerate = true;
            rep.reasons.push_back(name + " = 0");
        }
    check_pair("b", "e", vals, rep);
    check_pair("s7", "s1", vals, rep);
    check_pair("s3", "s9", vals, rep);
    check_pair("s2", "s8", vals, rep);
    return rep;
}

}  // namespace

DegeneracyReport is_degenerate(const SideAssignment& sides) {
    std::map<std::string, RationalExpression> vals;
    for (const auto& name : SideAssignment::names())
        if (sides.is_numeric(name)) vals[name] = RationalExpression(sides.poly(name));
    return check_side_values(vals);
}

DegeneracyReport is_degenerate(const SolutionTable& table) {
    const UniversePtr u = standard_universe();
    std::map<std::string, RationalExpression> vals;
    for (const auto& name : SideAssignment::names())
        vals[name] = RationalExpression(Polynomial::variable(u, name));
    // Resolve power-1 relations to expressions in the free sides.
    for (int pass = 0; pass < 12; ++pass) {
        bool changed = false;
        for (const auto& rel : table.relations) {
            if (rel.power != 1) continue;
            RationalExpression rhs = rel.rhs;
            for (const auto& other : table.relations) {
                if (other.power != 1 || other.target == rel.target) continue;
                if (rhs.mentions(other.target))
                    rhs = substitute(rhs.numerator(), other.target, other.rhs) /
                          substitute(rhs.denominator(), other.target, other.rhs);
            }
            if (!(vals[rel.target] == rhs)) {
                vals[rel.target] = rhs;
                changed = true;
            }
        }
        if (!changed) break;
    }
    DegeneracyReport rep = check_side_values(vals);
    for (const auto& rel : table.relations)
        if (rel.power > 1 && rel.rhs.is_zero()) {
            rep.degenerate = true;
            rep.reasons.push_back(rel.target + "^" + std::to_string(rel.power) + " = 0");
        }
    return rep;
}

}  // namespace bricard

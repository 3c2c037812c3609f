#include "doctest.h"

#include <random>

#include "bricard/elim.hpp"
#include "bricard/parse.hpp"

using namespace bricard;

namespace {

UniversePtr U() { return standard_universe(); }
Polynomial P(const std::string& s) { return parse_polynomial(s, U()); }

std::mt19937 rng(40923);

Polynomial random_univariate(const std::string& var, int deg, int max_coeff) {
    auto u = U();
    Polynomial x = Polynomial::variable(u, var);
    std::uniform_int_distribution<int> cf(-max_coeff, max_coeff);
    Polynomial p = Polynomial::zero(u);
    for (int k = 0; k <= deg; ++k) {
        int c = (k == deg) ? (cf(rng) | 1) : cf(rng);  // nonzero lead
        p = p + x.pow(static_cast<unsigned>(k)) * Polynomial::constant(u, c);
    }
    return p;
}

bool equal_up_to_sign(const Polynomial& a, const Polynomial& b) {
    return a == b || a == -b;
}

}  // namespace

TEST_CASE("sylvester layout for two linear polynomials") {
    auto m = sylvester_matrix(P("t3 - s1"), P("t3 - s2"), "t3");
    REQUIRE(m.rows() == 2);
    CHECK(m.at(0, 0) == P("1"));
    CHECK(m.at(0, 1) == P("-s1"));
    CHECK(m.at(1, 0) == P("1"));
    CHECK(m.at(1, 1) == P("-s2"));
    CHECK(equal_up_to_sign(determinant(m), P("s1 - s2")));
}

TEST_CASE("sylvester layout for two quadratics puts f rows first") {
    Polynomial f = P("s1*t3^2 + s2*t3 + s3");
    Polynomial g = P("s4*t3^2 + s5*t3 + s6");
    auto m = sylvester_matrix(f, g, "t3");
    REQUIRE(m.rows() == 4);
    CHECK(m.at(0, 0) == P("s1"));
    CHECK(m.at(0, 1) == P("s2"));
    CHECK(m.at(0, 2) == P("s3"));
    CHECK(m.at(0, 3) == P("0"));
    CHECK(m.at(1, 0) == P("0"));
    CHECK(m.at(1, 1) == P("s1"));
    CHECK(m.at(2, 0) == P("s4"));
    CHECK(m.at(3, 3) == P("s6"));
}

TEST_CASE("determinant basics") {
    auto u = U();
    PolyMatrix id(4, 4, u);
    for (int i = 0; i < 4; ++i) id.at(i, i) = P("1");
    CHECK(determinant(id) == P("1"));

    PolyMatrix m(2, 2, u);
    m.at(0, 0) = P("s1");
    m.at(0, 1) = P("s2");
    m.at(1, 0) = P("s3");
    m.at(1, 1) = P("s4");
    CHECK(determinant(m) == P("s1*s4 - s2*s3"));
}

TEST_CASE("resultant vanishes iff common root, 1000 cases") {
    for (int i = 0; i < 1000; ++i) {
        std::uniform_int_distribution<int> rho_d(-5, 5);
        int rho = rho_d(rng);
        Polynomial root = P("t3") - Polynomial::constant(U(), rho);
        Polynomial f = random_univariate("t3", 2, 5) * root;
        Polynomial g = random_univariate("t3", 2, 5) * root;
        CHECK(resultant(f, g, "t3").is_zero());
    }
    // Distinct roots: res(x-a, x-b) with a != b numeric.
    for (int i = 0; i < 1000; ++i) {
        std::uniform_int_distribution<int> d(-20, 20);
        int a = d(rng), b = d(rng);
        if (a == b) continue;
        Polynomial f = P("t3") - Polynomial::constant(U(), a);
        Polynomial g = P("t3") - Polynomial::constant(U(), b);
        CHECK_FALSE(resultant(f, g, "t3").is_zero());
    }
}

TEST_CASE("Bareiss equals cofactor, 1000 cases") {
    std::uniform_int_distribution<int> dim(1, 4), cf(-4, 4), pick(0, 5);
    auto u = U();
    for (int i = 0; i < 1000; ++i) {
        std::size_t n = static_cast<std::size_t>(dim(rng));
        PolyMatrix m(n, n, u);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                Polynomial e = Polynomial::constant(u, cf(rng));
                if (pick(rng) == 0) e = e * Polynomial::variable(u, "s1");
                if (pick(rng) == 1) e = e + Polynomial::variable(u, "t1");
                m.at(r, c) = e;
            }
        CHECK(determinant_bareiss(m) == determinant_cofactor(m));
    }
}

TEST_CASE("resultant multiplicativity up to sign") {
    for (int i = 0; i < 100; ++i) {
        Polynomial f = random_univariate("t3", 2, 3);
        Polynomial g = random_univariate("t3", 2, 3);
        Polynomial h = random_univariate("t3", 1, 3);
        CHECK(equal_up_to_sign(resultant(f * h, g, "t3"),
                               resultant(f, g, "t3") * resultant(h, g, "t3")));
    }
}

TEST_CASE("eliminate a variable from two linear equations") {
    auto rep = eliminate({P("t3 - t1"), P("t3 - t2")}, {"t3"},
                         StripPolicy{true, false, false, {"t1", "t2"}});
    CHECK(equal_up_to_sign(rep.result, P("t1 - t2")));
    CHECK(rep.eliminated == std::vector<std::string>{"t3"});
    CHECK(rep.steps.size() == 1);
}

TEST_CASE("eliminate applies the strip policy and logs it") {
    // res = s1*t1*(1 - s2); the s1 atom is stripped, (1 - s2) must stay.
    Polynomial f = P("s1*t3 - t1");
    Polynomial g = P("s1*t3 - s2*t1");
    auto rep = eliminate({f, g}, {"t3"}, StripPolicy{true, true, true, {"t1"}});
    CHECK(equal_up_to_sign(rep.result, P("t1 - s2*t1")));
    CHECK(rep.result.mentions("s2"));
    CHECK_FALSE(rep.result.mentions("s1"));
    bool logged = false;
    for (const auto& sf : rep.steps[0].stripped)
        if (sf.reason == "free of targets") logged = true;
    CHECK(logged);
    CHECK_FALSE(rep.to_text().empty());
}

TEST_CASE("rank over the function field") {
    auto u = U();
    PolyMatrix id(4, 4, u);
    for (int i = 0; i < 4; ++i) id.at(i, i) = P("1");
    CHECK(rank_over_function_field(id) == 4);

    PolyMatrix m(3, 3, u);
    for (std::size_t c = 0; c < 3; ++c) {
        Polynomial e = P("s1") * Polynomial::constant(u, static_cast<long>(c + 1)) + P("s2");
        m.at(0, c) = e;
        m.at(1, c) = e;  // duplicate row
        m.at(2, c) = P("t1") * Polynomial::constant(u, static_cast<long>(c * c + 1));
    }
    CHECK(rank_over_function_field(m) < 3);
}

TEST_CASE("recover_rational_root finds the shared root") {
    auto u = U();
    Polynomial x = P("t3"), uu = P("s1");
    Polynomial f = (x - uu) * (x - P("1"));
    Polynomial g = (x - uu) * (x - P("2"));
    auto root = recover_rational_root(f, g, "t3");
    CHECK(root == RationalExpression(uu));

    auto root2 = recover_rational_root(P("3*t3 - 3*s1"), P("t3 - s1"), "t3");
    CHECK(root2 == RationalExpression(uu));

    // f(root) = 0 after clearing denominators.
    Polynomial cleared = substitute_clearing(f, "t3", root.numerator(), root.denominator());
    CHECK(cleared.is_zero());
}

TEST_CASE("recover_rational_root rejects wrong rank") {
    CHECK_THROWS_AS(recover_rational_root(P("t3^2 - s1"), P("t3^2 - s2"), "t3"),
                    std::domain_error);
}

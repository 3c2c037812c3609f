#include "doctest.h"

#include <random>
#include <set>

#include "bricard/parse.hpp"

using namespace bricard;

namespace {

UniversePtr U() { return standard_universe(); }

std::mt19937 rng(77001);

Polynomial random_poly() {
    auto u = U();
    std::uniform_int_distribution<int> nt(0, 6), ex(0, 4), cf(-20, 20), vi(0, 8);
    std::vector<Term> terms;
    int n = nt(rng);
    for (int i = 0; i < n; ++i) {
        Monomial m(u->size());
        int nv = std::uniform_int_distribution<int>(0, 3)(rng);
        for (int j = 0; j < nv; ++j) m[static_cast<std::size_t>(vi(rng))] = static_cast<std::uint16_t>(ex(rng));
        Q c(cf(rng), 1 + std::uniform_int_distribution<int>(0, 5)(rng));
        terms.push_back({m, c});
    }
    return Polynomial::from_terms(u, std::move(terms));
}

}  // namespace

TEST_CASE("parse basic polynomials") {
    auto u = U();
    Polynomial p = parse_polynomial("-4*s2*s7", u);
    CHECK(p == Polynomial::variable(u, "s2") * Polynomial::variable(u, "s7") *
                   Polynomial::constant(u, -4));
    CHECK(parse_polynomial("t1^2 + 1", u).degree_in("t1") == 2);
    CHECK(parse_polynomial("(t1 + 1)^3 - t1^3 - 3*t1^2 - 3*t1 - 1", u).is_zero());
    CHECK(parse_polynomial("1/2 * t1", u) ==
          Polynomial::variable(u, "t1") * Polynomial::constant(u, Q(1, 2)));
    CHECK(parse_polynomial("--t1", u) == Polynomial::variable(u, "t1"));
    CHECK(parse_polynomial("2 - -3", u).constant_value() == 5);
}

TEST_CASE("division rejected in polynomial positions") {
    auto u = U();
    CHECK_THROWS_AS(parse_polynomial("s1/s2", u), ParseError);
    CHECK_THROWS_AS(parse_polynomial("t1 +", u), ParseError);
    CHECK_THROWS_AS(parse_polynomial("t1^(2)", u), ParseError);
    CHECK_THROWS_AS(parse_polynomial("nosuch + 1", u), ParseError);
    CHECK_THROWS_AS(parse_polynomial("t1 t2", u), ParseError);
    // ...but exact cancellation is fine.
    CHECK(parse_polynomial("(s1^2 - s2^2)/(s1 - s2)", u) ==
          parse_polynomial("s1 + s2", u));
}

TEST_CASE("rational parsing") {
    auto u = U();
    auto r = parse_rational("(b*s3)/(b - e)", u);
    CHECK(r.numerator() == parse_polynomial("b*s3", u));
    CHECK(r.denominator() == parse_polynomial("b - e", u));
    CHECK_THROWS_AS(parse_rational("1/(e - e)", u), std::invalid_argument);
}

TEST_CASE("print then parse is the identity, 1000 cases") {
    auto u = U();
    for (int i = 0; i < 1000; ++i) {
        Polynomial p = random_poly();
        CHECK(parse_polynomial(p.to_string(), u) == p);
        Polynomial q = random_poly();
        if (q.is_zero()) continue;
        auto r = RationalExpression::of(p, q);
        auto back = parse_rational(r.to_string(), u);
        CHECK(back == r);
    }
}

TEST_CASE("table parsing") {
    auto u = U();
    std::string text =
        "# certificate\n"
        "s9 = (b*s3)/(b - e)\n"
        "s6^2 = (s3^2*b)/e  # squared relation\n";
    SolutionTable t = parse_table(text, u);
    REQUIRE(t.relations.size() == 2);
    CHECK(t.relations[0].target == "s9");
    CHECK(t.relations[0].power == 1);
    CHECK(t.relations[1].target == "s6");
    CHECK(t.relations[1].power == 2);
    auto fv = t.free_variables();
    CHECK(std::set<std::string>(fv.begin(), fv.end()) ==
          std::set<std::string>{"b", "e", "s3"});
    CHECK(parse_table(t.to_string(), u) == t);

    CHECK_THROWS_AS(parse_table("s1 = s2\ns1 = s3\n", u), ParseError);
    CHECK_THROWS_AS(parse_table("s1 = s1 + 1\n", u), ParseError);

    auto multi = parse_tables("s1 = s2\n\ns1 = s3\n", u);
    CHECK(multi.size() == 2);
}

TEST_CASE("sides parsing") {
    auto s = parse_sides("s1 = 3/2\nb = 3\ne = -1/4 # comment\n");
    CHECK(s.at("s1") == Q(3, 2));
    CHECK(s.at("b") == 3);
    CHECK(s.at("e") == Q(-1, 4));
    CHECK_THROWS_AS(parse_sides("s1 = x\n"), ParseError);
}

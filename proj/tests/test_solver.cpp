#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "bricard/model.hpp"
#include "bricard/parse.hpp"
#include "bricard/solver.hpp"

using namespace bricard;

namespace {

Polynomial P(const std::string& s) { return parse_polynomial(s, standard_universe()); }

bool has_relation(const std::vector<Relation>& rs, const std::string& line) {
    SolutionTable probe = parse_table(line, standard_universe());
    return std::find(rs.begin(), rs.end(), probe.relations.front()) != rs.end();
}

bool has_table(const std::vector<SolutionTable>& tables, const std::string& text) {
    SolutionTable want = canonicalize(parse_table(text, standard_universe()));
    for (const auto& t : tables)
        if (t == want) return true;
    return false;
}

}  // namespace

TEST_CASE("kill_candidates solves linear parameters") {
    auto rs = kill_candidates(P("s9*s8 - s7*s6"), {});
    CHECK(has_relation(rs, "s9 = (s7*s6)/s8"));
    CHECK(has_relation(rs, "s8 = (s7*s6)/s9"));
    CHECK(has_relation(rs, "s7 = (s9*s8)/s6"));
    CHECK(has_relation(rs, "s6 = (s9*s8)/s7"));
    CHECK(rs.size() == 4);
}

TEST_CASE("kill_candidates splits differences of squares and keeps the even-power relation") {
    auto rs = kill_candidates(P("s4^2 - s3^2"), {});
    CHECK(has_relation(rs, "s4 = s3"));
    CHECK(has_relation(rs, "s4 = -s3"));
    CHECK(has_relation(rs, "s4^2 = s3^2"));
    CHECK(has_relation(rs, "s3^2 = s4^2"));
}

TEST_CASE("kill_candidates respects the forbidden set") {
    auto rs = kill_candidates(P("s9*s8 - s7*s6"), {"s9", "s8"});
    for (const auto& r : rs) {
        CHECK(r.target != "s9");
        CHECK(r.target != "s8");
    }
    CHECK(rs.size() == 2);
}

TEST_CASE("kill_candidates on a nonzero constant is empty") {
    CHECK(kill_candidates(P("5"), {}).empty());
}

TEST_CASE("solve reproduces the three-relation toy table") {
    Polynomial p = P("(s9*s8 - s7*s6)*t^2 + (s4^2 - s3^2)*t + (s8 - s6)");
    SearchConfig cfg;
    cfg.suppress_splits = false;  // toy problem, no geometry attached
    auto tables = solve(p, "t", cfg);
    REQUIRE(!tables.empty());
    CHECK(has_table(tables, "s9 = s7\ns8 = s6\ns4 = s3"));
    for (const auto& t : tables) {
        auto v = verify_table(p, t);
        CHECK(v.zero);
    }
}

TEST_CASE("solve on t + 1 finds nothing") {
    SearchConfig cfg;
    cfg.suppress_splits = false;
    CHECK(solve(P("t + 1"), "t", cfg).empty());
}

TEST_CASE("solve result is deterministic across thread counts") {
    Polynomial p = P("(s9*s8 - s7*s6)*t^2 + (s4^2 - s3^2)*t + (s8 - s6)");
    SearchConfig cfg;
    cfg.suppress_splits = false;
    auto seq = solve(p, "t", cfg);
    cfg.threads = 4;
    auto par = solve(p, "t", cfg);
    REQUIRE(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) CHECK(seq[i] == par[i]);
}

TEST_CASE("verify_table on the empty table returns the polynomial itself") {
    Polynomial p = P("s1*t + s2");
    auto v = verify_table(p, SolutionTable{});
    CHECK(!v.zero);
    CHECK(v.residual == p);
}

TEST_CASE("verify_table applies relations in dependency order") {
    // s9's rhs mentions s8, so s9 must be substituted first.
    Polynomial p = P("s9*s8 - s7*s6");
    SolutionTable t = parse_table("s9 = (s7*s6)/s8\ns8 = s6", standard_universe());
    CHECK(verify_table(p, t).zero);
}

TEST_CASE("verify_table rejects cyclic dependencies") {
    SolutionTable t = parse_table("s9 = s8\ns8 = s9 + s1", standard_universe());
    CHECK_THROWS_AS(verify_table(P("s9 - s8"), t), std::domain_error);
}

TEST_CASE("verify_table applies power-2 relations per exponent residue class") {
    Polynomial p = P("s6^2 - s3^2");
    SolutionTable t = parse_table("s6^2 = s3^2", standard_universe());
    CHECK(verify_table(p, t).zero);
    // Odd occurrences survive: s6 - s3 is not annihilated by s6^2 = s3^2.
    auto v = verify_table(P("s6 - s3"), t);
    CHECK(!v.zero);
    // Mixed parity: s6^3 - s6*s3^2 = s6*(s6^2 - s3^2) is annihilated.
    CHECK(verify_table(P("s6^3 - s6*s3^2"), t).zero);
}

TEST_CASE("canonicalize sorts relations and identifies permuted tables") {
    auto u = standard_universe();
    SolutionTable a = parse_table("s9 = s7\ns4 = s3", u);
    SolutionTable b = parse_table("s4 = s3\ns9 = s7", u);
    CHECK(canonicalize(a) == canonicalize(b));
    // Sign normal form: (b*s3)/(b-e) == (-b*s3)/(e-b).
    SolutionTable c = parse_table("s9 = (b*s3)/(b - e)", u);
    SolutionTable d = parse_table("s9 = (-b*s3)/(e - b)", u);
    CHECK(canonicalize(c) == canonicalize(d));
}

TEST_CASE("isohexagon_check accepts the section-7 isohexagon table") {
    SolutionTable iso = parse_table(
        "s9 = (b*s3)/(b - e)\n"
        "s8 = (s2*(e - b))/e\n"
        "s7 = (e*s1)/b\n"
        "s6 = (s1*(b - e))/b\n"
        "s5 = (e*s3)/(b - e)\n"
        "s4 = (b*s2)/e",
        standard_universe());
    CHECK(isohexagon_check(iso));
}

TEST_CASE("isohexagon_check rejects the non-isohexagon table") {
    SolutionTable noniso = parse_table(
        "s9 = (s3*b*(b - e)*(s2^2 - e^2))/(e^2*(s6^2 - s3^2))\n"
        "s8 = (s2*(e - b))/e\n"
        "s7 = (e*s6)/(b - e)\n"
        "s5 = (e*s3)/(b - e)\n"
        "s4 = (-b*s2)/e\n"
        "s1 = (-s6*b*(b - e)*(s2^2 - e^2))/(e^2*(s6^2 - s3^2))",
        standard_universe());
    CHECK(!isohexagon_check(noniso));
}

TEST_CASE("solver property suite: soundness and determinism on random coefficients") {
    std::mt19937 rng(20240506);
    auto u = standard_universe();
    const char* params[] = {"s1", "s2", "s3", "s4", "s6", "s7", "s8", "s9"};
    int checked = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        // Random small polynomial c2*t^2 + c1*t + c0 with monomial-difference
        // coefficients, which the search can always finish quickly.
        auto mono = [&]() {
            Polynomial m = Polynomial::constant(u, 1);
            int len = 1 + static_cast<int>(rng() % 2);
            for (int k = 0; k < len; ++k)
                m = m * Polynomial::variable(u, params[rng() % 8]);
            return m;
        };
        Polynomial t = Polynomial::variable(u, "t");
        Polynomial p = (mono() - mono()) * t * t + (mono() - mono()) * t + (mono() - mono());
        if (p.degree_in("t") <= 0) continue;
        SearchConfig cfg;
        cfg.suppress_splits = false;
        cfg.suppress_degenerate = false;
        cfg.max_depth = 4;
        auto tables = solve(p, "t", cfg);
        for (const auto& table : tables) {
            auto v = verify_table(p, table);
            CHECK(v.zero);
        }
        cfg.threads = 2;
        auto par = solve(p, "t", cfg);
        CHECK(tables.size() == par.size());
        ++checked;
    }
    CHECK(checked >= 900);
}

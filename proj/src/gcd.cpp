#include <algorithm>
#include <numeric>
#include <vector>

#include "bricard/polynomial.hpp"

namespace bricard {

namespace {

Q rational_gcd(const Q& a, const Q& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    Z n, d;
    mpz_gcd(n.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(d.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    Q r(n, d);
    r.canonicalize();
    return abs(r);
}

// Coefficient list wrt one variable, ascending degree; empty = zero.
std::vector<Polynomial> coeff_list(const Polynomial& p, std::size_t var) {
    int d = p.degree_in(var);
    if (d < 0) return {};
    std::vector<Polynomial> out(static_cast<std::size_t>(d) + 1, Polynomial(p.universe()));
    for (auto& [deg, c] : p.coefficients_wrt(var)) out[deg] = c;
    return out;
}

Polynomial reassemble(const std::vector<Polynomial>& coeffs, std::size_t var,
                      const UniversePtr& u) {
    Polynomial x = Polynomial::variable(u, u->name(var));
    Polynomial acc(u);
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        acc = acc * x + coeffs[k];
    }
    return acc;
}

void trim(std::vector<Polynomial>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Pseudo-remainder lc(b)^(dega-degb+1) * (a mod b) wrt var, both given as
// ascending coefficient lists.
std::vector<Polynomial> prem(std::vector<Polynomial> a, const std::vector<Polynomial>& b) {
    const Polynomial& lcb = b.back();
    int expected = static_cast<int>(a.size()) - static_cast<int>(b.size()) + 1;
    int done = 0;
    while (!a.empty() && a.size() >= b.size()) {
        Polynomial lca = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& c : a) c = c * lcb;
        ++done;
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            a[i + shift] = a[i + shift] - lca * b[i];
        a.pop_back();
        trim(a);
    }
    if (done < expected && !a.empty()) {
        Polynomial f = lcb.pow(static_cast<unsigned>(expected - done));
        for (auto& c : a) c = c * f;
    }
    return a;
}

Polynomial content_wrt(const Polynomial& p, std::size_t var);
Polynomial gcd_primitive(Polynomial p, Polynomial q);

Polynomial content_wrt(const Polynomial& p, std::size_t var) {
    Polynomial c(p.universe());
    for (auto& [deg, coeff] : p.coefficients_wrt(var)) {
        c = gcd_primitive(c, coeff.primitive_part());
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

// Deterministic evaluation points for the trivial-gcd certificate.
const int kEvalPoints[][6] = {
    {3, 5, 7, 11, 13, 17},
    {19, 23, 29, 31, 37, 41},
    {43, 47, 53, 59, 61, 67},
};

std::vector<Q> univariate_image(const Polynomial& p, std::size_t var, int trial) {
    const auto& u = *p.universe();
    std::vector<Q> vals(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const int* pts = kEvalPoints[trial % 3];
        vals[i] = Q(pts[i % 6] + static_cast<int>(i) * (trial + 1));
    }
    int d = p.degree_in(var);
    std::vector<Q> img(static_cast<std::size_t>(std::max(d, 0)) + 1, Q(0));
    for (const auto& t : p.terms()) {
        Q prod = t.coeff;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (i == var) continue;
            for (unsigned k = 0; k < t.mono[i]; ++k) prod *= vals[i];
        }
        img[t.mono[var]] += prod;
    }
    return img;
}

int univariate_gcd_degree(std::vector<Q> a, std::vector<Q> b) {
    auto deg = [](const std::vector<Q>& v) {
        for (std::size_t i = v.size(); i-- > 0;)
            if (v[i] != 0) return static_cast<int>(i);
        return -1;
    };
    while (deg(b) >= 0) {
        int da = deg(a), db = deg(b);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        Q f = a[da] / b[db];
        for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
        a.resize(static_cast<std::size_t>(deg(a)) + 1);
        if (deg(a) < deg(b)) std::swap(a, b);
    }
    return deg(a);
}

// True when evaluation images certify that p and q share no factor of
// positive degree in any variable (so their primitive gcd is constant).
bool certify_trivial_gcd(const Polynomial& p, const Polynomial& q) {
    auto vars_p = p.variables_present();
    auto vars_q = q.variables_present();
    std::vector<std::size_t> common;
    std::set_intersection(vars_p.begin(), vars_p.end(), vars_q.begin(), vars_q.end(),
                          std::back_inserter(common));
    // A common factor mentioning a var outside the intersection is impossible.
    for (std::size_t v : common) {
        bool certified = false;
        for (int trial = 0; trial < 3 && !certified; ++trial) {
            auto img_p = univariate_image(p, v, trial);
            auto img_q = univariate_image(q, v, trial);
            // Need at least one leading coefficient to survive evaluation.
            bool lead_ok = (img_p.back() != 0) || (img_q.back() != 0);
            if (!lead_ok) continue;
            if (univariate_gcd_degree(img_p, img_q) == 0) certified = true;
        }
        if (!certified) return false;
    }
    return true;
}

// GCD of integer-primitive polynomials, result primitive with positive lead.
Polynomial gcd_primitive(Polynomial p, Polynomial q) {
    const UniversePtr& u = p.universe();
    if (p.is_zero()) return q.is_zero() ? q : q.primitive_part();
    if (q.is_zero()) return p.primitive_part();
    if (p.is_constant() || q.is_constant()) return Polynomial::constant(u, 1);
    if (p == q) return p.primitive_part();

    if (p.term_count() + q.term_count() > 40 && certify_trivial_gcd(p, q))
        return Polynomial::constant(u, 1);

    // Main variable: the most significant variable present in either.
    auto vars_p = p.variables_present();
    auto vars_q = q.variables_present();
    std::size_t var = std::max(vars_p.back(), vars_q.back());

    bool in_p = p.mentions(var), in_q = q.mentions(var);
    if (in_p && !in_q) return gcd_primitive(content_wrt(p, var), q);
    if (!in_p && in_q) return gcd_primitive(p, content_wrt(q, var));

    Polynomial cp = content_wrt(p, var);
    Polynomial cq = content_wrt(q, var);
    Polynomial c = gcd_primitive(cp, cq);
    Polynomial pp = p.divided_by(cp);
    Polynomial qq = q.divided_by(cq);

    auto a = coeff_list(pp, var);
    auto b = coeff_list(qq, var);
    if (a.size() < b.size()) std::swap(a, b);

    // Subresultant polynomial remainder sequence.
    Polynomial g = Polynomial::constant(u, 1);
    Polynomial h = Polynomial::constant(u, 1);
    while (true) {
        unsigned delta = static_cast<unsigned>(a.size() - b.size());
        auto r = prem(a, b);
        if (r.empty()) break;
        if (r.size() == 1) {
            // Nontrivial remainder of degree 0: coprime in var.
            return c;
        }
        Polynomial divisor = g * h.pow(delta);
        a = std::move(b);
        b = std::move(r);
        for (auto& coeff : b) coeff = coeff.divided_by(divisor);
        g = a.back();
        if (delta > 0) h = g.pow(delta).divided_by(h.pow(delta - 1));
    }
    Polynomial result = reassemble(b, var, u);
    result = result.divided_by(content_wrt(result, var));
    return (c * result).primitive_part();
}

}  // namespace

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero()) return q.primitive_part() * abs(q.content());
    if (q.is_zero()) return p.primitive_part() * abs(p.content());
    Q cgcd = rational_gcd(p.content(), q.content());
    Polynomial g = gcd_primitive(p.primitive_part(), q.primitive_part());
    return g * cgcd;
}

}  // namespace bricard

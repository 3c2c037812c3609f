#include "bricard/elim.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace bricard {

namespace {

Polynomial minor_det(const PolyMatrix& m, std::vector<std::size_t> rows,
                     std::vector<std::size_t> cols);

Polynomial minor_det(const PolyMatrix& m, std::vector<std::size_t> rows,
                     std::vector<std::size_t> cols) {
    const auto& u = m.at(0, 0).universe();
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    Polynomial det = Polynomial::zero(u);
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Polynomial& e = m.at(rows[0], cols[j]);
        if (e.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (k != j) sub_cols.push_back(cols[k]);
        Polynomial term = e * minor_det(m, sub_rows, sub_cols);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

}  // namespace

Polynomial determinant_cofactor(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    std::vector<std::size_t> idx(m.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return minor_det(m, idx, idx);
}

Polynomial determinant_bareiss(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m.rows();
    const auto& u = m.at(0, 0).universe();
    std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n, Polynomial::zero(u)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    int sign = 1;
    Polynomial prev = Polynomial::constant(u, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return Polynomial::zero(u);
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = num.divided_by(prev);  // exact by Bareiss' identity
            }
            a[i][k] = Polynomial::zero(u);
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

Polynomial determinant(const PolyMatrix& m) {
    return m.rows() <= 4 ? determinant_cofactor(m) : determinant_bareiss(m);
}

namespace {

// Laplace expansion along a block of rows: sum over column subsets of
// minor(rows, cols) * minor(other rows, other cols) * sign.  Pays off when
// one small block of rows carries all the large entries.
Polynomial determinant_laplace(const PolyMatrix& m, const std::vector<std::size_t>& rows) {
    std::size_t n = m.rows(), k = rows.size();
    std::vector<bool> in_rows(n, false);
    for (std::size_t r : rows) in_rows[r] = true;
    std::vector<std::size_t> other_rows;
    for (std::size_t r = 0; r < n; ++r)
        if (!in_rows[r]) other_rows.push_back(r);

    unsigned row_sum = 0;
    for (std::size_t r : rows) row_sum += static_cast<unsigned>(r);

    Polynomial det = Polynomial::zero(m.at(0, 0).universe());
    std::vector<std::size_t> cols(k);
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    while (true) {
        Polynomial minor = minor_det(m, rows, cols);
        if (!minor.is_zero()) {
            std::vector<bool> in_cols(n, false);
            for (std::size_t c : cols) in_cols[c] = true;
            std::vector<std::size_t> other_cols;
            for (std::size_t c = 0; c < n; ++c)
                if (!in_cols[c]) other_cols.push_back(c);
            unsigned col_sum = 0;
            for (std::size_t c : cols) col_sum += static_cast<unsigned>(c);
            Polynomial term = minor * minor_det(m, other_rows, other_cols);
            det = ((row_sum + col_sum) % 2 == 0) ? det + term : det - term;
        }
        // Next k-combination of columns.
        std::size_t i = k;
        while (i > 0 && cols[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cols[i - 1];
        for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
    return det;
}

}  // namespace

PolyMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g, const std::string& var) {
    int n = f.degree_in(var), mdeg = g.degree_in(var);
    if (n <= 0 || mdeg <= 0)
        throw std::invalid_argument("sylvester_matrix needs positive degree in " + var);
    const auto& u = f.universe();
    std::size_t v = u->index_of(var);
    std::size_t N = static_cast<std::size_t>(n + mdeg);
    PolyMatrix s(N, N, u);
    for (int row = 0; row < mdeg; ++row)
        for (int k = 0; k <= n; ++k)
            s.at(static_cast<std::size_t>(row), static_cast<std::size_t>(row + k)) =
                f.coefficient_of(v, static_cast<unsigned>(n - k));
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= mdeg; ++k)
            s.at(static_cast<std::size_t>(mdeg + row), static_cast<std::size_t>(row + k)) =
                g.coefficient_of(v, static_cast<unsigned>(mdeg - k));
    return s;
}

Polynomial resultant(const Polynomial& f, const Polynomial& g, const std::string& var) {
    PolyMatrix s = sylvester_matrix(f, g, var);
    if (s.rows() <= 4) return determinant_cofactor(s);
    // The f-block is the first deg(g) rows, the g-block the last deg(f).
    // Expand along the smaller block: it holds the higher-degree (and in the
    // elimination pipeline, far larger) polynomial's coefficients.
    std::size_t frows = static_cast<std::size_t>(g.degree_in(var));
    std::size_t grows = static_cast<std::size_t>(f.degree_in(var));
    if (frows == grows) return determinant_bareiss(s);
    std::vector<std::size_t> block;
    if (frows < grows)
        for (std::size_t r = 0; r < frows; ++r) block.push_back(r);
    else
        for (std::size_t r = frows; r < frows + grows; ++r) block.push_back(r);
    return determinant_laplace(s, block);
}

namespace {

// Content of p viewed as a polynomial in the given variables: gcd of the
// coefficient polynomials.
Polynomial content_wrt_set(const Polynomial& p, const std::set<std::size_t>& vars) {
    std::map<std::vector<std::uint16_t>, std::vector<Term>> groups;
    for (const auto& t : p.terms()) {
        std::vector<std::uint16_t> key(t.mono.size(), 0);
        Monomial rest = t.mono;
        for (std::size_t v : vars) {
            key[v] = rest[v];
            rest[v] = 0;
        }
        groups[key].push_back({rest, t.coeff});
    }
    Polynomial c = Polynomial::zero(p.universe());
    for (auto& [key, terms] : groups) {
        c = poly_gcd(c, Polynomial::from_terms(p.universe(), std::move(terms)));
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

// Atoms that are nonzero under the side constraints: every side, b-e,
// s7-s1, s3-s9, s2-s8.
std::vector<Polynomial> nonzero_atoms(const UniversePtr& u) {
    std::vector<Polynomial> atoms;
    for (const char* n : {"s1", "s2", "s3", "s4", "s5", "s6", "s7", "s8", "s9", "e", "b"})
        atoms.push_back(Polynomial::variable(u, n));
    auto v = [&](const char* n) { return Polynomial::variable(u, n); };
    atoms.push_back(v("b") - v("e"));
    atoms.push_back(v("s7") - v("s1"));
    atoms.push_back(v("s3") - v("s9"));
    atoms.push_back(v("s2") - v("s8"));
    return atoms;
}

// --- Modular certificates (prime 2^61-1) -----------------------------------
//
// Above kExactGcdTermLimit terms, the exact gcd computations in the strip
// policy are first screened with univariate images modulo a large prime at
// deterministic pseudo-random points.  The image of a gcd divides the gcd of
// the images, so a degree-0 image gcd certifies that nothing would be
// stripped; only then is the exact computation skipped.  A certificate can
// fail to fire on strippable input only when every relevant coefficient
// vanishes at the evaluation point (probability ~ deg/2^61 per trial), and a
// missed strip leaves a factor in place rather than producing a wrong result.

constexpr std::size_t kExactGcdTermLimit = 2000;

namespace modcert {

constexpr std::uint64_t kPrime = 2305843009213693951ull;  // 2^61 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    a %= kPrime;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t coeff_mod(const Q& q) {
    std::uint64_t n = mpz_fdiv_ui(q.get_num().get_mpz_t(), kPrime);
    std::uint64_t d = mpz_fdiv_ui(q.get_den().get_mpz_t(), kPrime);
    return mulmod(n, powmod(d, kPrime - 2));  // Fermat inverse
}

// Deterministic point for a given trial (splitmix64).
std::vector<std::uint64_t> eval_point(std::size_t nvars, int trial) {
    std::uint64_t state = 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(trial + 1);
    std::vector<std::uint64_t> pt(nvars);
    for (auto& x : pt) {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        x = (z ^ (z >> 31)) % kPrime;
        if (x == 0) x = 1;
    }
    return pt;
}

int poly_deg(const std::vector<std::uint64_t>& v) {
    for (std::size_t i = v.size(); i-- > 0;)
        if (v[i]) return static_cast<int>(i);
    return -1;
}

int gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
    while (poly_deg(b) >= 0) {
        int da = poly_deg(a), db = poly_deg(b);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        std::uint64_t f = mulmod(a[da], powmod(b[db], kPrime - 2));
        for (int i = 0; i <= db; ++i) {
            std::uint64_t s = mulmod(f, b[i]);
            a[da - db + i] = (a[da - db + i] + kPrime - s) % kPrime;
        }
        if (poly_deg(a) < poly_deg(b)) std::swap(a, b);
    }
    return poly_deg(a);
}

// Power tables for one evaluation point, up to the maximum exponent in p.
std::vector<std::vector<std::uint64_t>> power_tables(const Polynomial& p,
                                                     const std::vector<std::uint64_t>& pt) {
    unsigned maxdeg = 0;
    for (const auto& t : p.terms())
        for (auto e : t.mono.exponents()) maxdeg = std::max<unsigned>(maxdeg, e);
    std::vector<std::vector<std::uint64_t>> pw(pt.size(),
                                               std::vector<std::uint64_t>(maxdeg + 1, 1));
    for (std::size_t v = 0; v < pt.size(); ++v)
        for (unsigned d = 1; d <= maxdeg; ++d) pw[v][d] = mulmod(pw[v][d - 1], pt[v]);
    return pw;
}

// Univariate image of p in `var` with every other variable evaluated.
std::vector<std::uint64_t> univariate_image(const Polynomial& p, std::size_t var, int trial) {
    auto pt = eval_point(p.universe()->size(), trial);
    auto pw = power_tables(p, pt);
    std::vector<std::uint64_t> img(static_cast<std::size_t>(std::max(p.degree_in(var), 0)) + 1,
                                   0);
    for (const auto& t : p.terms()) {
        std::uint64_t m = coeff_mod(t.coeff);
        const auto& ex = t.mono.exponents();
        for (std::size_t v = 0; v < ex.size(); ++v)
            if (ex[v] && v != var) m = mulmod(m, pw[v][ex[v]]);
        img[t.mono[var]] = (img[t.mono[var]] + m) % kPrime;
    }
    return img;
}

// True when, for each non-target variable, the gcd of the images of the
// target-coefficient groups is certified constant: the content of p with
// respect to target_vars is then constant.
bool certify_trivial_content(const Polynomial& p, const std::set<std::size_t>& target_vars) {
    const auto& u = *p.universe();
    for (std::size_t v : p.variables_present()) {
        if (target_vars.count(v)) continue;
        bool certified = false;
        for (int trial = 0; trial < 3 && !certified; ++trial) {
            auto pt = eval_point(u.size(), trial);
            auto pw = power_tables(p, pt);
            // One image per target-exponent group, accumulated in one pass.
            std::map<std::vector<std::uint16_t>, std::vector<std::uint64_t>> groups;
            std::size_t width = static_cast<std::size_t>(std::max(p.degree_in(v), 0)) + 1;
            for (const auto& t : p.terms()) {
                std::vector<std::uint16_t> key;
                for (std::size_t tv : target_vars) key.push_back(t.mono[tv]);
                auto& img = groups[key];
                if (img.empty()) img.assign(width, 0);
                std::uint64_t m = coeff_mod(t.coeff);
                const auto& ex = t.mono.exponents();
                for (std::size_t w = 0; w < ex.size(); ++w)
                    if (ex[w] && w != v && !target_vars.count(w)) m = mulmod(m, pw[w][ex[w]]);
                img[t.mono[v]] = (img[t.mono[v]] + m) % kPrime;
            }
            std::vector<std::uint64_t> g;
            bool first = true;
            for (auto& [key, img] : groups) {
                if (first) {
                    g = img;
                    first = false;
                } else if (gcd_degree(g, img) == 0) {
                    certified = true;
                    break;
                } else {
                    // Fold: keep the shorter operand as the running gcd proxy.
                    if (poly_deg(img) < poly_deg(g)) g.swap(img);
                }
            }
            if (!certified && poly_deg(g) == 0) certified = true;
        }
        if (!certified) return false;
    }
    return true;
}

// True when an image certifies gcd(p, dp/d var) constant.
bool certify_squarefree(const Polynomial& p, std::size_t var) {
    for (int trial = 0; trial < 3; ++trial) {
        auto f = univariate_image(p, var, trial);
        if (poly_deg(f) != p.degree_in(var)) continue;  // leading coeff vanished
        std::vector<std::uint64_t> fd(f.size() > 1 ? f.size() - 1 : 0);
        for (std::size_t k = 1; k < f.size(); ++k) fd[k - 1] = mulmod(f[k], k % kPrime);
        if (gcd_degree(f, fd) == 0) return true;
    }
    return false;
}

// True when p certifiably does not vanish identically on the zero set of a
// binomial atom x ± y (so the atom cannot divide p).
bool certify_not_divisible(const Polynomial& p, const Polynomial& atom) {
    // atom = x - y or x + y (or x - const); constrain x in terms of the rest.
    std::size_t x = atom.variables_present().back();
    for (int trial = 0; trial < 2; ++trial) {
        auto pt = eval_point(p.universe()->size(), trial + 7);
        // Solve atom(pt) = 0 for variable x: atom is linear in x.
        std::uint64_t cx = 0, rest = 0;
        for (const auto& t : atom.terms()) {
            std::uint64_t m = coeff_mod(t.coeff);
            const auto& ex = t.mono.exponents();
            bool has_x = ex[x] > 0;
            for (std::size_t v = 0; v < ex.size(); ++v)
                if (ex[v] && v != x) m = mulmod(m, powmod(pt[v], ex[v]));
            if (has_x)
                cx = (cx + m) % modcert::kPrime;
            else
                rest = (rest + m) % modcert::kPrime;
        }
        if (cx == 0) continue;
        pt[x] = mulmod((kPrime - rest) % kPrime, powmod(cx, kPrime - 2));
        auto pw = power_tables(p, pt);
        std::uint64_t acc = 0;
        for (const auto& t : p.terms()) {
            std::uint64_t m = coeff_mod(t.coeff);
            const auto& ex = t.mono.exponents();
            for (std::size_t v = 0; v < ex.size(); ++v)
                if (ex[v]) m = mulmod(m, pw[v][ex[v]]);
            acc = (acc + m) % kPrime;
        }
        if (acc != 0) return true;
    }
    return false;
}

}  // namespace modcert

Polynomial apply_strip(Polynomial p, const StripPolicy& policy,
                       const std::set<std::size_t>& target_vars, EliminationStep& step) {
    const auto& u = p.universe();
    if (p.is_zero()) return p;

    if (policy.integer_content) {
        Q c = p.content();
        if (c != 1) {
            step.stripped.push_back({Polynomial::constant(u, c), 1, "integer content"});
            p = p.primitive_part();
        }
    }

    if (policy.squarefree) {
        // Derivative taken in the leading protected variable present.
        std::optional<std::size_t> dv;
        for (std::size_t v : target_vars)
            if (p.mentions(v)) {
                dv = v;
                break;
            }
        bool certified_clean =
            dv && p.term_count() > kExactGcdTermLimit &&
            modcert::certify_trivial_content(p, target_vars) &&
            modcert::certify_squarefree(p, *dv);
        if (dv && !certified_clean) {
            // Work on the target-primitive part so target-free content is
            // left to the guarded removal below.
            Polynomial c = content_wrt_set(p, target_vars);
            Polynomial pp = c.is_constant() ? p : p.divided_by(c);
            Polynomial g = poly_gcd(pp, pp.derivative(*dv));
            if (!g.is_constant()) {
                step.stripped.push_back({g, 1, "repeated factor"});
                p = pp.divided_by(g) * c;
            }
        }
    }

    if (policy.drop_free_factors) {
        // Atoms are free of the target variables, so an atom divides p
        // exactly when it divides the target-free content; trial division of
        // p itself avoids ever materializing that content.
        bool any = false;
        for (const Polynomial& atom : nonzero_atoms(u)) {
            unsigned mult = 0;
            if (atom.term_count() == 1) {
                // Single variable: multiplicity is the minimum exponent.
                std::size_t v = atom.variables_present().front();
                unsigned minexp = ~0u;
                for (const auto& t : p.terms()) minexp = std::min<unsigned>(minexp, t.mono[v]);
                if (minexp > 0 && minexp != ~0u) {
                    std::vector<Term> shifted;
                    shifted.reserve(p.term_count());
                    for (const auto& t : p.terms()) {
                        Monomial m = t.mono;
                        m[v] = static_cast<std::uint16_t>(m[v] - minexp);
                        shifted.push_back({std::move(m), t.coeff});
                    }
                    p = Polynomial::from_terms(u, std::move(shifted));
                    mult = minexp;
                }
            } else {
                while (true) {
                    if (p.term_count() > kExactGcdTermLimit &&
                        modcert::certify_not_divisible(p, atom))
                        break;
                    auto q = p.divide_exact(atom);
                    if (!q) break;
                    p = *q;
                    ++mult;
                }
            }
            if (mult) {
                step.stripped.push_back({atom, mult, "free of targets"});
                any = true;
            }
        }
        if (any) p = p.primitive_part();
    }
    return p;
}

}  // namespace

EliminationReport eliminate(std::vector<Polynomial> system,
                            const std::vector<std::string>& order, const StripPolicy& strip) {
    if (system.empty()) throw std::invalid_argument("eliminate: empty system");
    // By value: `system` is reassigned inside the loop.
    UniversePtr u = system.front().universe();
    EliminationReport report;
    report.result = Polynomial::zero(u);

    for (std::size_t step_idx = 0; step_idx < order.size(); ++step_idx) {
        const std::string& var = order[step_idx];
        std::vector<std::size_t> with;
        for (std::size_t i = 0; i < system.size(); ++i)
            if (system[i].degree_in(var) > 0) with.push_back(i);
        if (with.size() < 2)
            throw std::domain_error("eliminate: fewer than two polynomials involve " + var);

        // Pivot: the polynomial of lowest degree in var (fewest terms on a
        // tie) is paired with every other; each pairwise resultant is one
        // var-free replacement.
        std::size_t pivot = with[0];
        for (std::size_t i : with) {
            int di = system[i].degree_in(var), dp = system[pivot].degree_in(var);
            if (di < dp || (di == dp && system[i].term_count() < system[pivot].term_count()))
                pivot = i;
        }

        EliminationStep step;
        step.variable = var;
        step.raw_term_count = 0;

        std::set<std::size_t> targets;
        for (const auto& t : strip.targets) targets.insert(u->index_of(t));
        for (std::size_t k = step_idx + 1; k < order.size(); ++k)
            targets.insert(u->index_of(order[k]));

        std::vector<Polynomial> produced;
        for (std::size_t i : with) {
            if (i == pivot) continue;
            Polynomial r = resultant(system[pivot], system[i], var);
            step.raw_term_count += r.term_count();
            produced.push_back(apply_strip(std::move(r), strip, targets, step));
        }
        step.result_term_count = 0;
        for (const auto& r : produced) step.result_term_count += r.term_count();
        report.steps.push_back(std::move(step));
        report.eliminated.push_back(var);

        std::vector<Polynomial> next;
        for (std::size_t i = 0; i < system.size(); ++i)
            if (std::find(with.begin(), with.end(), i) == with.end())
                next.push_back(std::move(system[i]));
        for (auto& r : produced) next.push_back(std::move(r));
        system = std::move(next);
        report.result = system.back();
    }
    return report;
}

std::string EliminationReport::to_text() const {
    std::string out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        out += "step " + std::to_string(i + 1) + ": eliminate " + s.variable + "\n";
        out += "  raw determinant: " + std::to_string(s.raw_term_count) + " terms\n";
        for (const auto& f : s.stripped) {
            out += "  stripped (" + f.reason + "): " + f.factor.to_string();
            if (f.multiplicity > 1) out += " ^" + std::to_string(f.multiplicity);
            out += "\n";
        }
        out += "  result: " + std::to_string(s.result_term_count) + " terms\n";
    }
    out += "result: " + std::to_string(result.term_count()) + " terms\n";
    return out;
}

namespace {

using RMatrix = std::vector<std::vector<RationalExpression>>;

// Row reduction; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(RMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        RationalExpression inv = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] / inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            RationalExpression f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank_over_function_field(const PolyMatrix& m) {
    RMatrix a(m.rows(), std::vector<RationalExpression>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = RationalExpression(m.at(i, j));
    return static_cast<int>(rref(a).size());
}

RationalExpression recover_rational_root(const Polynomial& f, const Polynomial& g,
                                         const std::string& var) {
    std::size_t v = f.universe()->index_of(var);
    int n = f.degree_in(var), mdeg = g.degree_in(var);
    if (n <= 0 || mdeg <= 0) throw std::invalid_argument("recover_rational_root: degree 0");
    if (f.coefficient_of(v, 0).is_zero() || g.coefficient_of(v, 0).is_zero())
        throw std::domain_error("recover_rational_root: zero constant term");

    PolyMatrix s = sylvester_matrix(f, g, var);
    std::size_t N = s.rows();
    RMatrix a(N, std::vector<RationalExpression>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) a[i][j] = RationalExpression(s.at(i, j));
    auto pivots = rref(a);
    if (pivots.size() != N - 1)
        throw std::domain_error("recover_rational_root: Sylvester rank is not N-1");

    // One free column; kernel vector is (x^{N-1}, ..., x, 1) up to scale.
    std::vector<bool> is_pivot(N, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::size_t free_col = N;
    for (std::size_t c = 0; c < N; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    std::vector<RationalExpression> kernel(N);
    kernel[free_col] = RationalExpression(Polynomial::constant(f.universe(), 1));
    for (std::size_t r = 0; r < pivots.size(); ++r) kernel[pivots[r]] = -a[r][free_col];

    if (kernel[N - 1].is_zero())
        throw std::domain_error("recover_rational_root: kernel has zero constant slot");
    return kernel[N - 2] / kernel[N - 1];
}

}  // namespace bricard

#include "bricard/solver.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "bricard/model.hpp"
#include "bricard/rational_expression.hpp"

namespace bricard {

namespace {

const std::vector<std::string>& side_names() {
    static const std::vector<std::string> names = {"s1", "s2", "s3", "s4", "s5", "s6",
                                                   "s7", "s8", "s9", "e",  "b"};
    return names;
}

// Provably nonzero factors under the side axioms; safe to drop as overall
// factors during reduction.
const std::vector<Polynomial>& reduction_atoms(const UniversePtr& u) {
    static std::vector<Polynomial> atoms = [&u]() {
        std::vector<Polynomial> a;
        for (const auto& n : side_names()) a.push_back(Polynomial::variable(u, n));
        auto v = [&u](const char* n) { return Polynomial::variable(u, n); };
        a.push_back(v("b") - v("e"));
        a.push_back(v("s7") - v("s1"));
        a.push_back(v("s3") - v("s9"));
        a.push_back(v("s2") - v("s8"));
        return a;
    }();
    return atoms;
}

// Applies target^power = num/den to p with denominators cleared.  For
// power n > 1 the polynomial is decomposed by exponent residue class,
// p = sum_c target^c * P_c(target^n, rest), and the substitution acts on
// each P_c; the classes keep distinct exponents mod n, so the result is
// zero exactly when the substituted value of p is zero.
std::optional<Polynomial> apply_relation(const Polynomial& p, const Relation& r) {
    if (!p.mentions(r.target)) return p;
    if (r.power <= 1)
        return substitute_clearing(p, r.target, r.rhs.numerator(), r.rhs.denominator());

    const auto& u = p.universe();
    std::size_t v = u->index_of(r.target);
    std::map<unsigned, std::vector<Term>> classes;
    for (const auto& t : p.terms()) {
        unsigned c = t.mono[v] % r.power;
        Monomial m = t.mono;
        m[v] = static_cast<std::uint16_t>((t.mono[v] - c) / r.power);
        classes[c].push_back({std::move(m), t.coeff});
    }
    // substitute_clearing scales each class by den^(its own degree); rescale
    // to the common maximum so the sum equals den^K * p on the relation's
    // variety and zero stays equivalent to annihilation.
    unsigned max_deg = 0;
    std::map<unsigned, std::pair<Polynomial, unsigned>> parts;
    for (auto& [c, terms] : classes) {
        Polynomial part = Polynomial::from_terms(u, std::move(terms));
        unsigned d = static_cast<unsigned>(std::max(0, part.degree_in(r.target)));
        max_deg = std::max(max_deg, d);
        parts.emplace(c, std::make_pair(std::move(part), d));
    }
    Polynomial out(u);
    for (auto& [c, entry] : parts) {
        auto& [part, d] = entry;
        part = substitute_clearing(part, r.target, r.rhs.numerator(), r.rhs.denominator());
        if (d < max_deg) part = part * r.rhs.denominator().pow(max_deg - d);
        if (c) {
            Polynomial shift = Polynomial::variable(u, r.target).pow(c);
            part = part * shift;
        }
        out = out + part;
    }
    return out;
}

// Same relation applied inside a rational expression.
std::optional<RationalExpression> apply_relation_expr(const RationalExpression& e,
                                                      const Relation& r) {
    if (!e.mentions(r.target)) return e;
    auto prep = [&](const Polynomial& p) -> std::optional<Polynomial> {
        if (!p.mentions(r.target)) return p;
        if (r.power > 1) {
            if (p.exponent_gcd(p.universe()->index_of(r.target)) % r.power != 0)
                return std::nullopt;
            return p.even_power_reduce(r.target, r.power);
        }
        return p;
    };
    auto num = prep(e.numerator());
    auto den = prep(e.denominator());
    if (!num || !den) return std::nullopt;
    RationalExpression ns = substitute(*num, r.target, r.rhs);
    RationalExpression ds = substitute(*den, r.target, r.rhs);
    if (ds.is_zero()) return std::nullopt;
    return ns / ds;
}

// Content of p with respect to var: gcd of the coefficient polynomials.
Polynomial content_wrt_var(const Polynomial& p, const std::string& var) {
    Polynomial c(p.universe());
    for (const auto& [deg, coeff] : p.coefficients_wrt(var)) {
        c = poly_gcd(c, coeff);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

// Splits f into factors by per-variable content extraction, squarefree
// splitting and difference-of-squares recognition.  No general factorization.
void split_factors(const Polynomial& f, std::vector<Polynomial>& out, int depth = 0) {
    if (f.is_constant()) return;
    if (depth > 16) {
        out.push_back(f);
        return;
    }
    auto vars = f.variables_present();

    for (std::size_t v : vars) {
        if (f.degree_in(v) < 1) continue;
        Polynomial c = content_wrt_var(f, f.universe()->name(v));
        if (!c.is_constant() && !c.is_zero()) {
            split_factors(c, out, depth + 1);
            split_factors(f.divided_by(c), out, depth + 1);
            return;
        }
    }

    std::size_t main_var = vars.back();
    Polynomial g = poly_gcd(f, f.derivative(main_var));
    if (!g.is_constant()) {
        split_factors(g, out, depth + 1);
        split_factors(f.divided_by(g), out, depth + 1);
        return;
    }

    // a*v^2 + c with -c/a a perfect square: (sd*v - sn)(sd*v + sn).
    for (std::size_t v : vars) {
        if (f.degree_in(v) != 2) continue;
        if (!f.coefficient_of(v, 1).is_zero()) continue;
        Polynomial a = f.coefficient_of(v, 2);
        Polynomial c = f.coefficient_of(v, 0);
        RationalExpression ratio = RationalExpression::of(-c, a);
        auto sn = ratio.numerator().sqrt_exact();
        auto sd = ratio.denominator().sqrt_exact();
        if (!sn || !sd) continue;
        Polynomial x = Polynomial::variable(f.universe(), f.universe()->name(v));
        Polynomial l1 = *sd * x - *sn;
        Polynomial l2 = *sd * x + *sn;
        auto q1 = f.divide_exact(l1);
        if (!q1) continue;
        auto q2 = q1->divide_exact(l2);
        if (!q2) continue;
        out.push_back(l1);
        out.push_back(l2);
        split_factors(*q2, out, depth + 1);
        return;
    }

    out.push_back(f);
}

// Relations read off one factor: linear targets and linear-in-p^n targets.
void relations_from_factor(const Polynomial& f, const std::set<std::string>& forbidden,
                           std::vector<Relation>& out) {
    const auto& u = f.universe();
    for (std::size_t v : f.variables_present()) {
        const std::string& name = u->name(v);
        if (forbidden.count(name)) continue;
        unsigned n = f.exponent_gcd(v);
        int d = f.degree_in(v);
        if (n == 0 || d <= 0) continue;
        if (static_cast<unsigned>(d) != n) continue;  // not linear in v^n
        Polynomial cn = f.coefficient_of(v, n);
        Polynomial c0 = f.coefficient_of(v, 0);
        if (cn.mentions(v) || c0.mentions(v)) continue;
        RationalExpression rhs = RationalExpression::of(-c0, cn);
        if (rhs.is_zero()) continue;  // would force the target to zero
        out.push_back({name, n, rhs});
    }
}

std::string relation_key(const Relation& r) {
    return r.target + "^" + std::to_string(r.power) + "=" + r.rhs.to_string();
}

// ---------------------------------------------------------------------------

// Cached split side-relation sets from the section-4 classification.
const std::vector<std::vector<Relation>>& split_relation_sets(const UniversePtr& u) {
    static std::vector<std::vector<Relation>> sets = [&u]() {
        std::vector<std::vector<Relation>> out;
        auto params = parameters_from_sides(SideAssignment::symbolic(u));
        for (int eq = 1; eq <= 3; ++eq)
            for (const auto& row : classify_split(params, eq))
                if (!row.side_relations.empty()) out.push_back(row.side_relations);
        return out;
    }();
    return sets;
}

// Residual of `target^power = rhs` under the accumulated relations: zero
// when the relations force it.
bool relations_imply(const std::vector<Relation>& have, const Relation& want,
                     const UniversePtr& u) {
    Polynomial t = Polynomial::variable(u, want.target);
    Polynomial lhs = t.pow(want.power) * want.rhs.denominator() - want.rhs.numerator();
    for (std::size_t pass = 0; pass <= have.size() && !lhs.is_zero(); ++pass) {
        bool changed = false;
        for (const auto& r : have) {
            if (!lhs.mentions(r.target)) continue;
            auto next = apply_relation(lhs, r);
            if (!next) continue;
            lhs = next->primitive_part();
            changed = true;
        }
        if (!changed) break;
    }
    return lhs.is_zero();
}

bool implies_split(const std::vector<Relation>& relations, const UniversePtr& u) {
    for (const auto& set : split_relation_sets(u)) {
        bool all = true;
        for (const auto& want : set)
            if (!relations_imply(relations, want, u)) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

// Monomial content over the side variables; sides are nonzero, so the
// content is a unit for the purpose of relation extraction.
Polynomial strip_side_content(Polynomial q) {
    const auto& u = q.universe();
    for (const auto& n : side_names()) {
        std::size_t v = u->index_of(n);
        unsigned lo = 0;
        bool first = true;
        for (const auto& t : q.terms()) {
            lo = first ? t.mono[v] : std::min<unsigned>(lo, t.mono[v]);
            first = false;
            if (lo == 0) break;
        }
        if (first || lo == 0) continue;
        std::vector<Term> terms;
        for (const auto& t : q.terms()) {
            Monomial m = t.mono;
            m[v] = static_cast<std::uint16_t>(m[v] - lo);
            terms.push_back({std::move(m), t.coeff});
        }
        q = Polynomial::from_terms(u, std::move(terms));
    }
    return q;
}

// A power-n relation whose rhs mentions other bound targets can hide a
// lower-power consequence: s9^2 = s4*s8 together with s8 = s1*s9/s4 forces
// s9 = s1.  Rewrites each such relation against the others until stable so
// tables expose the consequence directly.
void saturate_relations(std::vector<Relation>& rels) {
    if (rels.empty()) return;
    // Rewriting blows up on the huge intermediate tables the search later
    // discards anyway; the consequences we are after live in small cyclic
    // presentations, so give up once the work polynomial passes this size.
    constexpr std::size_t kTermBudget = 512;
    // The bound is re-evaluated because saturation can append relations.
    for (std::size_t round = 0; round < 4 * rels.size() + 4; ++round) {
        bool changed = false;
        for (std::size_t i = 0; i < rels.size(); ++i) {
            Relation& r = rels[i];
            if (r.power <= 1) continue;
            bool touches = false;
            for (std::size_t j = 0; j < rels.size() && !touches; ++j)
                touches = i != j && r.rhs.mentions(rels[j].target);
            if (!touches) continue;
            const auto& u = r.rhs.numerator().universe();
            std::size_t v = u->index_of(r.target);
            Polynomial q = Polynomial::variable(u, r.target).pow(r.power) *
                               r.rhs.denominator() -
                           r.rhs.numerator();
            bool over_budget = q.term_count() > kTermBudget;
            for (std::size_t pass = 0; pass <= rels.size() && !over_budget; ++pass) {
                bool sub = false;
                for (std::size_t j = 0; j < rels.size(); ++j) {
                    if (i == j || !q.mentions(rels[j].target)) continue;
                    auto next = apply_relation(q, rels[j]);
                    if (!next) continue;
                    q = next->primitive_part();
                    sub = true;
                    if (q.term_count() > kTermBudget) {
                        over_budget = true;
                        break;
                    }
                }
                if (!sub) break;
            }
            if (over_budget || q.is_zero()) continue;
            q = strip_side_content(q.primitive_part());
            unsigned n = q.exponent_gcd(v);
            int d = q.degree_in(v);
            if (d <= 0) {
                // The target cancelled: the relations jointly constrain a
                // variable they otherwise leave free (e.g. s4^3 = 1).  Record
                // that constraint so the table states its full variety.
                if (q.is_constant()) continue;
                std::set<std::string> targets;
                for (const auto& t : rels) targets.insert(t.target);
                std::optional<Relation> extra;
                for (std::size_t w : q.variables_present()) {
                    const std::string& nm = u->name(w);
                    if (targets.count(nm)) continue;
                    unsigned nw = q.exponent_gcd(w);
                    int dw = q.degree_in(w);
                    if (dw <= 0 || nw == 0 || static_cast<unsigned>(dw) != nw) continue;
                    Polynomial cw = q.coefficient_of(w, nw);
                    Polynomial c0w = q.coefficient_of(w, 0);
                    if (cw.mentions(w) || c0w.mentions(w) || c0w.is_zero()) continue;
                    extra = Relation{nm, nw, RationalExpression::of(-c0w, cw)};
                    break;
                }
                if (!extra) continue;
                rels.push_back(std::move(*extra));  // invalidates r; rescan
                changed = true;
                break;
            }
            if (n == 0 || static_cast<unsigned>(d) != n) continue;
            Polynomial cn = q.coefficient_of(v, n);
            Polynomial c0 = q.coefficient_of(v, 0);
            if (cn.mentions(v) || c0.mentions(v) || c0.is_zero()) continue;
            Relation derived{r.target, n, RationalExpression::of(-c0, cn)};
            if (relation_key(derived) == relation_key(r)) continue;
            r = std::move(derived);
            changed = true;
        }
        if (!changed) break;
    }
}

// ---------------------------------------------------------------------------

struct SearchState {
    const std::string* t;
    const SearchConfig* config;
    std::map<std::string, SolutionTable>* results;  // canonical key -> table
    SolveStats* stats = nullptr;
};

void count_degenerate(const SearchState& st) {
    if (st.stats) st.stats->suppressed_degenerate.fetch_add(1, std::memory_order_relaxed);
}
void count_split(const SearchState& st) {
    if (st.stats) st.stats->suppressed_split.fetch_add(1, std::memory_order_relaxed);
}

// Back-substitutes relations into each other so each rhs is reduced with
// respect to the other relations where possible.
void normalize_relations(std::vector<Relation>& relations) {
    // Reduction on huge expressions costs a normal-form gcd per step; past
    // this size leave the rhs as the search produced it.
    constexpr std::size_t kTermBudget = 512;
    auto size_of = [](const RationalExpression& e) {
        return e.numerator().term_count() + e.denominator().term_count();
    };
    for (std::size_t pass = 0; pass < relations.size(); ++pass) {
        bool changed = false;
        for (std::size_t i = 0; i < relations.size(); ++i)
            for (std::size_t j = 0; j < relations.size(); ++j) {
                if (i == j) continue;
                if (!relations[i].rhs.mentions(relations[j].target)) continue;
                if (size_of(relations[i].rhs) > kTermBudget ||
                    size_of(relations[j].rhs) > kTermBudget)
                    continue;
                auto next = apply_relation_expr(relations[i].rhs, relations[j]);
                if (!next || next->mentions(relations[i].target)) continue;
                relations[i].rhs = *next;
                changed = true;
            }
        if (!changed) break;
    }
}

// Reduce in place: integer content, nonzero-atom factors, squarefree part.
// Even-power handling lives in kill_candidates (relations p^n = rhs), so the
// node polynomial keeps its exponents and the sign-split branches survive.
void reduce_node(Polynomial& p, const std::string& t) {
    if (p.is_zero()) return;
    const auto& u = p.universe();
    p = p.primitive_part();
    for (const Polynomial& atom : reduction_atoms(u)) {
        while (true) {
            auto q = p.divide_exact(atom);
            if (!q) break;
            p = *q;
        }
    }
    std::size_t main_var =
        p.mentions(t) ? u->index_of(t)
                      : (p.variables_present().empty() ? 0 : p.variables_present().back());
    if (!p.is_constant()) {
        Polynomial g = poly_gcd(p, p.derivative(main_var));
        if (!g.is_constant()) p = p.divided_by(g).primitive_part();
    }
}

void search(Polynomial p, std::vector<Relation> relations, unsigned depth,
            const SearchState& st) {
    const SearchConfig& cfg = *st.config;
    const auto& u = p.universe();

    if (p.is_zero()) {
        saturate_relations(relations);
        normalize_relations(relations);
        SolutionTable table{std::move(relations)};
        table = canonicalize(std::move(table));
        if (cfg.suppress_degenerate && is_degenerate(table).degenerate) {
            count_degenerate(st);
            return;
        }
        if (cfg.suppress_splits && implies_split(table.relations, u)) {
            count_split(st);
            return;
        }
        st.results->emplace(table.to_string(), std::move(table));
        return;
    }
    if (depth >= cfg.max_depth) return;

    // Choose the coefficient to kill.
    std::vector<std::pair<unsigned, Polynomial>> coeffs;
    if (p.mentions(*st.t))
        coeffs = p.coefficients_wrt(*st.t);
    else
        coeffs = {{0u, p}};
    const Polynomial* chosen = &coeffs.front().second;
    if (cfg.coefficient_order == SearchConfig::CoefficientOrder::SmallestFirst)
        for (const auto& [deg, c] : coeffs)
            if (c.term_count() < chosen->term_count()) chosen = &c;
    if (chosen->is_constant()) return;  // nonzero constant coefficient: dead branch

    std::set<std::string> forbidden = {*st.t};
    for (const auto& r : relations) forbidden.insert(r.target);

    std::vector<Relation> candidates = kill_candidates(*chosen, forbidden);
    if (candidates.size() > cfg.branch_limit) {
        if (cfg.log)
            *st.config->log << "depth=" << depth << " branch limit " << cfg.branch_limit
                            << " truncates " << candidates.size() << " candidates\n";
        candidates.resize(cfg.branch_limit);
    }

    for (const auto& cand : candidates) {
        auto next = apply_relation(p, cand);
        if (!next) continue;

        std::vector<Relation> next_relations = relations;
        next_relations.push_back(cand);
        if (cfg.suppress_degenerate &&
            is_degenerate(SolutionTable{next_relations}).degenerate) {
            count_degenerate(st);
            continue;
        }
        if (cfg.suppress_splits && implies_split(next_relations, u)) {
            count_split(st);
            continue;
        }

        Polynomial q = std::move(*next);
        reduce_node(q, *st.t);
        if (cfg.log)
            *cfg.log << "depth=" << depth << " killed deg=" << coeffs.front().first
                     << " relation=" << cand.target << " remaining=" << q.term_count()
                     << "\n";
        search(std::move(q), std::move(next_relations), depth + 1, st);
    }
}

}  // namespace

std::vector<Relation> kill_candidates(const Polynomial& coeff,
                                      const std::set<std::string>& forbidden) {
    if (coeff.is_zero()) throw std::invalid_argument("kill_candidates: zero coefficient");
    std::vector<Relation> out;
    if (coeff.is_constant()) return out;

    Polynomial f = coeff.primitive_part();
    std::vector<Polynomial> factors;
    split_factors(f, factors);
    // The unsplit polynomial also contributes (e.g. s4^2 = s3^2 next to
    // the split s4 = +-s3).
    if (factors.size() > 1) factors.push_back(f);

    for (const auto& factor : factors) relations_from_factor(factor, forbidden, out);

    std::sort(out.begin(), out.end(), [](const Relation& a, const Relation& b) {
        return relation_key(a) < relation_key(b);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Relation& a, const Relation& b) {
                              return relation_key(a) == relation_key(b);
                          }),
              out.end());
    return out;
}

std::vector<SolutionTable> solve(const Polynomial& p, const std::string& t,
                                 const SearchConfig& config, SolveStats* stats) {
    if (p.is_zero()) throw std::invalid_argument("solve: zero polynomial");
    if (p.degree_in(t) <= 0) throw std::invalid_argument("solve: no positive degree in " + t);

    Polynomial start = p;
    reduce_node(start, t);

    std::map<std::string, SolutionTable> results;
    SearchState st{&t, &config, &results, stats};

    if (config.threads <= 1) {
        search(std::move(start), {}, 0, st);
    } else {
        // Expand the first level sequentially, explore subtrees concurrently,
        // then merge; the canonical-key map makes the result order and content
        // independent of scheduling.
        std::vector<std::pair<unsigned, Polynomial>> coeffs;
        if (start.mentions(t))
            coeffs = start.coefficients_wrt(t);
        else
            coeffs = {{0u, start}};
        const Polynomial* chosen = &coeffs.front().second;
        if (config.coefficient_order == SearchConfig::CoefficientOrder::SmallestFirst)
            for (const auto& [deg, c] : coeffs)
                if (c.term_count() < chosen->term_count()) chosen = &c;
        if (chosen->is_constant()) return {};
        std::vector<Relation> candidates = kill_candidates(*chosen, {t});
        if (candidates.size() > config.branch_limit) candidates.resize(config.branch_limit);

        std::vector<std::future<std::map<std::string, SolutionTable>>> futures;
        for (const auto& cand : candidates) {
            futures.push_back(std::async(std::launch::async, [&, cand]() {
                std::map<std::string, SolutionTable> local;
                SearchState sub{&t, &config, &local, stats};
                auto next = apply_relation(start, cand);
                if (!next) return local;
                std::vector<Relation> rels = {cand};
                if (config.suppress_degenerate &&
                    is_degenerate(SolutionTable{rels}).degenerate) {
                    count_degenerate(sub);
                    return local;
                }
                if (config.suppress_splits && implies_split(rels, p.universe())) {
                    count_split(sub);
                    return local;
                }
                Polynomial q = std::move(*next);
                reduce_node(q, t);
                search(std::move(q), std::move(rels), 1, sub);
                return local;
            }));
        }
        for (auto& fu : futures)
            for (auto& [key, table] : fu.get()) results.emplace(key, std::move(table));
    }

    std::vector<SolutionTable> out;
    out.reserve(results.size());
    for (auto& [key, table] : results) out.push_back(std::move(table));
    return out;
}

VerifyResult verify_table(const Polynomial& p, const SolutionTable& table) {
    // Apply in dependency order: a relation whose rhs mentions another bound
    // target must be applied before it.
    const auto& rels = table.relations;
    for (std::size_t i = 0; i < rels.size(); ++i)
        for (std::size_t j = i + 1; j < rels.size(); ++j)
            if (rels[i].target == rels[j].target)
                throw std::domain_error("verify_table: duplicate target " + rels[i].target);

    std::vector<std::size_t> order;
    std::vector<bool> placed(rels.size(), false);
    for (std::size_t round = 0; round < rels.size(); ++round) {
        bool progress = false;
        for (std::size_t i = 0; i < rels.size(); ++i) {
            if (placed[i]) continue;
            bool ready = true;
            for (std::size_t j = 0; j < rels.size(); ++j)
                if (!placed[j] && i != j && rels[j].rhs.mentions(rels[i].target)) {
                    ready = false;  // j must be applied before i
                    break;
                }
            if (ready) {
                order.push_back(i);
                placed[i] = true;
                progress = true;
            }
        }
        if (!progress) break;
    }
    if (order.size() != rels.size()) {
        // Power-n relations leave low-order occurrences of their target in
        // place, which can make the mention graph cyclic even for tables the
        // search validated; bounded fixpoint application still decides
        // annihilation.  A cycle among power-1 relations alone is an error.
        bool has_power = false;
        for (const auto& r : rels) has_power |= r.power > 1;
        if (!has_power) throw std::domain_error("verify_table: cyclic relation dependencies");
        std::vector<Relation> work = rels;
        saturate_relations(work);
        Polynomial residual = p;
        for (std::size_t round = 0; round < 2 * work.size() + 2 && !residual.is_zero();
             ++round) {
            bool touched = false;
            for (const auto& r : work) {
                if (!residual.mentions(r.target)) continue;
                residual = *apply_relation(residual, r);
                touched = true;
            }
            if (!touched) break;
        }
        if (!residual.is_zero()) residual = residual.primitive_part();
        return {residual.is_zero(), std::move(residual)};
    }

    // Apply in dependency order, deferring power-n relations until earlier
    // substitutions have made every exponent of the target divisible by n.
    Polynomial residual = p;
    std::vector<std::size_t> pending = order;
    while (!pending.empty()) {
        bool progress = false;
        std::vector<std::size_t> next_pending;
        for (std::size_t k = 0; k < pending.size(); ++k) {
            std::size_t i = pending[k];
            bool blocked = false;
            for (std::size_t j : pending)
                if (j != i && rels[j].rhs.mentions(rels[i].target)) {
                    blocked = true;
                    break;
                }
            std::optional<Polynomial> next;
            if (!blocked) next = apply_relation(residual, rels[i]);
            if (next) {
                residual = std::move(*next);
                progress = true;
            } else {
                next_pending.push_back(i);
            }
        }
        if (!progress)
            throw std::domain_error("verify_table: exponents of " + rels[next_pending.front()].target +
                                    " are not multiples of " +
                                    std::to_string(rels[next_pending.front()].power));
        pending = std::move(next_pending);
    }
    if (!residual.is_zero()) residual = residual.primitive_part();
    return {residual.is_zero(), std::move(residual)};
}

SolutionTable canonicalize(SolutionTable table) {
    std::sort(table.relations.begin(), table.relations.end(),
              [](const Relation& a, const Relation& b) {
                  if (a.target != b.target) return a.target < b.target;
                  return a.power < b.power;
              });
    return table;
}

bool isohexagon_check(const SolutionTable& table) {
    const UniversePtr& u = standard_universe();

    // Resolve every bound side fully in terms of the free set.
    std::map<std::string, RationalExpression> resolved;
    std::function<RationalExpression(const std::string&, std::set<std::string>&)> value =
        [&](const std::string& name, std::set<std::string>& visiting) -> RationalExpression {
        auto it = resolved.find(name);
        if (it != resolved.end()) return it->second;
        const Relation* r = table.find(name);
        if (!r) {
            RationalExpression e(Polynomial::variable(u, name));
            resolved.emplace(name, e);
            return e;
        }
        if (r->power != 1)
            throw std::domain_error("isohexagon_check: " + name +
                                    " is determined only up to a power");
        if (!visiting.insert(name).second)
            throw std::domain_error("isohexagon_check: cyclic relations at " + name);
        RationalExpression e = r->rhs;
        for (const auto& dep : side_names()) {
            if (dep == name || !e.mentions(dep)) continue;
            if (!table.find(dep)) continue;
            RationalExpression dv = value(dep, visiting);
            RationalExpression num = substitute(e.numerator(), dep, dv);
            RationalExpression den = substitute(e.denominator(), dep, dv);
            if (den.is_zero())
                throw std::domain_error("isohexagon_check: denominator vanishes at " + name);
            e = num / den;
        }
        visiting.erase(name);
        resolved.emplace(name, e);
        return e;
    };
    std::set<std::string> visiting;
    auto val = [&](const std::string& n) { return value(n, visiting); };

    RationalExpression e_len = val("e");
    RationalExpression b_len = val("b");
    if (e_len.is_zero()) throw std::domain_error("isohexagon_check: e resolves to zero");
    RationalExpression r = (b_len - e_len) / e_len;
    RationalExpression one(Polynomial::constant(u, 1));
    std::vector<RationalExpression> ratios = {r, one + r, -r, -(one + r)};

    std::vector<std::vector<RationalExpression>> quads = {
        {e_len, val("s2"), val("s5"), val("s7")},
        {b_len - e_len, val("s8"), val("s3"), val("s6")},
        {b_len, val("s4"), val("s9"), val("s1")}};

    for (std::size_t g = 0; g < quads.size(); ++g)
        for (const auto& x : quads[g]) {
            bool ok = false;
            for (std::size_t h = 0; h < quads.size() && !ok; ++h) {
                if (h == g) continue;
                for (const auto& y : quads[h]) {
                    for (const auto& c : ratios)
                        if (x == c * y || y == c * x) {
                            ok = true;
                            break;
                        }
                    if (ok) break;
                }
            }
            if (!ok) return false;
        }
    return true;
}

}  // namespace bricard

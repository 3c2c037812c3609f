#include "bricard/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bricard {

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (auto e : exp_) d += e;
    return d;
}

bool Monomial::is_constant() const {
    for (auto e : exp_)
        if (e) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exp_.size(); ++i) {
        unsigned s = static_cast<unsigned>(r.exp_[i]) + o.exp_[i];
        if (s > 0xffff) throw std::overflow_error("monomial exponent overflow");
        r.exp_[i] = static_cast<std::uint16_t>(s);
    }
    return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exp_.size(); ++i) {
        if (o.exp_[i] > r.exp_[i]) return std::nullopt;
        r.exp_[i] = static_cast<std::uint16_t>(r.exp_[i] - o.exp_[i]);
    }
    return r;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // The last-listed universe variable is the most significant.
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exponents()) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

bool term_greater(const Term& a, const Term& b) {
    return grlex_less(b.mono, a.mono);
}

}  // namespace

Polynomial Polynomial::constant(UniversePtr u, const Q& c) {
    Polynomial p(u);
    if (c != 0) p.terms_.push_back({Monomial(u->size()), c});
    return p;
}

Polynomial Polynomial::variable(UniversePtr u, const std::string& name) {
    std::size_t i = u->index_of(name);
    Monomial m(u->size());
    m[i] = 1;
    Polynomial p(u);
    p.terms_.push_back({std::move(m), Q(1)});
    return p;
}

Polynomial Polynomial::from_terms(UniversePtr u, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_greater);
    Polynomial p(std::move(u));
    for (auto& t : terms) {
        t.coeff.canonicalize();
        if (t.coeff == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    }
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
}

Q Polynomial::constant_value() const {
    if (terms_.empty()) return Q(0);
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return terms_[0].coeff;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.front();
}

unsigned Polynomial::total_degree() const {
    return terms_.empty() ? 0 : terms_.front().mono.total_degree();
}

int Polynomial::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono[var]));
    return d;
}

int Polynomial::degree_in(const std::string& var) const {
    return degree_in(universe_->index_of(var));
}

bool Polynomial::mentions(std::size_t var) const {
    for (const auto& t : terms_)
        if (t.mono[var]) return true;
    return false;
}

bool Polynomial::mentions(const std::string& var) const {
    return mentions(universe_->index_of(var));
}

std::vector<std::size_t> Polynomial::variables_present() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < universe_->size(); ++v)
        if (mentions(v)) out.push_back(v);
    return out;
}

void Polynomial::check_same_universe(const Polynomial& o) const {
    if (universe_ != o.universe_ && universe_->names() != o.universe_->names())
        throw std::invalid_argument("polynomial universe mismatch");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_universe(o);
    Polynomial r(universe_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            Q c = terms_[i].coeff + o.terms_[j].coeff;
            if (c != 0) r.terms_.push_back({terms_[i].mono, std::move(c)});
            ++i, ++j;
        } else if (grlex_less(o.terms_[j].mono, terms_[i].mono)) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_universe(o);
    if (is_zero() || o.is_zero()) return Polynomial(universe_);
    const Polynomial& small = terms_.size() <= o.terms_.size() ? *this : o;
    const Polynomial& large = terms_.size() <= o.terms_.size() ? o : *this;

    std::unordered_map<Monomial, Q, MonomialHash> acc;
    acc.reserve(large.terms_.size() * 2);
    for (const auto& ts : small.terms_) {
        for (const auto& tl : large.terms_) {
            Monomial m = ts.mono * tl.mono;
            auto it = acc.find(m);
            if (it == acc.end()) {
                acc.emplace(std::move(m), ts.coeff * tl.coeff);
            } else {
                it->second += ts.coeff * tl.coeff;
                if (it->second == 0) acc.erase(it);
            }
        }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc) terms.push_back({m, std::move(c)});
    std::sort(terms.begin(), terms.end(), term_greater);
    Polynomial r(universe_);
    r.terms_ = std::move(terms);
    return r;
}

Polynomial Polynomial::operator*(const Q& c) const {
    if (c == 0) return Polynomial(universe_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial result = Polynomial::constant(universe_, 1);
    Polynomial base = *this;
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (!t.mono[var]) continue;
        Term d{t.mono, t.coeff * t.mono[var]};
        d.mono[var] = static_cast<std::uint16_t>(d.mono[var] - 1);
        out.push_back(std::move(d));
    }
    return from_terms(universe_, std::move(out));
}

Polynomial Polynomial::derivative(const std::string& var) const {
    return derivative(universe_->index_of(var));
}

std::vector<std::pair<unsigned, Polynomial>> Polynomial::coefficients_wrt(std::size_t var) const {
    std::map<unsigned, std::vector<Term>> buckets;
    for (const auto& t : terms_) {
        Term stripped = t;
        unsigned d = stripped.mono[var];
        stripped.mono[var] = 0;
        buckets[d].push_back(std::move(stripped));
    }
    std::vector<std::pair<unsigned, Polynomial>> out;
    for (auto it = buckets.rbegin(); it != buckets.rend(); ++it)
        out.emplace_back(it->first, from_terms(universe_, std::move(it->second)));
    if (out.empty()) out.emplace_back(0u, Polynomial(universe_));
    return out;
}

std::vector<std::pair<unsigned, Polynomial>> Polynomial::coefficients_wrt(
    const std::string& var) const {
    return coefficients_wrt(universe_->index_of(var));
}

Polynomial Polynomial::coefficient_of(std::size_t var, unsigned k) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.mono[var] != k) continue;
        Term stripped = t;
        stripped.mono[var] = 0;
        out.push_back(std::move(stripped));
    }
    return from_terms(universe_, std::move(out));
}

Polynomial Polynomial::substituted(std::size_t var, const Polynomial& value) const {
    auto coeffs = coefficients_wrt(var);
    Polynomial acc(universe_);
    // Horner on the substituted variable.
    unsigned prev = coeffs.front().first;
    acc = coeffs.front().second;
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        acc = acc * value.pow(prev - coeffs[i].first) + coeffs[i].second;
        prev = coeffs[i].first;
    }
    if (prev > 0) acc = acc * value.pow(prev);
    return acc;
}

Q Polynomial::content() const {
    if (terms_.empty()) return Q(1);
    Z num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                t.coeff.get_den().get_mpz_t());
    }
    Q c(num_gcd, den_lcm);
    c.canonicalize();
    if (terms_.front().coeff < 0) c = -c;
    return c;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    Q c = content();
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff /= c;
    return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
    check_same_universe(d);
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return Polynomial(universe_);
    if (d.is_constant()) return *this * (Q(1) / d.constant_value());

    // Ordered remainder map keyed by monomial in grlex order.
    struct Cmp {
        bool operator()(const Monomial& a, const Monomial& b) const {
            return grlex_less(a, b);
        }
    };
    std::map<Monomial, Q, Cmp> r;
    for (const auto& t : terms_) r.emplace(t.mono, t.coeff);

    const Term& dl = d.leading_term();
    std::vector<Term> quot;
    while (!r.empty()) {
        auto lead = std::prev(r.end());
        auto qm = lead->first.divide(dl.mono);
        if (!qm) return std::nullopt;
        Q qc = lead->second / dl.coeff;
        quot.push_back({*qm, qc});
        for (const auto& t : d.terms_) {
            Monomial m = t.mono * (*qm);
            auto it = r.find(m);
            Q delta = t.coeff * qc;
            if (it == r.end()) {
                r.emplace(std::move(m), -delta);
            } else {
                it->second -= delta;
                if (it->second == 0) r.erase(it);
            }
        }
    }
    return from_terms(universe_, std::move(quot));
}

Polynomial Polynomial::divided_by(const Polynomial& d) const {
    auto q = divide_exact(d);
    if (!q) throw std::domain_error("inexact polynomial division");
    return *q;
}

std::optional<Polynomial> Polynomial::sqrt_exact() const {
    if (is_zero()) return Polynomial(universe_);
    // Leading term must be a perfect square.
    Term lt = leading_term();
    if (lt.coeff < 0) return std::nullopt;
    Monomial rm(universe_->size());
    for (std::size_t i = 0; i < rm.size(); ++i) {
        if (lt.mono[i] % 2) return std::nullopt;
        rm[i] = static_cast<std::uint16_t>(lt.mono[i] / 2);
    }
    Z sn, sd;
    if (mpz_perfect_square_p(lt.coeff.get_num().get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(lt.coeff.get_den().get_mpz_t()) == 0) return std::nullopt;
    mpz_sqrt(sn.get_mpz_t(), lt.coeff.get_num().get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), lt.coeff.get_den().get_mpz_t());
    Polynomial root(universe_);
    root.terms_.push_back({rm, Q(sn, sd)});

    // Iteratively extend: with r = p - root^2, the next term is lt(r)/(2*lt(root)).
    while (true) {
        Polynomial rem = *this - root * root;
        if (rem.is_zero()) return root;
        const Term& rl = rem.leading_term();
        auto m = rl.mono.divide(root.leading_term().mono);
        if (!m) return std::nullopt;
        Term next{*m, rl.coeff / (2 * root.leading_term().coeff)};
        if (!grlex_less(next.mono, root.terms_.back().mono)) return std::nullopt;
        root.terms_.push_back(std::move(next));
    }
}

unsigned Polynomial::exponent_gcd(std::size_t var) const {
    unsigned g = 0;
    for (const auto& t : terms_) {
        if (t.mono[var]) g = std::gcd(g, static_cast<unsigned>(t.mono[var]));
    }
    return g;
}

Polynomial Polynomial::even_power_reduce(std::size_t var, unsigned n) const {
    if (n < 2) throw std::invalid_argument("even_power_reduce needs n >= 2");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (t.mono[var] % n)
            throw std::domain_error("exponent of variable not divisible by n");
        Term r = t;
        r.mono[var] = static_cast<std::uint16_t>(r.mono[var] / n);
        out.push_back(std::move(r));
    }
    return from_terms(universe_, std::move(out));
}

Polynomial Polynomial::even_power_reduce(const std::string& var, unsigned n) const {
    return even_power_reduce(universe_->index_of(var), n);
}

Q Polynomial::evaluate(const std::unordered_map<std::string, Q>& binding) const {
    std::vector<const Q*> vals(universe_->size(), nullptr);
    for (const auto& [k, v] : binding) vals[universe_->index_of(k)] = &v;
    Q sum(0);
    for (const auto& t : terms_) {
        Q prod = t.coeff;
        for (std::size_t i = 0; i < universe_->size(); ++i) {
            unsigned e = t.mono[i];
            if (!e) continue;
            if (!vals[i])
                throw std::invalid_argument("unbound variable: " + universe_->name(i));
            for (unsigned k = 0; k < e; ++k) prod *= *vals[i];
        }
        sum += prod;
    }
    return sum;
}

double Polynomial::evaluate_double(
    const std::unordered_map<std::string, double>& binding) const {
    std::vector<std::pair<bool, double>> vals(universe_->size(), {false, 0.0});
    for (const auto& [k, v] : binding) vals[universe_->index_of(k)] = {true, v};
    double sum = 0;
    for (const auto& t : terms_) {
        double prod = t.coeff.get_d();
        for (std::size_t i = 0; i < universe_->size(); ++i) {
            unsigned e = t.mono[i];
            if (!e) continue;
            if (!vals[i].first)
                throw std::invalid_argument("unbound variable: " + universe_->name(i));
            for (unsigned k = 0; k < e; ++k) prod *= vals[i].second;
        }
        sum += prod;
    }
    return sum;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Q c = t.coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        bool printed = false;
        if (c != 1 || t.mono.is_constant()) {
            os << c.get_str();
            printed = true;
        }
        for (std::size_t i = 0; i < universe_->size(); ++i) {
            unsigned e = t.mono[i];
            if (!e) continue;
            if (printed) os << "*";
            os << universe_->name(i);
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

}  // namespace bricard

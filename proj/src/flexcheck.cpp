#include "bricard/flexcheck.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace bricard {

namespace {

// The fifteen Eq. (4) parameters as doubles at a numeric side map.
struct NumericParams {
    // [i][k]: equation i+1, parameter k in (a, b, c, d, e) order.
    std::array<std::array<double, 5>, 3> p{};
};

NumericParams numeric_params(const std::map<std::string, double>& sides) {
    static const ParameterSet symbolic = parameters_from_sides(SideAssignment::symbolic());
    std::unordered_map<std::string, double> binding(sides.begin(), sides.end());
    NumericParams out;
    for (int i = 1; i <= 3; ++i) {
        auto params = symbolic.equation_params(i);
        for (int k = 0; k < 5; ++k) out.p[i - 1][k] = params[k]->evaluate_double(binding);
    }
    return out;
}

// Eq. (1)-(3) residual for equation i (1..3) at (x, y) = its two tangents.
double equation_residual(const NumericParams& np, int i, double x, double y) {
    const auto& [a, b, c, d, e] = np.p[i - 1];
    return a * x * x * y * y + d * y * y + 2 * c * x * y + b * x * x + e;
}

double tolerance_at(double t1) { return 1e-9 * (1 + t1 * t1 * t1 * t1); }

// One quadratic-formula branch y = (-c x + s*sqrt(rad)) / (a x^2 + d) with
// rad = c^2 x^2 - (a x^2 + d)(b x^2 + e).  When the quadratic degenerates
// (a x^2 + d = 0, the split case) the equation is linear in y and the c-term
// compensates: y = -(b x^2 + e) / (2 c x).
std::optional<double> companion_branch(const std::array<double, 5>& p, double x, int s) {
    const auto& [a, b, c, d, e] = p;
    double den = a * x * x + d;
    double scale = std::abs(a * x * x) + std::abs(d) + std::abs(c * x) +
                   std::abs(b * x * x) + std::abs(e) + 1;
    if (std::abs(den) < 1e-12 * scale) {
        double lin = 2 * c * x;
        if (std::abs(lin) < 1e-12 * scale) return std::nullopt;  // degenerate input
        return -(b * x * x + e) / lin;
    }
    double rad = c * c * x * x - den * (b * x * x + e);
    double rscale = std::abs(c * c * x * x) + std::abs(den * (b * x * x + e)) + 1;
    if (rad < 0) {
        if (rad < -1e-12 * rscale) return std::nullopt;  // flex limit
        rad = 0;
    }
    return (-c * x + s * std::sqrt(rad)) / den;
}

double vertex_cosine(const Point2& v, const Point2& p, const Point2& q) {
    double ux = p[0] - v[0], uy = p[1] - v[1];
    double wx = q[0] - v[0], wy = q[1] - v[1];
    double nu = std::hypot(ux, uy), nw = std::hypot(wx, wy);
    if (nu == 0 || nw == 0) return std::numeric_limits<double>::quiet_NaN();
    return (ux * wx + uy * wy) / (nu * nw);
}

int sylvester_rank_at(const NumericParams& np, double t1, double t2) {
    const auto& [a2, b2, c2, d2, e2] = np.p[1];
    const auto& [a3, b3, c3, d3, e3] = np.p[2];
    // Eqs. (2), (3) as quadratics in t3.
    double p2 = a2 * t2 * t2 + d2, p1 = 2 * c2 * t2, p0 = b2 * t2 * t2 + e2;
    double q2 = a3 * t1 * t1 + d3, q1 = 2 * c3 * t1, q0 = b3 * t1 * t1 + e3;
    Eigen::Matrix4d m;
    m << p2, p1, p0, 0,  //
        0, p2, p1, p0,   //
        q2, q1, q0, 0,   //
        0, q2, q1, q0;
    Eigen::JacobiSVD<Eigen::Matrix4d> svd(m);
    double top = svd.singularValues()(0);
    if (top == 0) return 0;
    int rank = 0;
    for (int i = 0; i < 4; ++i)
        if (svd.singularValues()(i) > 1e-8 * top) ++rank;
    return rank;
}

// A zero-pair of {a_i, b_i} x {d_i, e_i} makes Eq. (4) split (section 4).
bool params_split(const NumericParams& np) {
    for (int i = 0; i < 3; ++i) {
        const auto& [a, b, c, d, e] = np.p[i];
        double scale = std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d) + std::abs(e) + 1;
        auto zero = [&](double v) { return std::abs(v) < 1e-12 * scale; };
        if ((zero(a) || zero(b)) && (zero(d) || zero(e))) return true;
    }
    return false;
}

FlexSample make_sample(const NumericParams& np, const std::map<std::string, double>& sides,
                       double t1, double t2, double t3) {
    FlexSample s;
    s.t1 = t1;
    s.t2 = t2;
    s.t3 = t3;
    s.points = reconstruct_points(sides, t1, t2, t3);
    s.residuals = {std::abs(equation_residual(np, 1, t1, t2)),
                   std::abs(equation_residual(np, 2, t2, t3)),
                   std::abs(equation_residual(np, 3, t1, t3))};
    enum { A, B, C, D, E, F, G, H, I };
    const auto& p = s.points;
    s.cosines = {{{vertex_cosine(p[F], p[G], p[E]), vertex_cosine(p[C], p[D], p[B])},
                  {vertex_cosine(p[D], p[C], p[G]), vertex_cosine(p[H], p[I], p[E])},
                  {vertex_cosine(p[I], p[H], p[B]), vertex_cosine(p[G], p[A], p[F])}}};
    s.sylvester_rank = sylvester_rank_at(np, t1, t2);
    return s;
}

}  // namespace

std::vector<std::map<std::string, double>> numeric_sides(
    const SolutionTable& table, const std::map<std::string, double>& free_values) {
    std::vector<std::map<std::string, double>> branches = {free_values};
    std::vector<const Relation*> pending;
    for (const auto& r : table.relations) pending.push_back(&r);

    while (!pending.empty()) {
        bool progress = false;
        std::vector<const Relation*> next_pending;
        for (const Relation* r : pending) {
            // Resolvable once every rhs variable has a value in the branch
            // maps (all branches share the same key set).
            bool ready = true;
            for (const auto& name : SideAssignment::names())
                if (r->rhs.mentions(name) && !branches.front().count(name)) ready = false;
            if (!ready) {
                next_pending.push_back(r);
                continue;
            }
            progress = true;
            std::vector<std::map<std::string, double>> grown;
            for (auto& sides : branches) {
                std::unordered_map<std::string, double> binding(sides.begin(), sides.end());
                double den = r->rhs.denominator().evaluate_double(binding);
                if (den == 0) continue;  // infeasible branch
                double val = r->rhs.numerator().evaluate_double(binding) / den;
                if (r->power == 1) {
                    auto next = sides;
                    next[r->target] = val;
                    grown.push_back(std::move(next));
                } else if (r->power % 2 == 0) {
                    if (val < 0) continue;  // no real root
                    double root = std::pow(val, 1.0 / r->power);
                    for (int sign : {+1, -1}) {
                        auto next = sides;
                        next[r->target] = sign * root;
                        grown.push_back(std::move(next));
                    }
                } else {
                    auto next = sides;
                    next[r->target] =
                        std::copysign(std::pow(std::abs(val), 1.0 / r->power), val);
                    grown.push_back(std::move(next));
                }
            }
            branches = std::move(grown);
            if (branches.empty()) return {};
        }
        if (!progress)
            throw std::invalid_argument("numeric_sides: cyclic or unresolved relations");
        pending = std::move(next_pending);
    }

    for (const auto& name : SideAssignment::names())
        if (!branches.front().count(name))
            throw std::invalid_argument("numeric_sides: no value for side " + name);
    return branches;
}

std::optional<std::pair<double, double>> solve_companions(
    const std::map<std::string, double>& sides, double t1, std::pair<int, int> signs) {
    NumericParams np = numeric_params(sides);
    auto t2 = companion_branch(np.p[0], t1, signs.first);
    auto t3 = companion_branch(np.p[2], t1, signs.second);
    if (!t2 || !t3) return std::nullopt;
    return std::make_pair(*t2, *t3);
}

std::array<Point2, 9> reconstruct_points(const std::map<std::string, double>& sides,
                                         double t1, double t2, double t3) {
    auto side = [&](const char* n) { return sides.at(n); };
    auto dir = [](double t) {
        double den = 1 + t * t;
        return Point2{(1 - t * t) / den, 2 * t / den};  // (cos, sin)
    };
    Point2 da = dir(t1), db = dir(t2), dg = dir(t3);
    auto along = [](const Point2& base, const Point2& d, double len) {
        return Point2{base[0] + len * d[0], base[1] + len * d[1]};
    };
    Point2 A{0, 0}, B{side("b"), 0}, E{side("e"), 0};
    return {A,
            B,
            along(B, dg, side("s9")),   // C
            along(A, da, side("s1")),   // D
            E,
            along(E, db, side("s2")),   // F
            along(A, da, side("s7")),   // G
            along(E, db, side("s8")),   // H
            along(B, dg, side("s3"))};  // I
}

FlexTrace sweep(const SolutionTable& table, const std::map<std::string, double>& free_values,
                std::pair<double, double> t1_interval, int n) {
    if (n < 2) throw std::invalid_argument("sweep: need at least 2 samples");

    FlexTrace best;
    for (auto& sides : numeric_sides(table, free_values)) {
        bool zero_side = false;
        for (const auto& name : SideAssignment::names())
            if (std::abs(sides.at(name)) < 1e-12) zero_side = true;
        if (zero_side) continue;

        NumericParams np = numeric_params(sides);
        FlexTrace trace;
        trace.table = table;
        trace.side_values = sides;
        trace.split = params_split(np);

        bool have_prev = false;
        double prev_t2 = 0, prev_t3 = 0;
        for (int k = 0; k < n; ++k) {
            double t1 = t1_interval.first +
                        (t1_interval.second - t1_interval.first) * k / (n - 1.0);
            double tol = tolerance_at(t1);
            // Candidate branches within tolerance; continuity picks among them.
            bool found = false;
            double bt2 = 0, bt3 = 0, bcost = 0;
            std::pair<int, int> bsigns{+1, +1};
            for (int s2 : {+1, -1})
                for (int s3 : {+1, -1}) {
                    auto t2 = companion_branch(np.p[0], t1, s2);
                    auto t3 = companion_branch(np.p[2], t1, s3);
                    if (!t2 || !t3) continue;
                    double res = std::max({std::abs(equation_residual(np, 1, t1, *t2)),
                                           std::abs(equation_residual(np, 2, *t2, *t3)),
                                           std::abs(equation_residual(np, 3, t1, *t3))});
                    if (res > tol) continue;
                    double cost = have_prev
                                      ? std::abs(*t2 - prev_t2) + std::abs(*t3 - prev_t3)
                                      : res;
                    if (!found || cost < bcost) {
                        found = true;
                        bt2 = *t2;
                        bt3 = *t3;
                        bcost = cost;
                        bsigns = {s2, s3};
                    }
                }
            if (!found) continue;  // excluded sample (flex limit or rigid)
            if (!have_prev) trace.initial_signs = bsigns;
            have_prev = true;
            prev_t2 = bt2;
            prev_t3 = bt3;
            trace.samples.push_back(make_sample(np, sides, t1, bt2, bt3));
        }

        if (trace.samples.size() > best.samples.size()) best = std::move(trace);
        if (best.samples.size() >= 2) break;
    }

    if (best.samples.size() < 2)
        throw std::domain_error(
            "sweep: residuals cannot be held at zero over an interval (not a flex)");

    auto spread = [&](auto get) {
        double lo = get(best.samples.front()), hi = lo;
        for (const auto& s : best.samples) {
            lo = std::min(lo, get(s));
            hi = std::max(hi, get(s));
        }
        return hi - lo;
    };
    if (spread([](const FlexSample& s) { return s.t1; }) <= 1e-6 ||
        spread([](const FlexSample& s) { return s.t2; }) <= 1e-6 ||
        spread([](const FlexSample& s) { return s.t3; }) <= 1e-6)
        throw std::domain_error("sweep: a tangent is constant across the trace (degenerate)");
    return best;
}

CosineReport cosine_relation_check(const FlexTrace& trace, double tol) {
    CosineReport report;
    report.asserted = !trace.split;
    for (const auto& s : trace.samples)
        for (int pair = 0; pair < 3; ++pair) {
            double dev = std::abs(std::abs(s.cosines[pair][0]) - std::abs(s.cosines[pair][1]));
            report.max_deviation[pair] = std::max(report.max_deviation[pair], dev);
        }
    report.pass = !report.asserted ||
                  std::all_of(report.max_deviation.begin(), report.max_deviation.end(),
                              [&](double d) { return d <= tol; });
    return report;
}

RankReport rank_check(const FlexTrace& trace) {
    RankReport report;
    report.samples = static_cast<int>(trace.samples.size());
    for (const auto& s : trace.samples)
        if (s.sylvester_rank == 3) ++report.rank3;
    report.fraction = report.samples ? static_cast<double>(report.rank3) / report.samples : 0;
    report.pass = report.samples > 0 && report.fraction >= 0.95;
    return report;
}

namespace {

void emit_csv(const FlexTrace& trace, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("emit_frames: cannot write " + path);
    out << "t1,t2,t3";
    for (char p : std::string("ABCDEFGHI")) out << ',' << p << "x," << p << 'y';
    out << ",res1,res2,res3\n";
    out.precision(17);
    for (const auto& s : trace.samples) {
        out << s.t1 << ',' << s.t2 << ',' << s.t3;
        for (const auto& pt : s.points) out << ',' << pt[0] << ',' << pt[1];
        out << ',' << s.residuals[0] << ',' << s.residuals[1] << ',' << s.residuals[2]
            << '\n';
    }
}

void emit_svg(const FlexTrace& trace, const std::string& dir) {
    std::filesystem::create_directories(dir);
    double xlo = 0, xhi = 0, ylo = 0, yhi = 0;
    for (const auto& s : trace.samples)
        for (const auto& p : s.points) {
            xlo = std::min(xlo, p[0]);
            xhi = std::max(xhi, p[0]);
            ylo = std::min(ylo, p[1]);
            yhi = std::max(yhi, p[1]);
        }
    double pad = 0.05 * std::max(xhi - xlo, yhi - ylo) + 0.1;
    xlo -= pad, xhi += pad, ylo -= pad, yhi += pad;

    enum { A, B, C, D, E, F, G, H, I };
    static const std::array<std::pair<int, int>, 7> rods = {
        {{A, D}, {D, C}, {C, B}, {A, B}, {G, F}, {F, E}, {H, I}}};
    for (std::size_t k = 0; k < trace.samples.size(); ++k) {
        std::ostringstream name;
        name << dir << "/frame_" << std::setw(4) << std::setfill('0') << k << ".svg";
        std::ofstream out(name.str());
        if (!out) throw std::runtime_error("emit_frames: cannot write " + name.str());
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << xlo << ' ' << -yhi
            << ' ' << (xhi - xlo) << ' ' << (yhi - ylo) << "\">\n";
        const auto& pts = trace.samples[k].points;
        for (auto [i, j] : rods)
            out << "  <line x1=\"" << pts[i][0] << "\" y1=\"" << -pts[i][1] << "\" x2=\""
                << pts[j][0] << "\" y2=\"" << -pts[j][1]
                << "\" stroke=\"black\" stroke-width=\"" << 0.01 * (xhi - xlo) << "\"/>\n";
        out << "</svg>\n";
    }
}

}  // namespace

void emit_frames(const FlexTrace& trace, const std::string& format, const std::string& path) {
    if (trace.samples.empty()) throw std::invalid_argument("emit_frames: empty trace");
    if (format == "csv")
        emit_csv(trace, path);
    else if (format == "svg")
        emit_svg(trace, path);
    else
        throw std::invalid_argument("emit_frames: unknown format " + format);
}

}  // namespace bricard

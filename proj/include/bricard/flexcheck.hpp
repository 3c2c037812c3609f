#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bricard/model.hpp"

namespace bricard {

using Point2 = std::array<double, 2>;

/// One numeric state of the linkage.  Points are ordered A,B,C,D,E,F,G,H,I;
/// A=(0,0), B=(b,0), E=(e,0) exactly.  `cosines` holds the three
/// opposite-angle pairs of Theorem 4: (GFE, DCB), (CDG, IHE), (HIB, AGF).
struct FlexSample {
    double t1 = 0, t2 = 0, t3 = 0;
    std::array<Point2, 9> points{};
    std::array<double, 3> residuals{};  // |eq1|, |eq2|, |eq3|
    std::array<std::array<double, 2>, 3> cosines{};
    int sylvester_rank = -1;
};

/// A sampled flex: ordered samples over a t1 interval, the table and the
/// numeric sides that produced them, and the branch signs of Eqs. (8)-(9)
/// chosen at the first sample.
struct FlexTrace {
    std::vector<FlexSample> samples;
    std::pair<int, int> initial_signs{+1, +1};
    SolutionTable table;
    std::map<std::string, double> side_values;
    bool split = false;  // a zero-pair of Eq. (4) parameters vanishes
};

/// Numeric side maps induced by a table and bindings for its free sides.
/// Power-n relations fork on the real-root sign, one map per feasible
/// choice.  Throws std::invalid_argument when a side stays undetermined.
std::vector<std::map<std::string, double>> numeric_sides(
    const SolutionTable& table, const std::map<std::string, double>& free_values);

/// Eqs. (8)-(9): t2 = (-c1 t1 + s*sqrt(F))/(a1 t1^2 + d1) and the analogue
/// for t3 with F1; none when a radicand is negative (flex limit) or a
/// denominator vanishes (split form required).
std::optional<std::pair<double, double>> solve_companions(
    const std::map<std::string, double>& sides, double t1, std::pair<int, int> signs);

/// Samples the flex at n points of the t1 interval with branch continuity;
/// samples where no companion pair holds the residuals are excluded.
/// Throws std::domain_error when fewer than 2 samples survive (not a flex)
/// or a t_i is constant across the trace (degenerate).
FlexTrace sweep(const SolutionTable& table, const std::map<std::string, double>& free_values,
                std::pair<double, double> t1_interval, int n);

std::array<Point2, 9> reconstruct_points(const std::map<std::string, double>& sides,
                                         double t1, double t2, double t3);

/// Theorem 4 signature: max | |cos a| - |cos b| | per opposite-angle pair.
/// Asserted (pass requires <= tol) only on non-split traces.
struct CosineReport {
    std::array<double, 3> max_deviation{};
    bool asserted = true;
    bool pass = false;
};
CosineReport cosine_relation_check(const FlexTrace& trace, double tol = 1e-8);

/// Lemma 5 signature: numeric rank of the Sylvester matrix (7) per sample;
/// passes when rank is 3 at >= 95% of samples.
struct RankReport {
    int samples = 0;
    int rank3 = 0;
    double fraction = 0;
    bool pass = false;
};
RankReport rank_check(const FlexTrace& trace);

/// csv: one file, header t1,t2,t3,Ax,Ay,...,Iy,res1,res2,res3.
/// svg: one frame per sample under `path` (created as a directory).
void emit_frames(const FlexTrace& trace, const std::string& format, const std::string& path);

}  // namespace bricard

#pragma once

#include <atomic>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "bricard/polynomial.hpp"
#include "bricard/table.hpp"

namespace bricard {

/// Search configuration for the coefficient-killing tree search.
struct SearchConfig {
    enum class CoefficientOrder { TopDown, SmallestFirst };

    unsigned max_depth = 12;
    bool suppress_splits = true;
    bool suppress_degenerate = true;
    unsigned branch_limit = 64;
    CoefficientOrder coefficient_order = CoefficientOrder::TopDown;
    unsigned threads = 1;
    /// When set, receives one line per search node.
    std::ostream* log = nullptr;
};

/// Relations that make `coeff` vanish identically: for each factor found by
/// content/squarefree/difference-of-squares splitting, every parameter the
/// factor is linear in yields `p = rhs`, and every parameter appearing only
/// with exponents that are multiples of n (factor linear in p^n) yields
/// `p^n = rhs`.  Targets in `forbidden` are skipped, as are relations that
/// force a target to zero.
std::vector<Relation> kill_candidates(const Polynomial& coeff,
                                      const std::set<std::string>& forbidden);

/// Branches the suppression flags cut, counted once per suppression point
/// (partial or complete table).
struct SolveStats {
    std::atomic<std::size_t> suppressed_split{0};
    std::atomic<std::size_t> suppressed_degenerate{0};
};

/// Depth-first coefficient-killing search: returns every table found whose
/// substitution makes p identically zero, deduplicated by canonical form and
/// sorted deterministically (independent of thread count).
std::vector<SolutionTable> solve(const Polynomial& p, const std::string& t,
                                 const SearchConfig& config = {},
                                 SolveStats* stats = nullptr);

struct VerifyResult {
    bool zero = false;
    /// p after all relations are substituted with denominators cleared;
    /// integer-primitive. Zero exactly when the table annihilates p.
    Polynomial residual;
};

/// Substitutes the table's relations into p in dependency order.  Throws
/// std::domain_error on cyclic dependencies or when a power-n relation
/// cannot be applied because the target occurs with exponents not divisible
/// by n.
VerifyResult verify_table(const Polynomial& p, const SolutionTable& table);

/// Sorts relations by target name (then power); rhs are already in
/// RationalExpression normal form.  Tables are equal iff their canonical
/// forms are equal.
SolutionTable canonicalize(SolutionTable table);

/// Tests the isohexagon property: with r = (b-e)/e, every side of each
/// quadrilateral has a partner on a different quadrilateral whose ratio to it
/// is r, 1+r, -r or -(1+r), symbolically.  The quadrilateral side groups are
/// {e, s2, s5, s7}, {b-e, s8, s3, s6} and {b, s4, s9, s1}.  Throws
/// std::domain_error when the table leaves a side undetermined (power > 1
/// relations or cyclic dependencies).
bool isohexagon_check(const SolutionTable& table);

}  // namespace bricard

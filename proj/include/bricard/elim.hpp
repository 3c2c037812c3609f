#pragma once

#include <string>
#include <vector>

#include "bricard/rational_expression.hpp"

namespace bricard {

/// Rectangular matrix of polynomials over one universe.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, UniversePtr u)
        : rows_(rows), cols_(cols), entries_(rows * cols, Polynomial::zero(u)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Polynomial& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<Polynomial> entries_;
};

/// Exact determinant: cofactor expansion for dimension <= 4, fraction-free
/// Bareiss elimination above that.
Polynomial determinant(const PolyMatrix& m);
Polynomial determinant_cofactor(const PolyMatrix& m);
Polynomial determinant_bareiss(const PolyMatrix& m);

/// Classic Sylvester layout, f's coefficient rows first.
PolyMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g, const std::string& var);

Polynomial resultant(const Polynomial& f, const Polynomial& g, const std::string& var);

/// One removal performed by the strip policy.
struct StrippedFactor {
    Polynomial factor;
    unsigned multiplicity;
    std::string reason;  // "integer content" | "repeated factor" | "free of targets"
};

struct EliminationStep {
    std::string variable;
    std::size_t raw_term_count;
    std::vector<StrippedFactor> stripped;
    std::size_t result_term_count;
};

struct EliminationReport {
    std::vector<std::string> eliminated;
    std::vector<EliminationStep> steps;
    Polynomial result;

    std::string to_text() const;
};

/// Post-resultant cleanup.  Factors free of the protected target variables
/// are removed only when they factor completely into atoms that are nonzero
/// under the side constraints (each side, b-e, s7-s1, s3-s9, s2-s8).
struct StripPolicy {
    bool integer_content = true;
    bool squarefree = true;
    bool drop_free_factors = true;
    std::vector<std::string> targets = {"t1"};  // variables res must keep
};

/// Pairwise-resultant pipeline following `order`; at each step the two
/// polynomials of positive degree in the step variable are replaced by their
/// resultant, stripped per policy.
EliminationReport eliminate(std::vector<Polynomial> system,
                            const std::vector<std::string>& order,
                            const StripPolicy& strip = {});

/// Generic rank over the rational-function field (exact zero tests).
int rank_over_function_field(const PolyMatrix& m);

/// The common root of f and g in `var`, recovered from the kernel of the
/// Sylvester matrix (rank must be N-1 with nonzero extreme coefficients).
RationalExpression recover_rational_root(const Polynomial& f, const Polynomial& g,
                                         const std::string& var);

}  // namespace bricard

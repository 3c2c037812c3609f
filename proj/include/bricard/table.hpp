#pragma once

#include <string>
#include <vector>

#include "bricard/rational_expression.hpp"

namespace bricard {

/// One substitution-table relation: target^power = rhs.  power is 1 for the
/// common case; 2 for squared-side relations like s6^2 = ...
struct Relation {
    std::string target;
    unsigned power = 1;
    RationalExpression rhs;

    bool operator==(const Relation& o) const {
        return target == o.target && power == o.power && rhs == o.rhs;
    }
};

/// A set of relations expressing bound sides (Y) in terms of free ones (X).
struct SolutionTable {
    std::vector<Relation> relations;

    std::vector<std::string> bound_variables() const;
    /// Variables mentioned on any rhs but never bound.
    std::vector<std::string> free_variables() const;
    const Relation* find(const std::string& target) const;

    bool operator==(const SolutionTable& o) const { return relations == o.relations; }

    std::string to_string() const;
};

}  // namespace bricard

#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace bricard {

/// Fixed, ordered set of symbol names shared by all polynomials that
/// reference it.  The order defines the term order and never changes.
class VariableUniverse {
public:
    explicit VariableUniverse(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    bool contains(const std::string& name) const {
        return index_.find(name) != index_.end();
    }
    std::size_t index_of(const std::string& name) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const VariableUniverse>;

/// The standard universe for the three-quadrilateral model:
/// s1..s9 < e < b < t1 < t2 < t3 < cosA < cosT1 < cosT2 < r1 < t.
UniversePtr standard_universe();

/// A universe holding the given names in the given order.
UniversePtr make_universe(std::vector<std::string> names);

}  // namespace bricard

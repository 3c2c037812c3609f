#include "bricard/table.hpp"

#include <set>

namespace bricard {

std::vector<std::string> SolutionTable::bound_variables() const {
    std::vector<std::string> out;
    for (const auto& r : relations) out.push_back(r.target);
    return out;
}

std::vector<std::string> SolutionTable::free_variables() const {
    auto bound_list = bound_variables();
    std::set<std::string> bound(bound_list.begin(), bound_list.end());
    std::set<std::string> free;
    for (const auto& r : relations) {
        const auto& u = r.rhs.numerator().universe();
        for (std::size_t v : r.rhs.numerator().variables_present())
            if (!bound.count(u->name(v))) free.insert(u->name(v));
        for (std::size_t v : r.rhs.denominator().variables_present())
            if (!bound.count(u->name(v))) free.insert(u->name(v));
    }
    return {free.begin(), free.end()};
}

const Relation* SolutionTable::find(const std::string& target) const {
    for (const auto& r : relations)
        if (r.target == target) return &r;
    return nullptr;
}

std::string SolutionTable::to_string() const {
    std::string out;
    for (const auto& r : relations) {
        out += r.target;
        if (r.power != 1) out += "^" + std::to_string(r.power);
        out += " = " + r.rhs.to_string() + "\n";
    }
    return out;
}

}  // namespace bricard

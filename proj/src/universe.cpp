#include "bricard/universe.hpp"

namespace bricard {

VariableUniverse::VariableUniverse(std::vector<std::string> names)
    : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        auto [it, inserted] = index_.emplace(names_[i], i);
        if (!inserted)
            throw std::invalid_argument("duplicate variable name: " + names_[i]);
    }
}

std::size_t VariableUniverse::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw std::out_of_range("unknown variable: " + name);
    return it->second;
}

UniversePtr make_universe(std::vector<std::string> names) {
    return std::make_shared<const VariableUniverse>(std::move(names));
}

UniversePtr standard_universe() {
    static const UniversePtr u = make_universe({
        "s1", "s2", "s3", "s4", "s5", "s6", "s7", "s8", "s9",
        "e", "b", "t1", "t2", "t3",
        "cosA", "cosT1", "cosT2", "r1", "t"});
    return u;
}

}  // namespace bricard

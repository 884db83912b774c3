#include "srcdec/ordering.hpp"

#include <algorithm>
#include <unordered_set>

#include "srcdec/errors.hpp"
#include "srcdec/monomial.hpp"

namespace srcdec {

VarOrdering::VarOrdering(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw DomainError("variable ordering must not be empty");
    if (names_.size() > Monomial::kMaxVariables)
        throw DomainError("at most " + std::to_string(Monomial::kMaxVariables) +
                          " variables are supported");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw DomainError("empty variable name");
        if (!seen.insert(n).second) throw DomainError("duplicate variable '" + n + "'");
    }
}

std::optional<std::size_t> VarOrdering::index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

OrderingPtr make_ordering(std::vector<std::string> names) {
    return std::make_shared<const VarOrdering>(std::move(names));
}

OrderingPtr with_tag_variable(const OrderingPtr& base, std::string_view tag) {
    std::vector<std::string> names = base->names();
    std::string name(tag);
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
    names.push_back(std::move(name));
    return make_ordering(std::move(names));
}

bool same_ordering(const OrderingPtr& a, const OrderingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_same_ordering(const OrderingPtr& a, const OrderingPtr& b) {
    if (!same_ordering(a, b))
        throw StructuralError("polynomials belong to different variable orderings");
}

}  // namespace srcdec

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace srcdec {

/// Ordered variable list x1 < ... < xn fixing the lex term order.
/// Index 0 is the smallest variable.
class VarOrdering {
public:
    /// Throws DomainError on empty, duplicate, or too many names.
    explicit VarOrdering(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t index) const { return names_.at(index); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const VarOrdering& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

using OrderingPtr = std::shared_ptr<const VarOrdering>;

OrderingPtr make_ordering(std::vector<std::string> names);

/// `base` with one new variable appended as the greatest. The tag name is
/// chosen outside the identifier grammar accepted by the system parser.
OrderingPtr with_tag_variable(const OrderingPtr& base, std::string_view tag);

/// True when both handles denote the same variable list.
bool same_ordering(const OrderingPtr& a, const OrderingPtr& b);

/// Throws StructuralError unless same_ordering(a, b).
void require_same_ordering(const OrderingPtr& a, const OrderingPtr& b);

}  // namespace srcdec

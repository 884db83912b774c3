#pragma once

#include <vector>

#include "srcdec/groebner.hpp"

namespace srcdec {

/// Polynomials with strictly increasing leading variables, or the trivial
/// set [1] (no polynomials, trivial() == true).
class TriangularSet {
public:
    /// DomainError if an element is constant or the leading variables are
    /// not strictly increasing in the given order.
    TriangularSet(OrderingPtr ordering, std::vector<Polynomial> polys);

    static TriangularSet trivial(OrderingPtr ordering);

    const OrderingPtr& ordering() const noexcept { return ordering_; }
    const std::vector<Polynomial>& polys() const noexcept { return polys_; }
    std::size_t size() const noexcept { return polys_.size(); }
    bool is_trivial() const noexcept { return polys_.empty(); }

    std::vector<std::size_t> leading_variables() const;
    /// Variables that are not leading variables of any element.
    std::vector<std::size_t> parameters() const;
    /// Every parameter is smaller than every leading variable.
    bool satisfies_ordering_condition() const;

    /// The first k elements.
    TriangularSet prefix(std::size_t k) const;

    bool operator==(const TriangularSet& other) const;

private:
    explicit TriangularSet(OrderingPtr ordering);

    OrderingPtr ordering_;
    std::vector<Polynomial> polys_;
};

/// Lex-smallest basis element per occupied leading variable; [1] for {1}.
TriangularSet wchar_set(const ReducedGB& g);

/// Product of the initials. DomainError on the trivial set.
Polynomial initials_product(const TriangularSet& t);

/// Reduced basis of sat(T) = <T> : J^∞; {1} for the trivial set.
ReducedGB sat_triset(const TriangularSet& t, ComputeContext* ctx = nullptr);

/// Iterated pseudo-remainder. DomainError on the trivial set.
Polynomial prem_triset(const Polynomial& p, const TriangularSet& t);

/// sat(T) equals the set of polynomials pseudo-reducing to zero.
/// DomainError on the trivial set.
bool is_regular(const TriangularSet& t, ComputeContext* ctx = nullptr);
/// Same test with sat(T) already known.
bool is_regular(const TriangularSet& t, const ReducedGB& saturation);

/// No initial involves a leading variable. DomainError on the trivial set.
bool is_normal(const TriangularSet& t);

/// sat(T) is the saturation of some regular set: the W-characteristic set C
/// of sat(T) is regular and sat(C) = sat(T). Requires the variable ordering
/// condition (DomainError otherwise) and a nontrivial T.
bool is_equiprojectable(const TriangularSet& t, ComputeContext* ctx = nullptr);

std::string to_string(const TriangularSet& t);

}  // namespace srcdec

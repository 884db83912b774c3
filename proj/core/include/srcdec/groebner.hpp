#pragma once

#include <span>
#include <vector>

#include "srcdec/context.hpp"
#include "srcdec/polynomial.hpp"

namespace srcdec {

/// Generators of an ideal. Zero polynomials are dropped on construction.
class IdealGens {
public:
    explicit IdealGens(OrderingPtr ordering, std::vector<Polynomial> gens = {});

    const OrderingPtr& ordering() const noexcept { return ordering_; }
    const std::vector<Polynomial>& gens() const noexcept { return gens_; }
    bool empty() const noexcept { return gens_.empty(); }

    void add(Polynomial p);

private:
    OrderingPtr ordering_;
    std::vector<Polynomial> gens_;
};

/// Reduced lex Groebner basis: monic elements sorted ascending by leading
/// term, mutually irreducible. Equal ideals give identical values.
class ReducedGB {
public:
    /// The zero ideal over `ordering`.
    explicit ReducedGB(OrderingPtr ordering);

    /// Wraps a list that is already a reduced basis; elements are sorted.
    /// Only the Groebner engine and elimination should call this.
    static ReducedGB from_reduced(OrderingPtr ordering, std::vector<Polynomial> basis);
    static ReducedGB unit(OrderingPtr ordering);

    const OrderingPtr& ordering() const noexcept { return ordering_; }
    const std::vector<Polynomial>& basis() const noexcept { return basis_; }
    std::size_t size() const noexcept { return basis_.size(); }
    bool is_unit() const noexcept { return basis_.size() == 1 && basis_[0].is_one(); }
    bool is_zero_ideal() const noexcept { return basis_.empty(); }

    /// Total number of terms over all elements.
    std::size_t term_count() const noexcept;

    IdealGens as_gens() const { return IdealGens(ordering_, basis_); }

    bool operator==(const ReducedGB& other) const;

private:
    ReducedGB(OrderingPtr ordering, std::vector<Polynomial> basis);

    OrderingPtr ordering_;
    std::vector<Polynomial> basis_;
};

ReducedGB groebner_basis(const IdealGens& ideal, ComputeContext* ctx = nullptr);

/// Groebner basis of <base> + <extra>. Pairs inside `base` are known to
/// reduce to zero and are skipped.
ReducedGB groebner_extend(const ReducedGB& base, std::span<const Polynomial> extra,
                          ComputeContext* ctx = nullptr);

/// Unique remainder of p modulo G with no term divisible by a leading term.
Polynomial normal_form(const Polynomial& p, const ReducedGB& g);

bool is_member(const Polynomial& p, const ReducedGB& g);

/// Identity of canonical bases. StructuralError on mismatched orderings.
bool ideal_equal(const ReducedGB& a, const ReducedGB& b);

/// Elements of G that involve only the smallest `keep` variables, i.e. the
/// reduced basis of <G> intersected with K[x_1..x_keep], as a basis over
/// `target`, which must be the length-`keep` prefix of G's ordering.
/// DomainError when target is not a prefix.
ReducedGB eliminate(const ReducedGB& g, const OrderingPtr& target);

/// Every S-polynomial of basis pairs and every listed generator reduce to
/// zero. Used by tests and the verifier.
bool is_groebner_of(const ReducedGB& g, std::span<const Polynomial> generators);

/// S-polynomial of two nonzero polynomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

}  // namespace srcdec

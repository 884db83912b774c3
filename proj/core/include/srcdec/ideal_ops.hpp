#pragma once

#include "srcdec/groebner.hpp"

namespace srcdec {

/// Reduced basis of <a> ∩ <b>, via t*a + (1-t)*b with a new greatest
/// variable t eliminated.
ReducedGB intersect(const ReducedGB& a, const ReducedGB& b, ComputeContext* ctx = nullptr);

/// Reduced basis of <g> : <d> = ∩_f ((<g> ∩ <f>) / f) over the basis
/// elements f of d. DomainError if d is the zero ideal.
ReducedGB quotient(const ReducedGB& g, const ReducedGB& d, ComputeContext* ctx = nullptr);

/// Reduced basis of <g> : <d>^∞ = ∩_f (<g> : f^∞) over the basis elements
/// f of d. DomainError if d is the zero ideal.
ReducedGB saturate(const ReducedGB& g, const ReducedGB& d, ComputeContext* ctx = nullptr);

/// <g> : <f> for a single nonzero f.
ReducedGB quotient_by_poly(const ReducedGB& g, const Polynomial& f, ComputeContext* ctx = nullptr);

/// <g> : j^∞ as (<g> + <1 - w*j>) ∩ K[x] with a new greatest variable w.
/// DomainError if j is zero.
ReducedGB saturate_by_poly(const ReducedGB& g, const Polynomial& j, ComputeContext* ctx = nullptr);
/// Same, starting from generators that need not form a basis.
ReducedGB saturate_by_poly(const IdealGens& gens, const Polynomial& j, ComputeContext* ctx = nullptr);

/// p ∈ √<g>, decided by 1 ∈ <g> + <1 - w*p>.
bool radical_member(const Polynomial& p, const ReducedGB& g, ComputeContext* ctx = nullptr);

/// <j> divides <i> when <i> : <j> differs from <i>.
bool divides(const ReducedGB& j, const ReducedGB& i, ComputeContext* ctx = nullptr);

}  // namespace srcdec

#include "srcdec/ideal_ops.hpp"

#include "srcdec/errors.hpp"

namespace srcdec {

namespace {

constexpr const char* kIntersectTag = "%t";
constexpr const char* kSaturateTag = "%w";

std::vector<Polynomial> embedded(const std::vector<Polynomial>& ps, const OrderingPtr& wide) {
    std::vector<Polynomial> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(p.embed(wide));
    return out;
}

// The generator list with w*j - 1 appended, over the ordering with w.
std::vector<Polynomial> rabinowitsch(const std::vector<Polynomial>& gens, const Polynomial& j,
                                     const OrderingPtr& wide) {
    std::vector<Polynomial> out = embedded(gens, wide);
    const Polynomial w = Polynomial::variable(wide, wide->size() - 1);
    out.push_back(w * j.embed(wide) - Polynomial::constant(wide, 1));
    return out;
}

}  // namespace

ReducedGB intersect(const ReducedGB& a, const ReducedGB& b, ComputeContext* ctx) {
    require_same_ordering(a.ordering(), b.ordering());
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    if (a.is_zero_ideal()) return a;
    if (b.is_zero_ideal()) return b;
    if (a == b) return a;
    const OrderingPtr wide = with_tag_variable(a.ordering(), kIntersectTag);
    const Polynomial t = Polynomial::variable(wide, wide->size() - 1);
    const Polynomial one_minus_t = Polynomial::constant(wide, 1) - t;
    IdealGens gens(wide);
    for (const auto& p : a.basis()) gens.add(t * p.embed(wide));
    for (const auto& p : b.basis()) gens.add(one_minus_t * p.embed(wide));
    return eliminate(groebner_basis(gens, ctx), a.ordering());
}

ReducedGB quotient_by_poly(const ReducedGB& g, const Polynomial& f, ComputeContext* ctx) {
    require_same_ordering(g.ordering(), f.ordering());
    if (f.is_zero()) throw DomainError("quotient by the zero polynomial");
    if (f.is_constant()) return g;
    if (is_member(f, g)) return ReducedGB::unit(g.ordering());
    PhaseScope scope(ctx, Phase::Quotient);
    const Polynomial fm = f.monic();
    const ReducedGB meet = intersect(g, groebner_basis(IdealGens(g.ordering(), {fm}), ctx), ctx);
    std::vector<Polynomial> divided;
    divided.reserve(meet.size());
    for (const auto& h : meet.basis()) {
        auto q = divide_exact(h, fm);
        if (!q) throw InternalError("element of <G> ∩ <f> not divisible by f");
        divided.push_back(std::move(*q));
    }
    // Dividing a reduced basis of <G> ∩ <f> by f leaves a basis of <G> : f,
    // but not necessarily a reduced one.
    return groebner_basis(IdealGens(g.ordering(), std::move(divided)), ctx);
}

ReducedGB quotient(const ReducedGB& g, const ReducedGB& d, ComputeContext* ctx) {
    require_same_ordering(g.ordering(), d.ordering());
    if (d.is_zero_ideal()) throw DomainError("quotient by the zero ideal");
    if (d.is_unit()) return g;
    PhaseScope scope(ctx, Phase::Quotient);
    ReducedGB running = ReducedGB::unit(g.ordering());
    bool first = true;
    for (const auto& f : d.basis()) {
        ReducedGB part = quotient_by_poly(g, f, ctx);
        running = first ? std::move(part) : intersect(running, part, ctx);
        first = false;
        // The quotient contains <G>, so reaching <G> is final.
        if (running == g) break;
    }
    return running;
}

ReducedGB saturate(const ReducedGB& g, const ReducedGB& d, ComputeContext* ctx) {
    require_same_ordering(g.ordering(), d.ordering());
    if (d.is_zero_ideal()) throw DomainError("saturation by the zero ideal");
    if (d.is_unit()) return g;
    PhaseScope scope(ctx, Phase::Quotient);
    ReducedGB running = ReducedGB::unit(g.ordering());
    bool first = true;
    for (const auto& f : d.basis()) {
        ReducedGB part = saturate_by_poly(g, f, ctx);
        running = first ? std::move(part) : intersect(running, part, ctx);
        first = false;
        if (running == g) break;
    }
    return running;
}

ReducedGB saturate_by_poly(const ReducedGB& g, const Polynomial& j, ComputeContext* ctx) {
    require_same_ordering(g.ordering(), j.ordering());
    if (j.is_zero()) throw DomainError("saturation by the zero polynomial");
    if (j.is_constant() || g.is_unit()) return g;
    if (is_member(j, g)) return ReducedGB::unit(g.ordering());
    PhaseScope scope(ctx, Phase::Saturation);
    const OrderingPtr wide = with_tag_variable(g.ordering(), kSaturateTag);
    const ReducedGB base = ReducedGB::from_reduced(wide, embedded(g.basis(), wide));
    const Polynomial w = Polynomial::variable(wide, wide->size() - 1);
    const Polynomial extra = w * j.embed(wide) - Polynomial::constant(wide, 1);
    return eliminate(groebner_extend(base, std::span(&extra, 1), ctx), g.ordering());
}

ReducedGB saturate_by_poly(const IdealGens& gens, const Polynomial& j, ComputeContext* ctx) {
    require_same_ordering(gens.ordering(), j.ordering());
    if (j.is_zero()) throw DomainError("saturation by the zero polynomial");
    if (j.is_constant()) return groebner_basis(gens, ctx);
    PhaseScope scope(ctx, Phase::Saturation);
    const OrderingPtr wide = with_tag_variable(gens.ordering(), kSaturateTag);
    IdealGens ext(wide, rabinowitsch(gens.gens(), j, wide));
    return eliminate(groebner_basis(ext, ctx), gens.ordering());
}

bool radical_member(const Polynomial& p, const ReducedGB& g, ComputeContext* ctx) {
    require_same_ordering(p.ordering(), g.ordering());
    if (g.is_unit() || is_member(p, g)) return true;
    if (p.is_constant()) return false;
    PhaseScope scope(ctx, Phase::Other);
    const OrderingPtr wide = with_tag_variable(g.ordering(), kSaturateTag);
    const ReducedGB base = ReducedGB::from_reduced(wide, embedded(g.basis(), wide));
    const Polynomial w = Polynomial::variable(wide, wide->size() - 1);
    const Polynomial extra = w * p.embed(wide) - Polynomial::constant(wide, 1);
    return groebner_extend(base, std::span(&extra, 1), ctx).is_unit();
}

bool divides(const ReducedGB& j, const ReducedGB& i, ComputeContext* ctx) {
    return !(quotient(i, j, ctx) == i);
}

}  // namespace srcdec

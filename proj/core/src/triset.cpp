#include "srcdec/triset.hpp"

#include <algorithm>

#include "srcdec/errors.hpp"
#include "srcdec/ideal_ops.hpp"

namespace srcdec {

namespace {

void require_nontrivial(const TriangularSet& t, const char* op) {
    if (t.is_trivial()) throw DomainError(std::string(op) + " of the trivial triangular set");
}

}  // namespace

TriangularSet::TriangularSet(OrderingPtr ordering) : ordering_(std::move(ordering)) {}

TriangularSet::TriangularSet(OrderingPtr ordering, std::vector<Polynomial> polys)
    : ordering_(std::move(ordering)), polys_(std::move(polys)) {
    int last = -1;
    for (const auto& p : polys_) {
        require_same_ordering(ordering_, p.ordering());
        if (p.is_constant()) throw DomainError("triangular set element is constant");
        if (p.leading_variable() <= last)
            throw DomainError("leading variables of a triangular set must strictly increase");
        last = p.leading_variable();
    }
}

TriangularSet TriangularSet::trivial(OrderingPtr ordering) { return TriangularSet(std::move(ordering)); }

std::vector<std::size_t> TriangularSet::leading_variables() const {
    std::vector<std::size_t> out;
    for (const auto& p : polys_) out.push_back(lv(p));
    return out;
}

std::vector<std::size_t> TriangularSet::parameters() const {
    const auto lvs = leading_variables();
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < ordering_->size(); ++v)
        if (std::find(lvs.begin(), lvs.end(), v) == lvs.end()) out.push_back(v);
    return out;
}

bool TriangularSet::satisfies_ordering_condition() const {
    if (polys_.empty()) return true;
    const std::size_t smallest_lv = lv(polys_.front());
    for (std::size_t p : parameters())
        if (p > smallest_lv) return false;
    return true;
}

TriangularSet TriangularSet::prefix(std::size_t k) const {
    TriangularSet t(ordering_);
    t.polys_.assign(polys_.begin(), polys_.begin() + static_cast<std::ptrdiff_t>(std::min(k, polys_.size())));
    return t;
}

bool TriangularSet::operator==(const TriangularSet& other) const {
    return same_ordering(ordering_, other.ordering_) && polys_ == other.polys_;
}

TriangularSet wchar_set(const ReducedGB& g) {
    if (g.is_unit() || g.is_zero_ideal()) return TriangularSet::trivial(g.ordering());
    // The basis is sorted ascending by leading term, and lex order groups
    // elements by leading variable, so the first element seen for each
    // leading variable is the smallest one.
    std::vector<Polynomial> picked;
    int last = -1;
    for (const auto& p : g.basis()) {
        const int v = p.leading_variable();
        if (v > last) {
            picked.push_back(p);
            last = v;
        }
    }
    return TriangularSet(g.ordering(), std::move(picked));
}

Polynomial initials_product(const TriangularSet& t) {
    require_nontrivial(t, "initials product");
    Polynomial j = Polynomial::constant(t.ordering(), 1);
    for (const auto& p : t.polys()) j *= ini(p);
    return j;
}

ReducedGB sat_triset(const TriangularSet& t, ComputeContext* ctx) {
    if (t.is_trivial()) return ReducedGB::unit(t.ordering());
    return saturate_by_poly(IdealGens(t.ordering(), t.polys()), initials_product(t), ctx);
}

Polynomial prem_triset(const Polynomial& p, const TriangularSet& t) {
    require_nontrivial(t, "pseudo-remainder");
    return prem_chain(p, t.polys());
}

bool is_regular(const TriangularSet& t, const ReducedGB& saturation) {
    require_nontrivial(t, "regularity test");
    if (saturation.is_unit()) return false;
    return std::all_of(saturation.basis().begin(), saturation.basis().end(),
                       [&](const Polynomial& g) { return prem_triset(g, t).is_zero(); });
}

bool is_regular(const TriangularSet& t, ComputeContext* ctx) {
    require_nontrivial(t, "regularity test");
    return is_regular(t, sat_triset(t, ctx));
}

bool is_normal(const TriangularSet& t) {
    require_nontrivial(t, "normality test");
    const auto lvs = t.leading_variables();
    for (const auto& p : t.polys()) {
        const Polynomial i = ini(p);
        for (std::size_t v : lvs)
            if (i.involves(v)) return false;
    }
    return true;
}

bool is_equiprojectable(const TriangularSet& t, ComputeContext* ctx) {
    require_nontrivial(t, "equiprojectability test");
    if (!t.satisfies_ordering_condition())
        throw DomainError("equiprojectability needs all parameters below the leading variables");
    const ReducedGB sat = sat_triset(t, ctx);
    const TriangularSet c = wchar_set(sat);
    if (c.is_trivial()) return false;
    return is_regular(c, ctx) && ideal_equal(sat, sat_triset(c, ctx));
}

std::string to_string(const TriangularSet& t) {
    if (t.is_trivial()) return "[1]";
    std::string out = "[";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ", ";
        out += to_string(t.polys()[i]);
    }
    return out + "]";
}

}  // namespace srcdec

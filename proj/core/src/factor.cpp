#include <algorithm>

#include "srcdec/errors.hpp"
#include "srcdec/polynomial.hpp"

namespace srcdec {

namespace {

Polynomial one_like(const Polynomial& p) { return Polynomial::constant(p.ordering(), 1); }

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    auto q = divide_exact(a, b);
    if (!q) throw InternalError("expected exact division failed");
    return std::move(*q);
}

// Primitive part of p with respect to var, integer-normalized.
Polynomial primitive_part_in(const Polynomial& p, std::size_t var) {
    if (p.is_zero()) return p;
    return exact_quotient(p, content_in(p, var)).primitive();
}

// Yun's squarefree decomposition of a polynomial primitive in var:
// a = prod f_i^i with f_i squarefree and pairwise coprime. Only the
// nonconstant f_i are returned.
std::vector<Polynomial> yun(const Polynomial& a, std::size_t var) {
    std::vector<Polynomial> out;
    Polynomial b = a.derivative(var);
    Polynomial c = gcd(a, b);
    Polynomial w = exact_quotient(a, c);
    Polynomial y = exact_quotient(b, c);
    Polynomial z = y - w.derivative(var);
    while (!w.is_constant()) {
        Polynomial g = gcd(w, z);
        if (!g.is_constant()) out.push_back(g.monic());
        w = exact_quotient(w, g);
        y = exact_quotient(z, g);
        z = y - w.derivative(var);
    }
    return out;
}

void split_into(const Polynomial& p, std::vector<Polynomial>& out) {
    if (p.is_constant()) return;
    const std::size_t x = lv(p);
    Polynomial c = content_in(p, x);
    split_into(c, out);
    for (auto& f : yun(exact_quotient(p, c).primitive(), x)) out.push_back(std::move(f));
}

}  // namespace

Polynomial content_in(const Polynomial& p, std::size_t var) {
    if (p.is_zero()) return p;
    auto coeffs = p.coefficients_in(var);
    // Start from the shortest coefficient to keep the gcd chain cheap.
    std::stable_sort(coeffs.begin(), coeffs.end(),
                     [](const Polynomial& a, const Polynomial& b) { return a.size() < b.size(); });
    Polynomial g(p.ordering());
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) return one_like(p);
    }
    return g.monic();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    require_same_ordering(a.ordering(), b.ordering());
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return one_like(a);
    const std::size_t va = lv(a), vb = lv(b);
    if (va > vb) return gcd(content_in(a, va), b);
    if (vb > va) return gcd(a, content_in(b, vb));
    const std::size_t x = va;

    Polynomial ca = content_in(a, x);
    Polynomial cb = content_in(b, x);
    Polynomial common = gcd(ca, cb);
    Polynomial pa = exact_quotient(a, ca).primitive();
    Polynomial pb = exact_quotient(b, cb).primitive();
    if (pa.degree(x) < pb.degree(x)) std::swap(pa, pb);

    // Primitive polynomial remainder sequence in x.
    Polynomial g;
    while (true) {
        Polynomial r = pseudo_divide(pa, pb, x).remainder;
        if (r.is_zero()) {
            g = pb;
            break;
        }
        if (r.degree(x) == 0) {
            g = one_like(a);
            break;
        }
        pa = std::move(pb);
        pb = primitive_part_in(r, x);
    }
    if (!g.is_constant()) g = primitive_part_in(g, x);
    return (common * g).monic();
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_constant()) throw DomainError("squarefree part of a constant polynomial");
    const std::size_t x = lv(p);
    Polynomial c = content_in(p, x);
    Polynomial pp = exact_quotient(p, c);
    Polynomial s = exact_quotient(pp, gcd(pp, pp.derivative(x)));
    if (!c.is_constant()) s *= squarefree_part(c);
    return s.monic();
}

std::vector<Polynomial> factor_split(const Polynomial& p, SplitStrategy strategy) {
    if (p.is_constant()) throw DomainError("factor split of a constant polynomial");
    if (strategy == SplitStrategy::Coarse) return {squarefree_part(p)};
    std::vector<Polynomial> out;
    split_into(p, out);
    std::sort(out.begin(), out.end(), Polynomial::lex_less);
    return out;
}

}  // namespace srcdec

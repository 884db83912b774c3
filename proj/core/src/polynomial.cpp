#include "srcdec/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "srcdec/errors.hpp"

namespace srcdec {

namespace {

using Term = Polynomial::Term;

bool term_desc(const Term& a, const Term& b) { return a.mono > b.mono; }

// a*ca + b*cb over sorted term lists, with b's monomials multiplied by shift.
std::vector<Term> combine(std::span<const Term> a, const Rational& ca, std::span<const Term> b,
                          const Rational& cb, const Monomial* shift = nullptr) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    Rational tmp;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            out.push_back({a[i].coeff * ca, a[i].mono});
            ++i;
            continue;
        }
        Monomial mb = shift ? b[j].mono * *shift : b[j].mono;
        if (i == a.size()) {
            out.push_back({b[j].coeff * cb, mb});
            ++j;
            continue;
        }
        auto cmp = a[i].mono <=> mb;
        if (cmp > 0) {
            out.push_back({a[i].coeff * ca, a[i].mono});
            ++i;
        } else if (cmp < 0) {
            out.push_back({b[j].coeff * cb, mb});
            ++j;
        } else {
            tmp = a[i].coeff * ca + b[j].coeff * cb;
            if (sgn(tmp) != 0) out.push_back({tmp, mb});
            ++i;
            ++j;
        }
    }
    return out;
}

void require_nonconstant(const Polynomial& p, const char* what) {
    if (p.is_constant()) throw DomainError(std::string(what) + " of a constant polynomial");
}

}  // namespace

Polynomial::Polynomial(OrderingPtr ordering) : ordering_(std::move(ordering)) {}

Polynomial::Polynomial(OrderingPtr ordering, std::vector<Term> sorted_terms)
    : ordering_(std::move(ordering)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(OrderingPtr ordering, const Rational& value) {
    Polynomial p(std::move(ordering));
    if (sgn(value) != 0) {
        Rational c = value;
        c.canonicalize();
        p.terms_.push_back({c, Monomial(p.arity())});
    }
    return p;
}

Polynomial Polynomial::variable(OrderingPtr ordering, std::size_t index, unsigned exponent) {
    Monomial m(ordering->size());
    m.set(index, exponent);
    return monomial(std::move(ordering), 1, m);
}

Polynomial Polynomial::monomial(OrderingPtr ordering, const Rational& coeff,
                                const Monomial& mono) {
    Polynomial p(std::move(ordering));
    if (mono.arity() != p.arity()) throw StructuralError("monomial arity mismatch");
    if (sgn(coeff) != 0) {
        Rational c = coeff;
        c.canonicalize();
        p.terms_.push_back({c, mono});
    }
    return p;
}

Polynomial Polynomial::from_terms(OrderingPtr ordering, std::vector<Term> terms) {
    const std::size_t n = ordering->size();
    for (auto& t : terms) {
        if (t.mono.arity() != n) throw StructuralError("monomial arity mismatch");
        t.coeff.canonicalize();
    }
    std::sort(terms.begin(), terms.end(), term_desc);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
            if (sgn(out.back().coeff) == 0) out.pop_back();
        } else if (sgn(t.coeff) != 0) {
            out.push_back(std::move(t));
        }
    }
    return Polynomial(std::move(ordering), std::move(out));
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_one() const noexcept {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return terms_.front().mono;
}

const Rational& Polynomial::leading_coeff() const {
    if (terms_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return terms_.front().coeff;
}

int Polynomial::leading_variable() const noexcept {
    // In lex order the leading monomial carries the greatest variable.
    return terms_.empty() ? -1 : terms_.front().mono.leading_variable();
}

unsigned Polynomial::degree(std::size_t var) const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono[var]);
    return d;
}

unsigned Polynomial::total_degree() const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

bool Polynomial::involves(std::size_t var) const noexcept {
    return std::any_of(terms_.begin(), terms_.end(),
                       [var](const Term& t) { return t.mono[var] != 0; });
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
    if (terms_.empty()) return {};
    std::vector<std::vector<Term>> buckets(degree(var) + 1);
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        unsigned k = m[var];
        m.set(var, 0);
        buckets[k].push_back({t.coeff, m});
    }
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(Polynomial(ordering_, std::move(b)));
    return out;
}

Polynomial Polynomial::coefficient(std::size_t var, unsigned k) const {
    std::vector<Term> b;
    for (const auto& t : terms_) {
        if (t.mono[var] != k) continue;
        Monomial m = t.mono;
        m.set(var, 0);
        b.push_back({t.coeff, m});
    }
    // Dividing by var^k preserves the term order.
    return Polynomial(ordering_, std::move(b));
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(1 / leading_coeff());
}

Polynomial Polynomial::primitive() const {
    if (terms_.empty()) return *this;
    Integer den = 1, num = 0;
    for (const auto& t : terms_) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    for (const auto& t : terms_) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
    }
    Rational f(den, num);
    f.canonicalize();
    if (sgn(leading_coeff()) < 0) f = -f;
    return scaled(f);
}

Polynomial Polynomial::derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        unsigned e = t.mono[var];
        if (e == 0) continue;
        Monomial m = t.mono;
        m.set(var, e - 1);
        out.push_back({t.coeff * e, m});
    }
    // Lowering one exponent by one keeps lex order among terms with e > 0.
    return Polynomial(ordering_, std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(ordering_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (sgn(c) == 0) return Polynomial(ordering_);
    Rational k = c;
    k.canonicalize();
    std::vector<Term> out(terms_);
    for (auto& t : out) t.coeff *= k;
    return Polynomial(ordering_, std::move(out));
}

Polynomial Polynomial::mul_monomial(const Monomial& m) const {
    std::vector<Term> out(terms_);
    for (auto& t : out) t.mono = t.mono * m;
    return Polynomial(ordering_, std::move(out));
}

Polynomial Polynomial::embed(const OrderingPtr& wider) const {
    const std::size_t n = arity();
    if (wider->size() < n ||
        !std::equal(ordering_->names().begin(), ordering_->names().end(), wider->names().begin()))
        throw StructuralError("embedding requires a prefix ordering");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.coeff, t.mono.resized(wider->size())});
    return Polynomial(wider, std::move(out));
}

Polynomial Polynomial::restrict_to(const OrderingPtr& narrower) const {
    const std::size_t k = narrower->size();
    if (k > arity() ||
        !std::equal(narrower->names().begin(), narrower->names().end(), ordering_->names().begin()))
        throw StructuralError("restriction requires a prefix ordering");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (t.mono.leading_variable() >= static_cast<int>(k))
            throw DomainError("polynomial involves an eliminated variable");
        out.push_back({t.coeff, t.mono.resized(k)});
    }
    return Polynomial(narrower, std::move(out));
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_ordering(ordering_, other.ordering_);
    terms_ = combine(terms_, 1, other.terms_, 1);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_same_ordering(ordering_, other.ordering_);
    terms_ = combine(terms_, 1, other.terms_, -1);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ordering(a.ordering_, b.ordering_);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ordering_);
    const Polynomial& small = a.size() <= b.size() ? a : b;
    const Polynomial& large = a.size() <= b.size() ? b : a;
    std::vector<Term> acc;
    for (const auto& t : small.terms_) {
        acc = combine(acc, 1, large.terms_, t.coeff, &t.mono);
    }
    return Polynomial(a.ordering_, std::move(acc));
}

bool Polynomial::operator==(const Polynomial& other) const {
    return same_ordering(ordering_, other.ordering_) && terms_ == other.terms_;
}

bool Polynomial::lex_less(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = a.terms_[i].mono <=> b.terms_[i].mono;
        if (c != 0) return c < 0;
        if (a.terms_[i].coeff != b.terms_[i].coeff) return a.terms_[i].coeff < b.terms_[i].coeff;
    }
    return a.size() < b.size();
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

std::size_t lv(const Polynomial& p) {
    require_nonconstant(p, "leading variable");
    return static_cast<std::size_t>(p.leading_variable());
}

Polynomial ini(const Polynomial& p) {
    const std::size_t x = lv(p);
    return p.coefficient(x, p.degree(x));
}

Monomial lt(const Polynomial& p) { return p.leading_monomial(); }

PremResult pseudo_divide(const Polynomial& p, const Polynomial& q, std::size_t var) {
    require_same_ordering(p.ordering(), q.ordering());
    const unsigned dq = q.degree(var);
    if (dq == 0) throw DomainError("pseudo-division by a polynomial free of the variable");
    const Polynomial init = q.coefficient(var, dq);
    PremResult res{p, Polynomial(p.ordering()), 0};
    while (!res.remainder.is_zero()) {
        const unsigned k = res.remainder.degree(var);
        if (k < dq) break;
        Polynomial lc = res.remainder.coefficient(var, k);
        Polynomial shift = Polynomial::variable(p.ordering(), var, k - dq);
        if (auto c = divide_exact(lc, init)) {
            Polynomial step = *c * shift;
            res.remainder -= step * q;
            res.quotient += step;
        } else {
            Polynomial step = lc * shift;
            res.remainder = init * res.remainder - step * q;
            res.quotient = init * res.quotient + step;
            ++res.exponent;
        }
    }
    return res;
}

PremResult pseudo_divide(const Polynomial& p, const Polynomial& q) {
    return pseudo_divide(p, q, lv(q));
}

Polynomial prem(const Polynomial& p, const Polynomial& q) { return pseudo_divide(p, q).remainder; }

Polynomial prem_chain(const Polynomial& p, std::span<const Polynomial> chain) {
    if (chain.empty()) throw DomainError("pseudo-remainder by an empty triangular set");
    Polynomial r = p;
    for (std::size_t i = chain.size(); i-- > 0 && !r.is_zero();) r = prem(r, chain[i]);
    return r;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
    require_same_ordering(a.ordering(), b.ordering());
    if (b.is_zero()) throw DomainError("division by zero");
    if (b.is_constant()) return a.scaled(1 / b.leading_coeff());
    Polynomial r = a;
    std::vector<Term> q;
    const Monomial& lb = b.leading_monomial();
    const Rational& cb = b.leading_coeff();
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_monomial();
        if (!lb.divides(lr)) return std::nullopt;
        Monomial m = lr.quotient(lb);
        Rational c = r.leading_coeff() / cb;
        q.push_back({c, m});
        r -= Polynomial::monomial(a.ordering(), c, m) * b;
    }
    // Quotient terms are produced in strictly decreasing order.
    return Polynomial::from_terms(a.ordering(), std::move(q));
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.coeff;
        if (first) {
            if (sgn(c) < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        const bool unit = t.mono.is_one();
        if (c != 1 || unit) {
            out << c.get_str();
            if (!unit) out << "*";
        }
        bool first_var = true;
        for (std::size_t v = 0; v < t.mono.arity(); ++v) {
            unsigned e = t.mono[v];
            if (e == 0) continue;
            if (!first_var) out << "*";
            first_var = false;
            out << p.ordering()->name(v);
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

}  // namespace srcdec

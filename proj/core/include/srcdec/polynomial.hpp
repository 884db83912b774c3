#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srcdec/monomial.hpp"
#include "srcdec/ordering.hpp"

namespace srcdec {

using Rational = mpq_class;
using Integer = mpz_class;

/// Multivariate polynomial over the rationals in canonical form: terms
/// strictly decreasing in lex order, no zero coefficients, every rational
/// in lowest terms. Two equal polynomials have identical representations.
class Polynomial {
public:
    struct Term {
        Rational coeff;
        Monomial mono;

        bool operator==(const Term& other) const {
            return mono == other.mono && coeff == other.coeff;
        }
    };

    Polynomial() = default;
    /// The zero polynomial over `ordering`.
    explicit Polynomial(OrderingPtr ordering);

    static Polynomial constant(OrderingPtr ordering, const Rational& value);
    static Polynomial variable(OrderingPtr ordering, std::size_t index,
                               unsigned exponent = 1);
    static Polynomial monomial(OrderingPtr ordering, const Rational& coeff,
                               const Monomial& mono);
    /// Sorts, merges duplicate monomials and drops zeros.
    static Polynomial from_terms(OrderingPtr ordering, std::vector<Term> terms);

    const OrderingPtr& ordering() const noexcept { return ordering_; }
    std::size_t arity() const noexcept { return ordering_ ? ordering_->size() : 0; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_one() const noexcept;

    /// Leading (lex-greatest) term pieces; throw DomainError on zero.
    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;

    /// Index of the greatest variable occurring, or -1 for constants.
    int leading_variable() const noexcept;
    unsigned degree(std::size_t var) const noexcept;
    unsigned total_degree() const noexcept;
    bool involves(std::size_t var) const noexcept;

    /// Coefficients as a univariate polynomial in `var`: entry k multiplies
    /// var^k. Empty for the zero polynomial.
    std::vector<Polynomial> coefficients_in(std::size_t var) const;
    /// The coefficient of var^k.
    Polynomial coefficient(std::size_t var, unsigned k) const;

    Polynomial monic() const;
    /// Integer coefficients with gcd 1 and positive leading coefficient.
    Polynomial primitive() const;

    Polynomial derivative(std::size_t var) const;
    Polynomial pow(unsigned e) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial mul_monomial(const Monomial& m) const;

    /// Reinterprets over `wider`, whose first arity() variables must agree.
    Polynomial embed(const OrderingPtr& wider) const;
    /// Reinterprets over a prefix ordering; throws DomainError if a dropped
    /// variable occurs.
    Polynomial restrict_to(const OrderingPtr& narrower) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    /// Same ordering and identical terms.
    bool operator==(const Polynomial& other) const;

    /// Lex comparison on term sequences (leading terms first, then
    /// coefficients). Used for deterministic sorting.
    static bool lex_less(const Polynomial& a, const Polynomial& b);

private:
    Polynomial(OrderingPtr ordering, std::vector<Term> sorted_terms);

    OrderingPtr ordering_;
    std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);

/// Leading variable index. DomainError on constants.
std::size_t lv(const Polynomial& p);
/// Leading coefficient in lv(p). DomainError on constants.
Polynomial ini(const Polynomial& p);
/// Lex-greatest monomial. DomainError on zero.
Monomial lt(const Polynomial& p);

/// Pseudo-division trace: ini(q)^exponent * p = quotient * q + remainder,
/// with deg(remainder, var) < deg(q, var).
struct PremResult {
    Polynomial remainder;
    Polynomial quotient;
    unsigned exponent = 0;
};

/// Pseudo-remainder of p by q in lv(q). The initial is applied only when a
/// reduction step needs it (exact division by ini(q) is tried first).
PremResult pseudo_divide(const Polynomial& p, const Polynomial& q);
/// Pseudo-division in an explicit variable `var` with deg(q, var) > 0.
PremResult pseudo_divide(const Polynomial& p, const Polynomial& q, std::size_t var);
Polynomial prem(const Polynomial& p, const Polynomial& q);

/// prem(...prem(prem(p, chain[r-1]), chain[r-2])..., chain[0]). The chain
/// must be nonempty with nonconstant elements.
Polynomial prem_chain(const Polynomial& p, std::span<const Polynomial> chain);

/// Exact multivariate division; nullopt if b does not divide a.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Greatest common divisor, made monic; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Content of p viewed as univariate in `var` (monic gcd of coefficients).
Polynomial content_in(const Polynomial& p, std::size_t var);

/// Product of the distinct irreducible factors of p, made monic.
/// DomainError on constants.
Polynomial squarefree_part(const Polynomial& p);

enum class SplitStrategy { Squarefree, Coarse };

/// Nonconstant polynomials whose product vanishes exactly where p does.
/// Squarefree: pairwise coprime squarefree factors found by recursive content
/// and gcd splitting, sorted ascending by leading term. Coarse: the single
/// squarefree part. DomainError on constants.
std::vector<Polynomial> factor_split(const Polynomial& p,
                                     SplitStrategy strategy = SplitStrategy::Squarefree);

/// Rendering in decreasing lex order, e.g. "2/3*x^2 - y + 1".
std::string to_string(const Polynomial& p);

}  // namespace srcdec

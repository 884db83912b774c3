#include "srcdec/monomial.hpp"

#include <algorithm>
#include <limits>

#include "srcdec/errors.hpp"

namespace srcdec {

Monomial::Monomial(std::size_t arity) : arity_(static_cast<std::uint8_t>(arity)) {
    if (arity > kMaxVariables) throw DomainError("monomial arity too large");
}

Monomial::Monomial(std::initializer_list<unsigned> exponents) : Monomial(exponents.size()) {
    std::size_t i = 0;
    for (unsigned e : exponents) set(i++, e);
}

void Monomial::set(std::size_t i, unsigned e) {
    if (e > std::numeric_limits<Exponent>::max()) throw DomainError("exponent overflow");
    exps_[i] = static_cast<Exponent>(e);
}

unsigned Monomial::total_degree() const noexcept {
    unsigned d = 0;
    for (std::size_t i = 0; i < arity_; ++i) d += exps_[i];
    return d;
}

bool Monomial::is_one() const noexcept {
    for (std::size_t i = 0; i < arity_; ++i)
        if (exps_[i] != 0) return false;
    return true;
}

int Monomial::leading_variable() const noexcept {
    for (std::size_t i = arity_; i-- > 0;)
        if (exps_[i] != 0) return static_cast<int>(i);
    return -1;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < arity_; ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < arity_; ++i)
        if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& other) const noexcept {
    Monomial r = *this;
    for (std::size_t i = 0; i < arity_; ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    return r;
}

Monomial Monomial::quotient(const Monomial& other) const noexcept {
    Monomial r = *this;
    for (std::size_t i = 0; i < arity_; ++i)
        r.exps_[i] = static_cast<Exponent>(exps_[i] - other.exps_[i]);
    return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < arity_; ++i) {
        unsigned e = unsigned(exps_[i]) + other.exps_[i];
        if (e > std::numeric_limits<Exponent>::max()) throw DomainError("exponent overflow");
        r.exps_[i] = static_cast<Exponent>(e);
    }
    return r;
}

Monomial Monomial::resized(std::size_t arity) const {
    Monomial r(arity);
    for (std::size_t i = 0; i < std::min<std::size_t>(arity, arity_); ++i) r.exps_[i] = exps_[i];
    return r;
}

bool Monomial::operator==(const Monomial& other) const noexcept {
    return arity_ == other.arity_ &&
           std::equal(exps_.begin(), exps_.begin() + arity_, other.exps_.begin());
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const noexcept {
    for (std::size_t i = arity_; i-- > 0;) {
        if (exps_[i] != other.exps_[i]) return exps_[i] <=> other.exps_[i];
    }
    return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < arity_; ++i) h = (h ^ exps_[i]) * 1099511628211ull;
    return h;
}

}  // namespace srcdec

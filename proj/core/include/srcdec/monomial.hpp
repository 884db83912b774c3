#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>

namespace srcdec {

/// Dense exponent vector. Entry i is the exponent of the i-th smallest
/// variable. Comparison is pure lex with the greatest variable first.
class Monomial {
public:
    using Exponent = std::uint16_t;
    static constexpr std::size_t kMaxVariables = 32;

    Monomial() = default;
    explicit Monomial(std::size_t arity);
    Monomial(std::initializer_list<unsigned> exponents);

    std::size_t arity() const noexcept { return arity_; }
    Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
    void set(std::size_t i, unsigned e);

    unsigned total_degree() const noexcept;
    bool is_one() const noexcept;
    /// Index of the greatest variable with positive exponent, or -1.
    int leading_variable() const noexcept;

    bool divides(const Monomial& other) const noexcept;
    bool coprime(const Monomial& other) const noexcept;
    Monomial lcm(const Monomial& other) const noexcept;
    /// this / other; requires other.divides(*this).
    Monomial quotient(const Monomial& other) const noexcept;
    Monomial operator*(const Monomial& other) const;

    /// Same exponents padded with zeros (or truncated) to `arity`.
    Monomial resized(std::size_t arity) const;

    bool operator==(const Monomial& other) const noexcept;
    std::strong_ordering operator<=>(const Monomial& other) const noexcept;

    std::size_t hash() const noexcept;

private:
    std::array<Exponent, kMaxVariables> exps_{};
    std::uint8_t arity_ = 0;
};

}  // namespace srcdec

template <>
struct std::hash<srcdec::Monomial> {
    std::size_t operator()(const srcdec::Monomial& m) const noexcept { return m.hash(); }
};

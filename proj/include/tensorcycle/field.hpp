#pragma once

// Exact scalars over Q (GMP rationals) and prime fields F_p, 2 <= p < 2^31.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "tensorcycle/error.hpp"

namespace tcyc {

class FieldSpec {
public:
    static constexpr FieldSpec rationals() noexcept { return FieldSpec{0}; }
    /// Throws InvalidField unless p is a prime in [2, 2^31).
    static FieldSpec prime(std::uint64_t p);
    /// Accepts "Q", "F<p>" and "Fp:<p>".
    static FieldSpec parse(std::string_view text);

    /// 0 for Q, p for F_p.
    constexpr std::uint32_t characteristic() const noexcept { return p_; }
    constexpr bool is_rationals() const noexcept { return p_ == 0; }

    /// "Q", "F2", "F3", otherwise "Fp:<p>".
    std::string to_string() const;

    friend constexpr bool operator==(FieldSpec, FieldSpec) = default;

private:
    explicit constexpr FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Immutable field element. Canonical form: reduced fraction with positive
/// denominator over Q, residue in [0, p) over F_p.
class Scalar {
public:
    explicit Scalar(FieldSpec field = FieldSpec::rationals()) : field_(field) {}

    static Scalar zero(FieldSpec field) { return Scalar(field); }
    static Scalar one(FieldSpec field) { return from_int(field, 1); }
    static Scalar from_int(FieldSpec field, long value);
    static Scalar from_mpz(FieldSpec field, const mpz_class& value);
    /// Over F_p the denominator must be invertible.
    static Scalar from_rational(FieldSpec field, const mpq_class& value);
    static Scalar parse(FieldSpec field, std::string_view text);

    FieldSpec field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Q only.
    const mpq_class& rational() const;
    /// F_p only.
    std::uint32_t residue() const;
    /// Q only: -1, 0 or +1.
    int sign() const;

    std::string to_string() const;

    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    /// Total order used for canonical sorting: numeric over Q, by residue over F_p.
    friend std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b);

private:
    FieldSpec field_;
    std::uint32_t residue_ = 0;
    mpq_class q_;
};

/// Throws FieldMismatch unless a and b share a field.
void require_same_field(FieldSpec a, FieldSpec b);

}  // namespace tcyc

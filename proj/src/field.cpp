#include "tensorcycle/field.hpp"

#include <charconv>

namespace tcyc {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

std::uint32_t reduce(const mpz_class& value, std::uint32_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
    return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p) {
    std::uint32_t result = 1 % p;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
        fail(ErrorKind::InvalidField, "modulus " + std::to_string(p) + " is not a prime below 2^31");
    return FieldSpec{static_cast<std::uint32_t>(p)};
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "Q") return rationals();
    std::string_view digits;
    if (text.starts_with("Fp:"))
        digits = text.substr(3);
    else if (text.starts_with("F"))
        digits = text.substr(1);
    if (!all_digits(digits) || digits.size() > 12)
        fail(ErrorKind::ParseError, "bad field spec '" + std::string(text) + "'");
    std::uint64_t p = 0;
    std::from_chars(digits.data(), digits.data() + digits.size(), p);
    return prime(p);
}

std::string FieldSpec::to_string() const {
    if (p_ == 0) return "Q";
    if (p_ == 2 || p_ == 3) return "F" + std::to_string(p_);
    return "Fp:" + std::to_string(p_);
}

void require_same_field(FieldSpec a, FieldSpec b) {
    if (a != b) fail(ErrorKind::FieldMismatch, a.to_string() + " vs " + b.to_string());
}

Scalar Scalar::from_int(FieldSpec field, long value) { return from_mpz(field, mpz_class(value)); }

Scalar Scalar::from_mpz(FieldSpec field, const mpz_class& value) {
    Scalar s(field);
    if (field.is_rationals())
        s.q_ = value;
    else
        s.residue_ = reduce(value, field.characteristic());
    return s;
}

Scalar Scalar::from_rational(FieldSpec field, const mpq_class& value) {
    if (field.is_rationals()) {
        Scalar s(field);
        s.q_ = value;
        s.q_.canonicalize();
        return s;
    }
    Scalar num = from_mpz(field, value.get_num());
    Scalar den = from_mpz(field, value.get_den());
    return num / den;
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (body.starts_with("-")) {
        negative = true;
        body.remove_prefix(1);
    }
    std::string_view num = body, den;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
        if (!all_digits(den)) fail(ErrorKind::ParseError, "bad scalar '" + std::string(text) + "'");
    }
    if (!all_digits(num)) fail(ErrorKind::ParseError, "bad scalar '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (d == 0) fail(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    if (!field.is_rationals() && d % field.characteristic() == 0)
        fail(ErrorKind::DivisionByZero, "denominator vanishes in " + field.to_string());
    return from_rational(field, mpq_class(n, d));
}

bool Scalar::is_zero() const noexcept {
    return field_.is_rationals() ? sgn(q_) == 0 : residue_ == 0;
}

bool Scalar::is_one() const noexcept {
    return field_.is_rationals() ? q_ == 1 : residue_ == 1;
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rationals()) fail(ErrorKind::FieldMismatch, "rational() on " + field_.to_string());
    return q_;
}

std::uint32_t Scalar::residue() const {
    if (field_.is_rationals()) fail(ErrorKind::FieldMismatch, "residue() on Q");
    return residue_;
}

int Scalar::sign() const {
    if (!field_.is_rationals()) fail(ErrorKind::FieldMismatch, "no order on " + field_.to_string());
    return sgn(q_);
}

std::string Scalar::to_string() const {
    if (field_.is_rationals()) return q_.get_str();
    return std::to_string(residue_);
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_rationals())
        s.q_ = -q_;
    else
        s.residue_ = residue_ == 0 ? 0 : field_.characteristic() - residue_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
    Scalar s(field_);
    if (field_.is_rationals()) {
        s.q_ = 1 / q_;
    } else {
        const std::uint32_t p = field_.characteristic();
        s.residue_ = pow_mod(residue_, p - 2, p);
    }
    return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_);
    Scalar s(a.field_);
    if (a.field_.is_rationals()) {
        s.q_ = a.q_ + b.q_;
    } else {
        const std::uint64_t sum = std::uint64_t{a.residue_} + b.residue_;
        const std::uint32_t p = a.field_.characteristic();
        s.residue_ = static_cast<std::uint32_t>(sum >= p ? sum - p : sum);
    }
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_);
    Scalar s(a.field_);
    if (a.field_.is_rationals())
        s.q_ = a.q_ * b.q_;
    else
        s.residue_ = mul_mod(a.residue_, b.residue_, a.field_.characteristic());
    return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_);
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, a.to_string() + " / 0");
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    return a.field_.is_rationals() ? a.q_ == b.q_ : a.residue_ == b.residue_;
}

std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_);
    if (a.field_.is_rationals()) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    return a.residue_ <=> b.residue_;
}

}  // namespace tcyc

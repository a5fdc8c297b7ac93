#pragma once

// Scalar kinds the determinant code is generic over.
//
// Every kind is an immutable value type exposing ring operations, a zero test,
// exact division, magnitude comparison and a canonical text form. Integer and
// Rational are arbitrary precision (backed by GMP); Float is an IEEE double
// whose zero test is exact, so tolerances live in callers, never here.

#include <gmpxx.h>

#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

namespace detcond {

enum class ScalarKind { rational, integer, floating };

std::string_view to_string(ScalarKind kind);

/// Accepts "rational", "integer" or "float".
ScalarKind parse_scalar_kind(std::string_view name);

class Integer {
public:
    static constexpr ScalarKind kind = ScalarKind::integer;

    Integer() = default;
    Integer(long v) : value_(v) {}
    explicit Integer(mpz_class v) : value_(std::move(v)) {}

    static Integer zero() { return Integer(0); }
    static Integer one() { return Integer(1); }

    /// Decimal integer text with optional sign. Fractions and decimals are
    /// rejected rather than truncated.
    static Integer parse(std::string_view text);

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    const mpz_class& value() const { return value_; }

    friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.value_ + b.value_)); }
    friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.value_ - b.value_)); }
    friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.value_ * b.value_)); }
    friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.value_)); }
    friend bool operator==(const Integer& a, const Integer& b) { return a.value_ == b.value_; }

private:
    mpz_class value_;
};

/// Throws InexactDivision when b does not divide a, std::domain_error when b is zero.
Integer exact_div(const Integer& a, const Integer& b);
int compare_magnitude(const Integer& a, const Integer& b);
std::string to_text(const Integer& x);

/// Number of bits in |x|; zero has bit length 0.
std::size_t bit_length(const Integer& x);

class Rational {
public:
    static constexpr ScalarKind kind = ScalarKind::rational;

    Rational() = default;
    Rational(long v) : value_(v) {}
    Rational(long num, long den);
    explicit Rational(const Integer& v) : value_(v.value()) {}
    explicit Rational(mpq_class v);

    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }

    /// Integer, "p/q" or decimal text (with optional exponent), converted exactly.
    static Rational parse(std::string_view text);

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    const mpq_class& value() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }

private:
    mpq_class value_;
};

/// Field division; std::domain_error on a zero divisor.
Rational exact_div(const Rational& a, const Rational& b);
int compare_magnitude(const Rational& a, const Rational& b);
/// Canonical "p/q", or bare "p" when q = 1.
std::string to_text(const Rational& x);

class Float {
public:
    static constexpr ScalarKind kind = ScalarKind::floating;

    Float() = default;
    Float(double v) : value_(v) {}

    static Float zero() { return Float(0.0); }
    static Float one() { return Float(1.0); }

    /// Decimal float, integer, "p/q", or the token "sqrt(x)" which expands to
    /// the square root of the decimal x.
    static Float parse(std::string_view text);

    bool is_zero() const { return value_ == 0.0; }
    double value() const { return value_; }

    friend Float operator+(Float a, Float b) { return Float(a.value_ + b.value_); }
    friend Float operator-(Float a, Float b) { return Float(a.value_ - b.value_); }
    friend Float operator*(Float a, Float b) { return Float(a.value_ * b.value_); }
    friend Float operator-(Float a) { return Float(-a.value_); }
    friend bool operator==(Float a, Float b) { return a.value_ == b.value_; }

private:
    double value_ = 0.0;
};

/// Plain IEEE division.
Float exact_div(Float a, Float b);
int compare_magnitude(Float a, Float b);
/// Shortest decimal text that parses back to the same double.
std::string to_text(Float x);

std::ostream& operator<<(std::ostream& os, const Integer& x);
std::ostream& operator<<(std::ostream& os, const Rational& x);
std::ostream& operator<<(std::ostream& os, Float x);

template <class S>
concept Scalar = std::regular<S> && requires(const S a, const S b, std::string_view text) {
    { S::kind } -> std::convertible_to<ScalarKind>;
    { S::zero() } -> std::same_as<S>;
    { S::one() } -> std::same_as<S>;
    { S::parse(text) } -> std::same_as<S>;
    { a.is_zero() } -> std::same_as<bool>;
    { a + b } -> std::same_as<S>;
    { a - b } -> std::same_as<S>;
    { a * b } -> std::same_as<S>;
    { -a } -> std::same_as<S>;
    { exact_div(a, b) } -> std::same_as<S>;
    { compare_magnitude(a, b) } -> std::same_as<int>;
    { to_text(a) } -> std::same_as<std::string>;
};

template <Scalar S>
inline constexpr bool is_exact_v = S::kind != ScalarKind::floating;

/// Parses text into the scalar kind S (see each kind's parse()).
template <Scalar S>
S parse_scalar(std::string_view text) {
    return S::parse(text);
}

}  // namespace detcond

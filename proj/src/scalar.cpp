#include "detcond/scalar.hpp"

#include "detcond/error.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace detcond {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool is_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// [+-]?digits
bool is_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    return is_digits(s);
}

mpz_class integer_from_text(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

struct Decimal {
    bool negative = false;
    std::string digits;   // integer and fraction digits concatenated
    long exponent10 = 0;  // value = digits * 10^exponent10
};

// [+-]? (digits [. digits?] | . digits) ([eE] [+-]? digits)?
bool parse_decimal(std::string_view s, Decimal& out) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        out.negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view mantissa = s;
    std::string_view exponent;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = s.substr(0, e);
        exponent = s.substr(e + 1);
        if (!is_integer_text(exponent)) return false;
    }
    std::string_view int_part = mantissa;
    std::string_view frac_part;
    if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        int_part = mantissa.substr(0, dot);
        frac_part = mantissa.substr(dot + 1);
        if (!frac_part.empty() && !is_digits(frac_part)) return false;
    }
    if (!int_part.empty() && !is_digits(int_part)) return false;
    if (int_part.empty() && frac_part.empty()) return false;

    out.digits = std::string(int_part) + std::string(frac_part);
    out.exponent10 = -static_cast<long>(frac_part.size());
    if (!exponent.empty()) {
        long e = 0;
        if (exponent.front() == '+') exponent.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(exponent.data(), exponent.data() + exponent.size(), e);
        if (ec != std::errc{} || ptr != exponent.data() + exponent.size()) return false;
        out.exponent10 += e;
    }
    return true;
}

double parse_double(std::string_view s, std::string_view original) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec == std::errc::invalid_argument || ptr != s.data() + s.size()) {
        throw ParseError("malformed float " + quoted(original));
    }
    if (ec == std::errc::result_out_of_range) {
        throw ParseError("float out of range " + quoted(original));
    }
    return v;
}

}  // namespace

std::string_view to_string(ScalarKind kind) {
    switch (kind) {
        case ScalarKind::rational: return "rational";
        case ScalarKind::integer: return "integer";
        case ScalarKind::floating: return "float";
    }
    return "unknown";
}

ScalarKind parse_scalar_kind(std::string_view name) {
    if (name == "rational") return ScalarKind::rational;
    if (name == "integer") return ScalarKind::integer;
    if (name == "float") return ScalarKind::floating;
    throw std::invalid_argument("unknown scalar kind " + quoted(name));
}

// ---- Integer ---------------------------------------------------------------

Integer Integer::parse(std::string_view text) {
    const auto s = trim(text);
    if (s.find('/') != std::string_view::npos) {
        throw ParseError("fraction " + quoted(s) + " is not valid for integer scalars");
    }
    if (!is_integer_text(s)) throw ParseError("malformed integer " + quoted(s));
    return Integer(integer_from_text(s));
}

Integer exact_div(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (mpz_divisible_p(a.value().get_mpz_t(), b.value().get_mpz_t()) == 0) {
        throw InexactDivision("inexact integer division: " + to_text(a) + " / " + to_text(b));
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.value().get_mpz_t(), b.value().get_mpz_t());
    return Integer(std::move(q));
}

int compare_magnitude(const Integer& a, const Integer& b) {
    const int c = mpz_cmpabs(a.value().get_mpz_t(), b.value().get_mpz_t());
    return (c > 0) - (c < 0);
}

std::string to_text(const Integer& x) { return x.value().get_str(10); }

std::size_t bit_length(const Integer& x) {
    if (x.is_zero()) return 0;
    return mpz_sizeinbase(x.value().get_mpz_t(), 2);
}

// ---- Rational --------------------------------------------------------------

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const auto s = trim(text);
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const auto p = trim(s.substr(0, slash));
        const auto q = trim(s.substr(slash + 1));
        if (!is_integer_text(p) || !is_integer_text(q)) throw ParseError("malformed fraction " + quoted(s));
        mpz_class den = integer_from_text(q);
        if (den == 0) throw ParseError("zero denominator in " + quoted(s));
        return Rational(mpq_class(integer_from_text(p), den));
    }
    if (is_integer_text(s)) return Rational(mpq_class(integer_from_text(s)));

    Decimal d;
    if (!parse_decimal(s, d)) throw ParseError("malformed rational " + quoted(s));
    mpz_class digits(d.digits, 10);
    if (d.negative) digits = -digits;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(d.exponent10)));
    if (d.exponent10 >= 0) return Rational(mpq_class(digits * scale));
    return Rational(mpq_class(digits, scale));
}

Rational exact_div(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return Rational(mpq_class(a.value() / b.value()));
}

int compare_magnitude(const Rational& a, const Rational& b) {
    const int c = cmp(abs(a.value()), abs(b.value()));
    return (c > 0) - (c < 0);
}

std::string to_text(const Rational& x) {
    if (x.value().get_den() == 1) return x.value().get_num().get_str(10);
    return x.value().get_num().get_str(10) + "/" + x.value().get_den().get_str(10);
}

// ---- Float -----------------------------------------------------------------

Float Float::parse(std::string_view text) {
    const auto s = trim(text);
    constexpr std::string_view sqrt_open = "sqrt(";
    if (s.starts_with(sqrt_open) && s.ends_with(")")) {
        const auto inner = trim(s.substr(sqrt_open.size(), s.size() - sqrt_open.size() - 1));
        const double radicand = parse_double(inner, s);
        if (radicand < 0.0) throw ParseError("negative radicand in " + quoted(s));
        return Float(std::sqrt(radicand));
    }
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const auto p = trim(s.substr(0, slash));
        const auto q = trim(s.substr(slash + 1));
        const double den = parse_double(q, s);
        if (den == 0.0) throw ParseError("zero denominator in " + quoted(s));
        return Float(parse_double(p, s) / den);
    }
    return Float(parse_double(s, s));
}

Float exact_div(Float a, Float b) { return Float(a.value() / b.value()); }

int compare_magnitude(Float a, Float b) {
    const double x = std::fabs(a.value());
    const double y = std::fabs(b.value());
    return (x > y) - (x < y);
}

std::string to_text(Float x) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x.value());
    return std::string(buf.data(), ptr);
}

std::ostream& operator<<(std::ostream& os, const Integer& x) { return os << to_text(x); }
std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << to_text(x); }
std::ostream& operator<<(std::ostream& os, Float x) { return os << to_text(x); }

}  // namespace detcond

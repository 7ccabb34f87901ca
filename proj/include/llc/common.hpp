#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace llc {

/// Raised by every library operation whose precondition or data check fails.
/// `kind` is a short machine-readable tag that the CLI echoes as `error`.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(detail), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Malformed input documents. The CLI maps this to exit status 2.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& detail) : Error("parse_error", detail) {}
};

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw Error("division_by_zero", "rational with zero denominator");
    Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) {
    return r.get_str();
}

/// Exponent of the prime p in a nonzero integer.
inline long long valuation(Integer n, long long p) {
    if (n == 0) throw Error("domain", "valuation of zero");
    long long v = 0;
    const Integer pp(static_cast<long>(p));
    while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t()) != 0) {
        n /= pp;
        ++v;
    }
    return v;
}

inline long long valuation(const Rational& r, long long p) {
    return valuation(r.get_num(), p) - valuation(r.get_den(), p);
}

inline Rational rational_pow(const Rational& base, long long e) {
    if (e < 0) {
        if (base == 0) throw Error("division_by_zero", "negative power of zero");
        return rational_pow(Rational(1) / base, -e);
    }
    Rational out(1);
    Rational b = base;
    while (e > 0) {
        if ((e & 1) != 0) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

inline Rational ipow_rational(long long base, long long e) {
    return rational_pow(Rational(static_cast<long>(base)), e);
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Half-integer stored as twice its value, so twists like (1-n)/2 stay exact.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(long long integer) : twice_(2 * integer) {}  // NOLINT(google-explicit-constructor)

    static constexpr HalfInt from_halves(long long halves) {
        HalfInt h;
        h.twice_ = halves;
        return h;
    }

    static HalfInt from_fraction(long long num, long long den) {
        if (den == 1) return HalfInt(num);
        if (den == 2) return from_halves(num);
        if (den == -1) return HalfInt(-num);
        if (den == -2) return from_halves(-num);
        if (den != 0 && num % den == 0) return HalfInt(num / den);
        if (den != 0 && (2 * num) % den == 0) return from_halves(2 * num / den);
        throw ParseError("value " + std::to_string(num) + "/" + std::to_string(den) +
                         " is not a half-integer");
    }

    constexpr long long halves() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    long long as_integer() const {
        if (!is_integer()) throw Error("domain", "half-integer " + str() + " is not integral");
        return twice_ / 2;
    }

    constexpr HalfInt operator-() const { return from_halves(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return from_halves(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_halves(twice_ - o.twice_); }
    constexpr HalfInt operator*(long long k) const { return from_halves(twice_ * k); }
    HalfInt& operator+=(HalfInt o) {
        twice_ += o.twice_;
        return *this;
    }

    constexpr auto operator<=>(const HalfInt&) const = default;

    Rational to_rational() const { return make_rational(twice_, 2); }

    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

private:
    long long twice_ = 0;
};

}  // namespace llc

template <>
struct std::hash<llc::HalfInt> {
    std::size_t operator()(const llc::HalfInt& h) const noexcept {
        return std::hash<long long>{}(h.halves());
    }
};

#pragma once

// Exact commutative coefficient rings for Witt vectors: Q, Z, Z/m and F_{p^r}.
// Each ring is a small value object whose member functions do the arithmetic,
// so contexts (modulus, defining polynomial) travel with the ring.

#include <concepts>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "llc/common.hpp"

namespace llc {

template <class R>
concept CoeffRing = requires(const R& r, const typename R::value_type& a, const Integer& n) {
    { r.zero() } -> std::convertible_to<typename R::value_type>;
    { r.one() } -> std::convertible_to<typename R::value_type>;
    { r.from_integer(n) } -> std::convertible_to<typename R::value_type>;
    { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
    { r.sub(a, a) } -> std::convertible_to<typename R::value_type>;
    { r.neg(a) } -> std::convertible_to<typename R::value_type>;
    { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
    { r.equal(a, a) } -> std::convertible_to<bool>;
    { r.is_unit(a) } -> std::convertible_to<bool>;
    { r.inverse(a) } -> std::convertible_to<typename R::value_type>;
    { r.characteristic() } -> std::convertible_to<long long>;
    { r.str(a) } -> std::convertible_to<std::string>;
};

template <CoeffRing R>
typename R::value_type ring_pow(const R& r, typename R::value_type base, unsigned long long e) {
    auto out = r.one();
    while (e > 0) {
        if ((e & 1ULL) != 0) out = r.mul(out, base);
        e >>= 1;
        if (e > 0) base = r.mul(base, base);
    }
    return out;
}

struct RationalField {
    using value_type = Rational;
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_integer(const Integer& n) const { return Rational(n); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }
    bool is_unit(const value_type& a) const { return a != 0; }
    value_type inverse(const value_type& a) const {
        if (a == 0) throw Error("division_by_zero", "inverse of zero in Q");
        return Rational(1) / a;
    }
    long long characteristic() const { return 0; }
    std::string str(const value_type& a) const { return a.get_str(); }
    std::string name() const { return "Q"; }
};

struct IntegerRing {
    using value_type = Integer;
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_integer(const Integer& n) const { return n; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }
    bool is_unit(const value_type& a) const { return a == 1 || a == -1; }
    value_type inverse(const value_type& a) const {
        if (!is_unit(a)) throw Error("not_invertible", a.get_str() + " is not a unit in Z");
        return a;
    }
    long long characteristic() const { return 0; }
    std::string str(const value_type& a) const { return a.get_str(); }
    std::string name() const { return "Z"; }
};

/// Z/m with representatives in [0, m).
class IntegersMod {
public:
    using value_type = long long;

    explicit IntegersMod(long long m) : m_(m) {
        if (m < 2 || m > (1LL << 31)) throw Error("domain", "modulus must lie in [2, 2^31]");
    }

    long long modulus() const { return m_; }
    value_type zero() const { return 0; }
    value_type one() const { return 1 % m_; }
    value_type from_integer(const Integer& n) const {
        Integer r = n % Integer(static_cast<long>(m_));
        if (r < 0) r += static_cast<long>(m_);
        return r.get_si();
    }
    value_type add(value_type a, value_type b) const { return (a + b) % m_; }
    value_type sub(value_type a, value_type b) const { return ((a - b) % m_ + m_) % m_; }
    value_type neg(value_type a) const { return (m_ - a) % m_; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<long long>((static_cast<__int128>(a) * b) % m_);
    }
    bool equal(value_type a, value_type b) const { return a == b; }
    bool is_unit(value_type a) const { return std::gcd(a, m_) == 1; }
    value_type inverse(value_type a) const {
        long long t = 0, new_t = 1, r = m_, new_r = a;
        while (new_r != 0) {
            const long long qv = r / new_r;
            t = std::exchange(new_t, t - qv * new_t);
            r = std::exchange(new_r, r - qv * new_r);
        }
        if (r != 1) throw Error("not_invertible", std::to_string(a) + " is not a unit mod " + std::to_string(m_));
        return t < 0 ? t + m_ : t;
    }
    long long characteristic() const { return m_; }
    std::string str(value_type a) const { return std::to_string(a); }
    std::string name() const { return "Z/" + std::to_string(m_); }

private:
    long long m_;
};

namespace detail {

/// Remainder of a polynomial over F_p (coefficients low to high) by a monic one.
inline std::vector<long long> poly_mod_p(std::vector<long long> a, const std::vector<long long>& m, long long p) {
    const std::size_t dm = m.size() - 1;
    for (std::size_t i = a.size(); i-- > dm;) {
        const long long c = ((a[i] % p) + p) % p;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p) % p;
    }
    a.resize(std::min(a.size(), dm));
    for (auto& v : a) v = ((v % p) + p) % p;
    return a;
}

inline bool is_irreducible_mod_p(const std::vector<long long>& poly, long long p) {
    const int n = static_cast<int>(poly.size()) - 1;
    // trial division by every monic polynomial of degree 1..n/2
    for (int d = 1; d <= n / 2; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            std::vector<long long> div(d + 1, 0);
            long long v = idx;
            for (int i = 0; i < d; ++i) {
                div[i] = v % p;
                v /= p;
            }
            div[d] = 1;
            const auto rem = poly_mod_p(poly, div, p);
            bool zero = true;
            for (long long c : rem) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace detail

/// First monic irreducible polynomial of degree r over F_p, enumerating the
/// lower coefficients as base-p digits (constant term least significant).
inline std::vector<long long> find_irreducible(long long p, int r) {
    if (r < 1) throw Error("domain", "degree must be positive");
    if (r == 1) return {0, 1};
    long long count = 1;
    for (int i = 0; i < r; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
        std::vector<long long> poly(r + 1, 0);
        long long v = idx;
        for (int i = 0; i < r; ++i) {
            poly[i] = v % p;
            v /= p;
        }
        poly[r] = 1;
        if (poly[0] == 0) continue;
        if (detail::is_irreducible_mod_p(poly, p)) return poly;
    }
    throw Error("internal", "no irreducible polynomial found");
}

/// F_{p^r} = F_p[X]/(modulus); elements are coefficient vectors of length r.
class FiniteField {
public:
    using value_type = std::vector<long long>;

    FiniteField(long long p, int r) : FiniteField(p, find_irreducible(p, r)) {}
    FiniteField(long long p, std::vector<long long> modulus) : p_(p), modulus_(std::move(modulus)) {
        if (!is_prime(p)) throw Error("domain", "characteristic must be prime");
        if (modulus_.size() < 2 || modulus_.back() != 1) throw Error("domain", "modulus must be monic of degree >= 1");
        if (!detail::is_irreducible_mod_p(modulus_, p_)) throw Error("domain", "modulus is not irreducible");
        r_ = static_cast<int>(modulus_.size()) - 1;
    }

    long long p() const { return p_; }
    int degree() const { return r_; }
    long long order() const {
        long long n = 1;
        for (int i = 0; i < r_; ++i) n *= p_;
        return n;
    }
    const std::vector<long long>& modulus() const { return modulus_; }

    value_type zero() const { return value_type(r_, 0); }
    value_type one() const {
        auto v = zero();
        v[0] = 1;
        return v;
    }
    value_type from_integer(const Integer& n) const {
        Integer r = n % Integer(static_cast<long>(p_));
        if (r < 0) r += static_cast<long>(p_);
        auto v = zero();
        v[0] = r.get_si();
        return v;
    }
    /// Element with the given coordinates in the basis 1, X, ..., X^(r-1).
    value_type element(std::vector<long long> coords) const {
        coords.resize(r_, 0);
        for (auto& c : coords) c = ((c % p_) + p_) % p_;
        return coords;
    }
    /// The idx-th element in base-p enumeration.
    value_type enumerate(long long idx) const {
        auto v = zero();
        for (int i = 0; i < r_; ++i) {
            v[i] = idx % p_;
            idx /= p_;
        }
        return v;
    }
    value_type add(const value_type& a, const value_type& b) const {
        value_type out(r_);
        for (int i = 0; i < r_; ++i) out[i] = (a[i] + b[i]) % p_;
        return out;
    }
    value_type sub(const value_type& a, const value_type& b) const {
        value_type out(r_);
        for (int i = 0; i < r_; ++i) out[i] = ((a[i] - b[i]) % p_ + p_) % p_;
        return out;
    }
    value_type neg(const value_type& a) const { return sub(zero(), a); }
    value_type mul(const value_type& a, const value_type& b) const {
        std::vector<long long> prod(2 * r_ - 1, 0);
        for (int i = 0; i < r_; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
        }
        auto out = detail::poly_mod_p(std::move(prod), modulus_, p_);
        out.resize(r_, 0);
        return out;
    }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }
    bool is_zero(const value_type& a) const { return a == zero(); }
    bool is_unit(const value_type& a) const { return !is_zero(a); }
    value_type inverse(const value_type& a) const {
        if (is_zero(a)) throw Error("division_by_zero", "inverse of zero in F_q");
        return ring_pow(*this, a, static_cast<unsigned long long>(order() - 2));
    }
    long long characteristic() const { return p_; }
    std::string str(const value_type& a) const {
        std::string out = "[";
        for (int i = 0; i < r_; ++i) out += (i ? "," : "") + std::to_string(a[i]);
        return out + "]";
    }
    std::string name() const { return "F_" + std::to_string(order()); }

private:
    long long p_;
    int r_ = 1;
    std::vector<long long> modulus_;
};

}  // namespace llc

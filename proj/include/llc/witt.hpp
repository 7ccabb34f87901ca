#pragma once

// Truncated p-typical Witt vectors W_N(R) over an exact coefficient ring.

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "llc/coeff_ring.hpp"

namespace llc {

namespace detail {

/// Sparse multivariate polynomial with rational coefficients.
class MPoly {
public:
    using Exps = std::vector<unsigned short>;

    explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static MPoly variable(std::size_t nvars, std::size_t i) {
        MPoly out(nvars);
        Exps e(nvars, 0);
        e[i] = 1;
        out.terms_[e] = 1;
        return out;
    }
    static MPoly constant(std::size_t nvars, const Rational& c) {
        MPoly out(nvars);
        if (c != 0) out.terms_[Exps(nvars, 0)] = c;
        return out;
    }

    const std::map<Exps, Rational>& terms() const { return terms_; }
    std::size_t nvars() const { return nvars_; }

    MPoly operator+(const MPoly& o) const {
        MPoly out = *this;
        for (const auto& [e, c] : o.terms_) out.accumulate(e, c);
        return out;
    }
    MPoly operator-(const MPoly& o) const {
        MPoly out = *this;
        for (const auto& [e, c] : o.terms_) out.accumulate(e, -c);
        return out;
    }
    MPoly operator*(const MPoly& o) const {
        MPoly out(nvars_);
        Exps e(nvars_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                for (std::size_t i = 0; i < nvars_; ++i) e[i] = static_cast<unsigned short>(e1[i] + e2[i]);
                out.accumulate(e, c1 * c2);
            }
        return out;
    }
    MPoly scaled(const Rational& s) const {
        MPoly out(nvars_);
        if (s == 0) return out;
        out.terms_ = terms_;
        for (auto& [e, c] : out.terms_) c *= s;
        return out;
    }
    MPoly pow(unsigned long long n) const {
        MPoly out = constant(nvars_, 1);
        MPoly base = *this;
        while (n > 0) {
            if ((n & 1ULL) != 0) out = out * base;
            n >>= 1;
            if (n > 0) base = base * base;
        }
        return out;
    }

    bool is_integral() const {
        for (const auto& [e, c] : terms_)
            if (c.get_den() != 1) return false;
        return true;
    }

private:
    void accumulate(const Exps& e, const Rational& c) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        } else if (c == 0) {
            terms_.erase(it);
        }
    }

    std::size_t nvars_;
    std::map<Exps, Rational> terms_;
};

enum class UniversalKind { sum, product, negation, frobenius };

/// Witt polynomial w_n in the variables offset, offset+1, ..., offset+n.
inline MPoly witt_poly(std::size_t nvars, std::size_t offset, int n, long long p) {
    MPoly out(nvars);
    for (int i = 0; i <= n; ++i) {
        unsigned long long e = 1;
        for (int j = 0; j < n - i; ++j) e *= static_cast<unsigned long long>(p);
        out = out + MPoly::variable(nvars, offset + i).pow(e).scaled(ipow_rational(p, i));
    }
    return out;
}

/// Universal integral polynomials: components of X+Y, X*Y, -X (2N / N vars) or
/// the Frobenius F(X) (N vars, N-1 components). Computed over Q from the ghost
/// identities, checked integral, cached per (kind, p, N).
inline std::shared_ptr<const std::vector<MPoly>> universal_polynomials(UniversalKind kind, long long p, int n) {
    static std::mutex mutex;
    static std::map<std::tuple<int, long long, int>, std::shared_ptr<const std::vector<MPoly>>> cache;
    const auto key = std::make_tuple(static_cast<int>(kind), p, n);
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    const bool binary = kind == UniversalKind::sum || kind == UniversalKind::product;
    const std::size_t nvars = binary ? 2 * n : n;
    const int ncomp = kind == UniversalKind::frobenius ? n - 1 : n;
    std::vector<MPoly> comps;
    std::vector<MPoly> powers;  // powers[i] = comps[i]^(p^(k-i)) at step k
    for (int k = 0; k < ncomp; ++k) {
        MPoly target(nvars);
        switch (kind) {
            case UniversalKind::sum: target = witt_poly(nvars, 0, k, p) + witt_poly(nvars, n, k, p); break;
            case UniversalKind::product: target = witt_poly(nvars, 0, k, p) * witt_poly(nvars, n, k, p); break;
            case UniversalKind::negation: target = witt_poly(nvars, 0, k, p).scaled(-1); break;
            case UniversalKind::frobenius: target = witt_poly(nvars, 0, k + 1, p); break;
        }
        for (auto& pw : powers) pw = pw.pow(static_cast<unsigned long long>(p));
        for (int i = 0; i < k; ++i) target = target - powers[i].scaled(ipow_rational(p, i));
        MPoly comp = target.scaled(Rational(1) / ipow_rational(p, k));
        if (!comp.is_integral())
            throw Error("internal", "universal Witt polynomial has non-integral coefficients");
        comps.push_back(comp);
        powers.push_back(std::move(comp));
    }
    auto result = std::make_shared<const std::vector<MPoly>>(std::move(comps));
    std::lock_guard<std::mutex> lock(mutex);
    return cache.try_emplace(key, std::move(result)).first->second;
}

template <CoeffRing R>
typename R::value_type evaluate(const R& ring, const MPoly& poly, const std::vector<typename R::value_type>& values) {
    using V = typename R::value_type;
    std::vector<std::vector<V>> pw(values.size());
    auto power = [&](std::size_t var, unsigned short e) -> const V& {
        auto& table = pw[var];
        if (table.empty()) table.push_back(ring.one());
        while (table.size() <= e) table.push_back(ring.mul(table.back(), values[var]));
        return table[e];
    };
    V acc = ring.zero();
    for (const auto& [exps, coeff] : poly.terms()) {
        V term = ring.from_integer(coeff.get_num());
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] != 0) term = ring.mul(term, power(i, exps[i]));
        acc = ring.add(acc, term);
    }
    return acc;
}

}  // namespace detail

template <CoeffRing R>
using WittVector = std::vector<typename R::value_type>;

/// W_N(R) for a fixed prime p and length N. Arithmetic goes through ghost
/// components when p is invertible in R and through the universal integral
/// polynomials otherwise.
template <CoeffRing R>
class WittRing {
public:
    using value_type = typename R::value_type;
    using Vec = WittVector<R>;

    WittRing(R ring, long long p, int length) : ring_(std::move(ring)), p_(p), n_(length) {
        if (!is_prime(p)) throw Error("domain", "p must be prime");
        if (length < 1) throw Error("domain", "Witt length must be positive");
        p_invertible_ = ring_.is_unit(ring_.from_integer(Integer(static_cast<long>(p_))));
        const long long ch = ring_.characteristic();
        char_p_ = ch == p_;
    }

    const R& ring() const { return ring_; }
    long long p() const { return p_; }
    int length() const { return n_; }
    bool p_invertible() const { return p_invertible_; }
    bool characteristic_p() const { return char_p_; }

    Vec zero() const { return Vec(n_, ring_.zero()); }
    Vec one() const {
        Vec v = zero();
        v[0] = ring_.one();
        return v;
    }
    Vec make(std::vector<value_type> coords) const {
        if (static_cast<int>(coords.size()) != n_)
            throw Error("domain", "expected " + std::to_string(n_) + " Witt coordinates");
        return coords;
    }

    /// w_n(x) = x_0^(p^n) + p x_1^(p^(n-1)) + ... + p^n x_n.
    value_type witt_polynomial(int n, const Vec& x) const {
        if (n < 0 || n >= static_cast<int>(x.size())) throw Error("domain", "Witt polynomial index out of range");
        value_type acc = ring_.zero();
        for (int i = 0; i <= n; ++i) {
            const value_type coeff = ring_.from_integer(pow_p(i));
            acc = ring_.add(acc, ring_.mul(coeff, ring_pow(ring_, x[i], upow_p(n - i))));
        }
        return acc;
    }

    std::vector<value_type> ghost(const Vec& x) const {
        std::vector<value_type> g;
        for (int n = 0; n < static_cast<int>(x.size()); ++n) g.push_back(witt_polynomial(n, x));
        return g;
    }

    /// Triangular solve of the ghost map; needs p invertible.
    Vec ghost_inverse(const std::vector<value_type>& g) const {
        if (!p_invertible_) throw Error("p_not_invertible", "ghost inverse needs p invertible in " + ring_name());
        Vec x;
        for (int n = 0; n < static_cast<int>(g.size()); ++n) {
            value_type rest = g[n];
            for (int i = 0; i < n; ++i)
                rest = ring_.sub(rest, ring_.mul(ring_.from_integer(pow_p(i)), ring_pow(ring_, x[i], upow_p(n - i))));
            x.push_back(ring_.mul(rest, ring_.inverse(ring_.from_integer(pow_p(n)))));
        }
        return x;
    }

    Vec add(const Vec& x, const Vec& y) const { return binary(x, y, detail::UniversalKind::sum); }
    Vec mul(const Vec& x, const Vec& y) const { return binary(x, y, detail::UniversalKind::product); }
    Vec neg(const Vec& x) const {
        if (p_invertible_) {
            auto g = ghost(x);
            for (auto& v : g) v = ring_.neg(v);
            return ghost_inverse(g);
        }
        return apply(detail::UniversalKind::negation, x, static_cast<int>(x.size()));
    }
    Vec sub(const Vec& x, const Vec& y) const { return add(x, neg(y)); }

    /// n * 1 by double-and-add.
    Vec from_integer(long long n) const {
        const bool negative = n < 0;
        unsigned long long m = negative ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
        Vec acc = zero();
        Vec base = one();
        while (m > 0) {
            if ((m & 1ULL) != 0) acc = add(acc, base);
            m >>= 1;
            if (m > 0) base = add(base, base);
        }
        return negative ? neg(acc) : acc;
    }

    Vec scale(long long n, const Vec& x) const { return mul(truncate(from_integer(n), x.size()), x); }

    /// Frobenius. In characteristic p it is x_i -> x_i^p on all N coordinates;
    /// otherwise the top coordinate is not determined and the result has
    /// length N-1.
    Vec frobenius(const Vec& x) const {
        if (char_p_) {
            Vec out;
            for (const auto& v : x) out.push_back(ring_pow(ring_, v, static_cast<unsigned long long>(p_)));
            return out;
        }
        if (x.size() < 2) return {};
        if (p_invertible_) {
            auto g = ghost(x);
            g.erase(g.begin());
            return ghost_inverse(g);
        }
        return apply(detail::UniversalKind::frobenius, x, static_cast<int>(x.size()) - 1);
    }

    /// Verschiebung (x_0, x_1, ...) -> (0, x_0, x_1, ...), truncated to the same length.
    Vec verschiebung(const Vec& x) const {
        if (x.empty()) return x;
        Vec out;
        out.push_back(ring_.zero());
        out.insert(out.end(), x.begin(), x.end() - 1);
        return out;
    }

    bool equal(const Vec& x, const Vec& y) const {
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!ring_.equal(x[i], y[i])) return false;
        return true;
    }

    /// Image in W_len(R) (projection to the first len coordinates).
    static Vec truncate(const Vec& x, std::size_t len) {
        if (len > x.size()) throw Error("domain", "cannot extend a truncated Witt vector");
        return Vec(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(len));
    }

    std::string ring_name() const { return ring_.name(); }

private:
    Integer pow_p(int e) const {
        Integer out = 1;
        for (int i = 0; i < e; ++i) out *= static_cast<long>(p_);
        return out;
    }
    unsigned long long upow_p(int e) const {
        unsigned long long out = 1;
        for (int i = 0; i < e; ++i) out *= static_cast<unsigned long long>(p_);
        return out;
    }

    Vec binary(const Vec& x, const Vec& y, detail::UniversalKind kind) const {
        const std::size_t len = std::min(x.size(), y.size());
        const Vec a = truncate(x, len);
        const Vec b = truncate(y, len);
        if (p_invertible_) {
            auto gx = ghost(a);
            const auto gy = ghost(b);
            for (std::size_t i = 0; i < len; ++i)
                gx[i] = kind == detail::UniversalKind::sum ? ring_.add(gx[i], gy[i]) : ring_.mul(gx[i], gy[i]);
            return ghost_inverse(gx);
        }
        Vec vars = a;
        vars.insert(vars.end(), b.begin(), b.end());
        return apply(kind, vars, static_cast<int>(len));
    }

    Vec apply(detail::UniversalKind kind, const Vec& vars, int n) const {
        const int poly_len = kind == detail::UniversalKind::frobenius ? n + 1 : n;
        const auto polys = detail::universal_polynomials(kind, p_, poly_len);
        Vec out;
        for (const auto& poly : *polys) out.push_back(detail::evaluate(ring_, poly, vars));
        return out;
    }

    R ring_;
    long long p_;
    int n_;
    bool p_invertible_ = false;
    bool char_p_ = false;
};

}  // namespace llc

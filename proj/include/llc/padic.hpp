#pragma once

// Truncated unramified p-adic arithmetic. The ring of integers of the
// unramified extension of degree r of Q_p, modulo p^N, is the Galois ring
// GR(p^N, r) = (Z/p^N)[X]/(g) with g the lift of the F_p-irreducible
// polynomial used for F_{p^r}. Elements of the fraction field carry a
// valuation and a relative precision.

#include <optional>
#include <string>
#include <vector>

#include "llc/witt.hpp"

namespace llc {

class GaloisRing {
public:
    using Elem = std::vector<long long>;

    GaloisRing(long long p, int degree, int precision) : p_(p), r_(degree), n_(precision) {
        if (!is_prime(p)) throw Error("domain", "p must be prime");
        if (degree < 1) throw Error("domain", "extension degree must be positive");
        if (precision < 1) throw Error("domain", "precision must be at least 1");
        pn_ = 1;
        for (int i = 0; i < n_; ++i) {
            pn_ *= p_;
            if (pn_ > (1LL << 31)) throw Error("domain", "p^N must not exceed 2^31");
        }
        modulus_ = find_irreducible(p_, r_);
        frobenius_ = lift_frobenius();
    }

    long long p() const { return p_; }
    int degree() const { return r_; }
    int precision() const { return n_; }
    long long modulus_value() const { return pn_; }
    const std::vector<long long>& modulus() const { return modulus_; }
    /// Image of X under the arithmetic Frobenius lift (x -> x^p mod p).
    const Elem& frobenius_image() const { return frobenius_; }

    FiniteField residue_field() const { return FiniteField(p_, modulus_); }

    Elem zero() const { return Elem(r_, 0); }
    Elem one() const { return from_integer(1); }
    Elem generator() const {
        Elem e = zero();
        if (r_ == 1) {
            // X is a root of the linear modulus X + c0
            e[0] = reduce(-modulus_[0]);
        } else {
            e[1] = 1;
        }
        return e;
    }
    Elem from_integer(long long n) const {
        Elem e = zero();
        e[0] = reduce(n);
        return e;
    }
    Elem from_integer(const Integer& n) const {
        Integer r = n % Integer(static_cast<long>(pn_));
        if (r < 0) r += static_cast<long>(pn_);
        return from_integer(r.get_si());
    }
    Elem element(std::vector<long long> coords) const {
        coords.resize(r_, 0);
        for (auto& c : coords) c = reduce(c);
        return coords;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem out(r_);
        for (int i = 0; i < r_; ++i) out[i] = reduce(a[i] + b[i]);
        return out;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem out(r_);
        for (int i = 0; i < r_; ++i) out[i] = reduce(a[i] - b[i]);
        return out;
    }
    Elem neg(const Elem& a) const { return sub(zero(), a); }
    Elem scale(const Elem& a, long long c) const {
        Elem out(r_);
        for (int i = 0; i < r_; ++i) out[i] = reduce(static_cast<long long>((static_cast<__int128>(a[i]) * reduce(c)) % pn_));
        return out;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        std::vector<long long> prod(2 * r_ - 1, 0);
        for (int i = 0; i < r_; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % pn_;
        }
        for (int i = 2 * r_ - 2; i >= r_; --i) {
            const long long c = prod[i];
            if (c == 0) continue;
            for (int j = 0; j <= r_; ++j) prod[i - r_ + j] = reduce(prod[i - r_ + j] - c * modulus_[j]);
        }
        prod.resize(r_);
        return prod;
    }
    Elem pow(Elem base, unsigned long long e) const {
        Elem out = one();
        while (e > 0) {
            if ((e & 1ULL) != 0) out = mul(out, base);
            e >>= 1;
            if (e > 0) base = mul(base, base);
        }
        return out;
    }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a == zero(); }

    /// p-adic valuation of an element (N for zero).
    int valuation(const Elem& a) const {
        int v = n_;
        for (long long c : a) {
            if (c == 0) continue;
            int w = 0;
            while (c % p_ == 0) {
                c /= p_;
                ++w;
            }
            v = std::min(v, w);
        }
        return v;
    }
    bool is_unit(const Elem& a) const { return valuation(a) == 0; }

    /// a / p^k for an element of valuation >= k; the result is known mod p^(N-k)
    /// and is returned with its upper digits zero.
    Elem divide_p_power(const Elem& a, int k) const {
        if (valuation(a) < k) throw Error("domain", "element is not divisible by p^" + std::to_string(k));
        long long pk = 1;
        for (int i = 0; i < k; ++i) pk *= p_;
        Elem out(r_);
        for (int i = 0; i < r_; ++i) out[i] = a[i] / pk;
        return out;
    }
    /// Reduction modulo p^k (k <= N).
    Elem truncate(const Elem& a, int k) const {
        long long pk = 1;
        for (int i = 0; i < k; ++i) pk *= p_;
        Elem out(r_);
        for (int i = 0; i < r_; ++i) out[i] = a[i] % pk;
        return out;
    }
    Elem multiply_p_power(const Elem& a, int k) const {
        if (k >= n_) return zero();
        long long pk = 1;
        for (int i = 0; i < k; ++i) pk *= p_;
        return scale(a, pk);
    }

    Elem inverse(const Elem& a) const {
        if (!is_unit(a)) throw Error("not_invertible", "element of positive valuation has no inverse");
        const FiniteField k = residue_field();
        Elem y = k.inverse(residue(a));
        // Newton iteration doubles the p-adic precision each step
        for (int prec = 1; prec < n_; prec *= 2) y = mul(y, sub(from_integer(2), mul(a, y)));
        return y;
    }

    FiniteField::value_type residue(const Elem& a) const {
        FiniteField::value_type out(r_);
        for (int i = 0; i < r_; ++i) out[i] = a[i] % p_;
        return out;
    }

    /// Substitute X -> image in a.
    Elem compose(const Elem& a, const Elem& image) const {
        Elem acc = zero();
        for (int i = r_ - 1; i >= 0; --i) acc = add(mul(acc, image), from_integer(a[i]));
        return acc;
    }

    /// Arithmetic Frobenius lift applied k times (k may be negative).
    Elem frobenius(const Elem& a, int k = 1) const { return compose(a, frobenius_power_image(k)); }
    Elem frobenius_power_image(int k) const {
        k %= r_;
        if (k < 0) k += r_;
        Elem img = generator();
        for (int i = 0; i < k; ++i) img = compose(img, frobenius_);
        return img;
    }

    /// Teichmueller lift of a residue-field element.
    Elem teichmuller(const FiniteField::value_type& x) const {
        Elem y = element(x);
        const unsigned long long qr = static_cast<unsigned long long>(residue_field().order());
        for (int i = 1; i < n_; ++i) y = pow(y, qr);
        return y;
    }

    /// The Witt vector (x_0, ..., x_{N-1}) over F_{p^r} as sum p^i [x_i^(p^-i)].
    Elem from_witt(const std::vector<FiniteField::value_type>& x) const {
        if (static_cast<int>(x.size()) != n_) throw Error("domain", "Witt vector length must equal the precision");
        const FiniteField k = residue_field();
        Elem out = zero();
        for (int i = 0; i < n_; ++i) {
            // x^(p^-i) = x^(p^(r*i - i)) in F_{p^r}
            auto root = x[i];
            const int steps = (r_ - (i % r_)) % r_;
            for (int j = 0; j < steps; ++j) root = ring_pow(k, root, static_cast<unsigned long long>(p_));
            out = add(out, multiply_p_power(teichmuller(root), i));
        }
        return out;
    }

    std::string str(const Elem& a) const {
        std::string out = "[";
        for (int i = 0; i < r_; ++i) out += (i ? "," : "") + std::to_string(a[i]);
        return out + "]";
    }

private:
    long long reduce(long long v) const { return ((v % pn_) + pn_) % pn_; }

    Elem eval_modulus(const Elem& x) const {
        Elem acc = zero();
        for (int i = r_; i >= 0; --i) acc = add(mul(acc, x), from_integer(modulus_[i]));
        return acc;
    }
    Elem eval_modulus_derivative(const Elem& x) const {
        Elem acc = zero();
        for (int i = r_; i >= 1; --i) acc = add(mul(acc, x), from_integer(modulus_[i] * i));
        return acc;
    }

    // Hensel lift of the root of g congruent to X^p.
    Elem lift_frobenius() const {
        Elem root = pow(generator(), static_cast<unsigned long long>(p_));
        for (int iter = 0; iter < 64; ++iter) {
            const Elem value = eval_modulus(root);
            if (is_zero(value)) return root;
            root = sub(root, mul(value, inverse(eval_modulus_derivative(root))));
        }
        throw Error("internal", "Hensel lifting of the Frobenius did not converge");
    }

    long long p_;
    int r_;
    int n_;
    long long pn_ = 1;
    std::vector<long long> modulus_;
    Elem frobenius_;
};

/// Element of the fraction field: p^val * unit, with the unit known modulo
/// p^rel. rel == 0 encodes zero known to absolute precision val.
struct LocalElement {
    long long val = 0;
    int rel = 0;
    GaloisRing::Elem unit;

    bool is_zero() const { return rel == 0; }
    long long absolute_precision() const { return val + rel; }
};

/// O_K / p^N for K = unramified extension of degree f of Q_p, together with
/// the unramified extension K_s of degree s and sigma_K = Frob_p^f on it.
class UnramifiedContext {
public:
    UnramifiedContext(long long p, int f, int s, int precision)
        : p_(p), f_(f), s_(s), ring_(p, f * s, precision) {
        if (f < 1) throw Error("domain", "f must be positive");
        if (s < 1) throw Error("domain", "s must be positive");
        sigma_image_ = ring_.frobenius_power_image(f_);
        sigma_inverse_image_ = ring_.frobenius_power_image(-f_);
        // sigma_K has exact order s on the generator, hence on the carrier
        GaloisRing::Elem img = ring_.generator();
        for (int j = 1; j <= s_; ++j) {
            img = ring_.compose(img, sigma_image_);
            const bool identity = ring_.equal(img, ring_.generator());
            if (identity != (j == s_)) throw Error("internal", "sigma_K does not have order s");
        }
    }

    long long p() const { return p_; }
    int f() const { return f_; }
    int s() const { return s_; }
    int precision() const { return ring_.precision(); }
    Integer q() const { return ipow_rational(p_, f_).get_num(); }
    const GaloisRing& ring() const { return ring_; }

    GaloisRing::Elem sigma(const GaloisRing::Elem& a, int k = 1) const {
        k %= s_;
        if (k < 0) k += s_;
        GaloisRing::Elem out = a;
        for (int i = 0; i < k; ++i) out = ring_.compose(out, sigma_image_);
        return out;
    }

    LocalElement zero(long long absolute) const { return {absolute, 0, ring_.zero()}; }
    LocalElement zero() const { return zero(precision()); }
    /// A ring element known modulo p^N.
    LocalElement from_ring(const GaloisRing::Elem& a) const {
        const int v = ring_.valuation(a);
        if (v >= precision()) return zero();
        return {v, precision() - v, ring_.divide_p_power(a, v)};
    }
    LocalElement from_integer(long long n) const { return from_ring(ring_.from_integer(n)); }
    LocalElement one() const { return from_integer(1); }
    /// p^k exactly, with absolute precision N + k so multiplication by it is lossless.
    LocalElement p_power(long long k) const { return {k, precision(), ring_.one()}; }

    /// Ring element (requires non-negative valuation) reduced mod p^N.
    GaloisRing::Elem to_ring(const LocalElement& x) const {
        if (x.is_zero()) return ring_.zero();
        if (x.val < 0) throw Error("domain", "element is not integral");
        return ring_.multiply_p_power(x.unit, static_cast<int>(x.val));
    }

    LocalElement add(const LocalElement& a, const LocalElement& b) const {
        const long long absolute = std::min(a.absolute_precision(), b.absolute_precision());
        const long long w = std::min(a.val, b.val);
        if (absolute <= w) return zero(absolute);
        const int digits = static_cast<int>(std::min<long long>(absolute - w, precision()));
        const GaloisRing::Elem sa = shifted(a, w, digits);
        const GaloisRing::Elem sb = shifted(b, w, digits);
        const GaloisRing::Elem sum = ring_.truncate(ring_.add(sa, sb), digits);
        const int t = ring_.valuation(sum);
        if (t >= digits) return zero(w + digits);
        const int rel = digits - t;
        return {w + t, rel, ring_.truncate(ring_.divide_p_power(sum, t), rel)};
    }
    LocalElement neg(const LocalElement& a) const {
        if (a.is_zero()) return a;
        return {a.val, a.rel, ring_.truncate(ring_.neg(a.unit), a.rel)};
    }
    LocalElement sub(const LocalElement& a, const LocalElement& b) const { return add(a, neg(b)); }
    LocalElement mul(const LocalElement& a, const LocalElement& b) const {
        if (a.is_zero() && b.is_zero()) return zero(a.val + b.val);
        if (a.is_zero()) return zero(a.val + b.val);
        if (b.is_zero()) return zero(a.val + b.val);
        const int rel = std::min(a.rel, b.rel);
        return {a.val + b.val, rel, ring_.truncate(ring_.mul(a.unit, b.unit), rel)};
    }
    LocalElement inverse(const LocalElement& a) const {
        if (a.is_zero()) throw Error("insufficient_precision", "inverse of an element indistinguishable from 0");
        return {-a.val, a.rel, ring_.truncate(ring_.inverse(a.unit), a.rel)};
    }
    LocalElement sigma(const LocalElement& a, int k = 1) const {
        if (a.is_zero()) return a;
        return {a.val, a.rel, ring_.truncate(sigma(a.unit, k), a.rel)};
    }
    /// Equality up to the precision both sides carry.
    bool equal(const LocalElement& a, const LocalElement& b) const { return sub(a, b).is_zero(); }

    std::string str(const LocalElement& a) const {
        if (a.is_zero()) return "O(p^" + std::to_string(a.val) + ")";
        return "p^" + std::to_string(a.val) + "*" + ring_.str(a.unit) + " + O(p^" +
               std::to_string(a.absolute_precision()) + ")";
    }

private:
    // unit * p^(val - w) mod p^digits
    GaloisRing::Elem shifted(const LocalElement& a, long long w, int digits) const {
        if (a.is_zero()) return ring_.zero();
        const long long shift = a.val - w;
        if (shift >= digits) return ring_.zero();
        return ring_.truncate(ring_.multiply_p_power(a.unit, static_cast<int>(shift)), digits);
    }

    long long p_;
    int f_;
    int s_;
    GaloisRing ring_;
    GaloisRing::Elem sigma_image_;
    GaloisRing::Elem sigma_inverse_image_;
};

using LocalMatrix = std::vector<std::vector<LocalElement>>;

inline LocalMatrix local_identity(const UnramifiedContext& ctx, int n) {
    LocalMatrix m(n, std::vector<LocalElement>(n, ctx.zero()));
    for (int i = 0; i < n; ++i) m[i][i] = ctx.one();
    return m;
}

inline LocalMatrix local_matmul(const UnramifiedContext& ctx, const LocalMatrix& a, const LocalMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    LocalMatrix out(n, std::vector<LocalElement>(m, ctx.zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            LocalElement acc = ctx.zero();
            for (std::size_t l = 0; l < k; ++l) acc = ctx.add(acc, ctx.mul(a[i][l], b[l][j]));
            out[i][j] = acc;
        }
    return out;
}

inline bool local_matrix_equal(const UnramifiedContext& ctx, const LocalMatrix& a, const LocalMatrix& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (!ctx.equal(a[i][j], b[i][j])) return false;
    }
    return true;
}

/// Determinant by elimination with minimal-valuation pivots. Throws
/// insufficient_precision when a column has no pivot distinguishable from 0.
inline LocalElement local_det(const UnramifiedContext& ctx, LocalMatrix m) {
    const std::size_t n = m.size();
    LocalElement det = ctx.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::optional<std::size_t> pivot;
        for (std::size_t r = c; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            if (!pivot || m[r][c].val < m[*pivot][c].val) pivot = r;
        }
        if (!pivot) throw Error("insufficient_precision", "determinant indistinguishable from 0 at the working precision");
        if (*pivot != c) {
            std::swap(m[*pivot], m[c]);
            det = ctx.neg(det);
        }
        det = ctx.mul(det, m[c][c]);
        const LocalElement inv = ctx.inverse(m[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            const LocalElement factor = ctx.mul(m[r][c], inv);
            for (std::size_t j = c; j < n; ++j) m[r][j] = ctx.sub(m[r][j], ctx.mul(factor, m[c][j]));
        }
    }
    return det;
}

/// Inverse by Gauss-Jordan elimination.
inline LocalMatrix local_inverse(const UnramifiedContext& ctx, LocalMatrix m) {
    const std::size_t n = m.size();
    LocalMatrix inv = local_identity(ctx, static_cast<int>(n));
    for (std::size_t c = 0; c < n; ++c) {
        std::optional<std::size_t> pivot;
        for (std::size_t r = c; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            if (!pivot || m[r][c].val < m[*pivot][c].val) pivot = r;
        }
        if (!pivot) throw Error("insufficient_precision", "matrix is singular at the working precision");
        std::swap(m[*pivot], m[c]);
        std::swap(inv[*pivot], inv[c]);
        const LocalElement pinv = ctx.inverse(m[c][c]);
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] = ctx.mul(m[c][j], pinv);
            inv[c][j] = ctx.mul(inv[c][j], pinv);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            const LocalElement factor = m[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] = ctx.sub(m[r][j], ctx.mul(factor, m[c][j]));
                inv[r][j] = ctx.sub(inv[r][j], ctx.mul(factor, inv[c][j]));
            }
        }
    }
    return inv;
}

}  // namespace llc

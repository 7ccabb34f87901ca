#pragma once

// Cyclic division algebras D = K_s[Pi] with Pi^s = p^r and Pi a = sigma_K(a) Pi
// over an unramified K, their splitting embedding into s x s matrices over
// K_s, reduced norms and Brauer invariants.

#include <numeric>
#include <string>
#include <vector>

#include "llc/padic.hpp"

namespace llc {

class CyclicAlgebra {
public:
    /// Coefficients of 1, Pi, ..., Pi^(s-1).
    using Element = std::vector<LocalElement>;

    CyclicAlgebra(const UnramifiedContext& ctx, int r) : ctx_(ctx), r_(r) {
        if (std::gcd(r, ctx.s()) != 1) throw Error("domain", "r and s must be coprime");
    }

    const UnramifiedContext& context() const { return ctx_; }
    int r() const { return r_; }
    int s() const { return ctx_.s(); }

    Element zero() const { return Element(s(), ctx_.zero()); }
    Element one() const { return scalar(ctx_.one()); }
    Element scalar(const LocalElement& a) const {
        Element out = zero();
        out[0] = a;
        return out;
    }
    Element pi() const {
        if (s() == 1) return scalar(ctx_.p_power(r_));
        Element out = zero();
        out[1] = ctx_.one();
        return out;
    }
    Element make(std::vector<LocalElement> coeffs) const {
        if (static_cast<int>(coeffs.size()) != s()) throw Error("domain", "an element needs s coefficients");
        return coeffs;
    }

    Element add(const Element& x, const Element& y) const {
        Element out(s());
        for (int i = 0; i < s(); ++i) out[i] = ctx_.add(x[i], y[i]);
        return out;
    }

    /// (a Pi^i)(b Pi^j) = a sigma^i(b) Pi^(i+j), folding Pi^s = p^r.
    Element mul(const Element& x, const Element& y) const {
        Element out = zero();
        for (int i = 0; i < s(); ++i) {
            for (int j = 0; j < s(); ++j) {
                LocalElement term = ctx_.mul(x[i], ctx_.sigma(y[j], i));
                int k = i + j;
                if (k >= s()) {
                    k -= s();
                    term = ctx_.mul(term, ctx_.p_power(r_));
                }
                out[k] = ctx_.add(out[k], term);
            }
        }
        return out;
    }

    Element pow(const Element& x, int e) const {
        Element out = one();
        for (int i = 0; i < e; ++i) out = mul(out, x);
        return out;
    }

    bool equal(const Element& x, const Element& y) const {
        for (int i = 0; i < s(); ++i)
            if (!ctx_.equal(x[i], y[i])) return false;
        return true;
    }

    /// Left multiplication in the column model: a -> diag(sigma^-1 a, ..., sigma^-s a),
    /// Pi -> ones on the subdiagonal and p^r in the top-right corner.
    LocalMatrix embed_scalar(const LocalElement& a) const {
        LocalMatrix m(s(), std::vector<LocalElement>(s(), ctx_.zero()));
        for (int i = 0; i < s(); ++i) m[i][i] = ctx_.sigma(a, -(i + 1));
        return m;
    }
    LocalMatrix embed_pi() const {
        LocalMatrix m(s(), std::vector<LocalElement>(s(), ctx_.zero()));
        for (int i = 0; i + 1 < s(); ++i) m[i + 1][i] = ctx_.one();
        m[0][s() - 1] = ctx_.p_power(r_);
        return m;
    }
    LocalMatrix embed(const Element& x) const {
        LocalMatrix out(s(), std::vector<LocalElement>(s(), ctx_.zero()));
        LocalMatrix pi_power = local_identity(ctx_, s());
        const LocalMatrix pi_matrix = embed_pi();
        for (int i = 0; i < s(); ++i) {
            const LocalMatrix term = local_matmul(ctx_, embed_scalar(x[i]), pi_power);
            for (int a = 0; a < s(); ++a)
                for (int b = 0; b < s(); ++b) out[a][b] = ctx_.add(out[a][b], term[a][b]);
            pi_power = local_matmul(ctx_, pi_power, pi_matrix);
        }
        return out;
    }

    /// The relations satisfied by matrices u in the image of the embedding
    /// (indices mod s, 0-based):
    ///   u[i+1][j+1] = sigma^-1(u[i][j])            for i, j < s-1
    ///   u[0][j+1]   = p^r sigma^-1(u[s-1][j])       for j < s-1
    ///   u[i+1][0]   = p^-r sigma^-1(u[i][s-1])      for i < s-1
    ///   u[0][0]     = sigma^-1(u[s-1][s-1])
    bool satisfies_relations(const LocalMatrix& u) const {
        const int n = s();
        const LocalElement pr = ctx_.p_power(r_);
        const LocalElement pr_inv = ctx_.p_power(-r_);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const int i1 = (i + 1) % n, j1 = (j + 1) % n;
                LocalElement rhs = ctx_.sigma(u[i][j], -1);
                const bool wrap_row = i + 1 == n, wrap_col = j + 1 == n;
                if (wrap_row && !wrap_col) rhs = ctx_.mul(pr, rhs);
                if (wrap_col && !wrap_row) rhs = ctx_.mul(pr_inv, rhs);
                if (!ctx_.equal(u[i1][j1], rhs)) return false;
            }
        return true;
    }

    struct ReducedNorm {
        LocalElement nrd;
        Rational v_d;
    };

    ReducedNorm reduced_norm(const Element& x) const {
        const LocalElement det = local_det(ctx_, embed(x));
        if (det.is_zero()) throw Error("insufficient_precision", "determinant indistinguishable from 0");
        if (!ctx_.equal(ctx_.sigma(det), det))
            throw Error("internal", "reduced norm is not fixed by sigma_K");
        return {det, make_rational(det.val, s())};
    }

    std::string str(const Element& x) const {
        std::string out;
        for (int i = 0; i < s(); ++i) {
            if (i) out += " + ";
            out += "(" + ctx_.str(x[i]) + ")*Pi^" + std::to_string(i);
        }
        return out;
    }

private:
    const UnramifiedContext& ctx_;
    int r_;
};

/// Brauer invariant vD(Pi) mod 1, computed through the reduced norm.
inline Rational brauer_invariant(const UnramifiedContext& ctx, int r) {
    const CyclicAlgebra d(ctx, r);
    const Rational v = d.reduced_norm(d.pi()).v_d;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return v - Rational(fl);
}

}  // namespace llc

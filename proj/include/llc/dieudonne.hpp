#pragma once

// Dieudonne modules (M, F, V) of rank n over W_K(k) / p^N, k = F_{q^u}, with V
// sigma_K^-1-semilinear: V(x) = A sigma^-1(x) and F(x) = B sigma(x).

#include <algorithm>
#include <string>
#include <vector>

#include "llc/padic.hpp"

namespace llc {

using RingMatrix = std::vector<std::vector<GaloisRing::Elem>>;

inline RingMatrix ring_identity(const GaloisRing& ring, int n, long long diagonal = 1) {
    RingMatrix m(n, std::vector<GaloisRing::Elem>(n, ring.zero()));
    for (int i = 0; i < n; ++i) m[i][i] = ring.from_integer(diagonal);
    return m;
}

inline RingMatrix ring_matmul(const GaloisRing& ring, const RingMatrix& a, const RingMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RingMatrix out(n, std::vector<GaloisRing::Elem>(m, ring.zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = 0; l < k; ++l) out[i][j] = ring.add(out[i][j], ring.mul(a[i][l], b[l][j]));
    return out;
}

inline RingMatrix ring_sigma(const UnramifiedContext& ctx, const RingMatrix& a, int k) {
    RingMatrix out = a;
    for (auto& row : out)
        for (auto& e : row) e = ctx.sigma(e, k);
    return out;
}

inline RingMatrix ring_submatrix(const RingMatrix& a, int from, int to) {
    RingMatrix out;
    for (int i = from; i < to; ++i) out.emplace_back(a[i].begin() + from, a[i].begin() + to);
    return out;
}

/// Inverse of a matrix over the carrier; throws unless it lies in GL_n.
inline RingMatrix ring_inverse(const UnramifiedContext& ctx, const RingMatrix& a) {
    LocalMatrix m;
    for (const auto& row : a) {
        m.emplace_back();
        for (const auto& e : row) m.back().push_back(ctx.from_ring(e));
    }
    const LocalMatrix inv = local_inverse(ctx, m);
    RingMatrix out;
    for (const auto& row : inv) {
        out.emplace_back();
        for (const auto& e : row) out.back().push_back(ctx.to_ring(e));
    }
    return out;
}

/// p-adic valuations of the elementary divisors of a matrix over GR(p^N, r);
/// a zero divisor is reported as N.
inline std::vector<int> elementary_divisor_valuations(const GaloisRing& ring, RingMatrix m) {
    const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    std::vector<int> out;
    for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
        int best = ring.precision();
        std::size_t bi = k, bj = k;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                const int v = ring.valuation(m[i][j]);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (best >= ring.precision()) {
            out.resize(std::min(rows, cols), ring.precision());
            break;
        }
        std::swap(m[bi], m[k]);
        for (auto& row : m) std::swap(row[bj], row[k]);
        // pivot = p^best * unit; every other entry is divisible by p^best
        const GaloisRing::Elem unit_inv = ring.inverse(ring.divide_p_power(m[k][k], best));
        for (std::size_t i = k + 1; i < rows; ++i) {
            const GaloisRing::Elem factor = ring.mul(ring.divide_p_power(m[i][k], best), unit_inv);
            for (std::size_t j = k; j < cols; ++j) m[i][j] = ring.sub(m[i][j], ring.mul(factor, m[k][j]));
        }
        for (std::size_t j = k + 1; j < cols; ++j) {
            const GaloisRing::Elem factor = ring.mul(ring.divide_p_power(m[k][j], best), unit_inv);
            for (std::size_t i = k; i < rows; ++i) m[i][j] = ring.sub(m[i][j], ring.mul(factor, m[i][k]));
        }
        out.push_back(best);
    }
    std::sort(out.begin(), out.end());
    return out;
}

class DieudonneModule {
public:
    DieudonneModule(const UnramifiedContext& ctx, RingMatrix v, RingMatrix f)
        : ctx_(&ctx), v_(std::move(v)), f_(std::move(f)) {
        const std::size_t n = v_.size();
        for (const auto& row : v_)
            if (row.size() != n) throw Error("domain", "V must be a square matrix");
        if (f_.size() != n) throw Error("domain", "F and V must have the same size");
    }

    /// F derived as p * A^-1 when that matrix is integral.
    static DieudonneModule from_v(const UnramifiedContext& ctx, RingMatrix v) {
        LocalMatrix a;
        for (const auto& row : v) {
            a.emplace_back();
            for (const auto& e : row) a.back().push_back(ctx.from_ring(e));
        }
        const LocalMatrix inv = local_inverse(ctx, a);
        RingMatrix b;
        for (const auto& row : inv) {
            b.emplace_back();
            for (const auto& e : row) {
                const LocalElement pe = ctx.mul(ctx.p_power(1), e);
                if (!pe.is_zero() && pe.val < 0) throw Error("domain", "F = p V^-1 is not integral");
                b.back().push_back(ctx.to_ring(pe));
            }
        }
        return DieudonneModule(ctx, std::move(v), std::move(b));
    }

    const UnramifiedContext& context() const { return *ctx_; }
    int rank() const { return static_cast<int>(v_.size()); }
    const RingMatrix& v_matrix() const { return v_; }
    const RingMatrix& f_matrix() const { return f_; }

    /// Matrices of the linear maps F o V = B sigma(A) and V o F = A sigma^-1(B).
    RingMatrix fv() const { return ring_matmul(ctx_->ring(), f_, ring_sigma(*ctx_, v_, 1)); }
    RingMatrix vf() const { return ring_matmul(ctx_->ring(), v_, ring_sigma(*ctx_, f_, -1)); }
    bool fv_vf_is_p() const {
        const RingMatrix p_id = ring_identity(ctx_->ring(), rank(), ctx_->p());
        return fv() == p_id && vf() == p_id;
    }

    /// V^m(x) = P_m sigma^-m(x) with P_m = A sigma^-1(A) ... sigma^-(m-1)(A).
    RingMatrix v_power(int m) const {
        RingMatrix out = ring_identity(ctx_->ring(), rank());
        for (int i = 0; i < m; ++i) out = ring_matmul(ctx_->ring(), out, ring_sigma(*ctx_, v_, -i));
        return out;
    }

    /// Length of M / VM over W_K(k).
    int lie_length() const {
        int total = 0;
        for (int v : elementary_divisor_valuations(ctx_->ring(), v_)) total += v;
        return total;
    }

    /// Change of basis by P in GL_n: V' = P^-1 A sigma^-1(P), F' = P^-1 B sigma(P).
    DieudonneModule change_basis(const RingMatrix& p) const {
        const GaloisRing& ring = ctx_->ring();
        const RingMatrix pinv = ring_inverse(*ctx_, p);
        return DieudonneModule(*ctx_, ring_matmul(ring, ring_matmul(ring, pinv, v_), ring_sigma(*ctx_, p, -1)),
                               ring_matmul(ring, ring_matmul(ring, pinv, f_), ring_sigma(*ctx_, p, 1)));
    }

    std::string debug_string() const {
        std::string out;
        for (const auto& row : v_) {
            for (const auto& e : row) out += ctx_->ring().str(e) + " ";
            out += "\n";
        }
        return out;
    }

private:
    const UnramifiedContext* ctx_;
    RingMatrix v_;
    RingMatrix f_;
};

/// The standard module on d_1..d_h, e_1..e_{n-h}: V d_i = d_i, V e_i = e_{i+1},
/// V e_{n-h} = p e_1; F = p V^-1 on the same basis.
inline DieudonneModule dieudonne_standard(const UnramifiedContext& ctx, int n, int h) {
    if (n < 1) throw Error("domain", "rank must be positive");
    if (h < 0 || h > n) throw Error("domain", "etale height must lie in [0, n]");
    const GaloisRing& ring = ctx.ring();
    const long long p = ctx.p();
    RingMatrix v(n, std::vector<GaloisRing::Elem>(n, ring.zero()));
    RingMatrix f(n, std::vector<GaloisRing::Elem>(n, ring.zero()));
    for (int i = 0; i < h; ++i) {
        v[i][i] = ring.one();
        f[i][i] = ring.from_integer(p);
    }
    const int formal = n - h;
    for (int i = 0; i < formal; ++i) {
        const int col = h + i;
        if (i + 1 < formal) {
            v[col + 1][col] = ring.one();
            f[col][col + 1] = ring.from_integer(p);  // F e_{i+1} = p e_i
        } else {
            v[h][col] = ring.from_integer(p);
            f[col][h] = ring.one();  // F e_1 = e_{n-h}
        }
    }
    return DieudonneModule(ctx, std::move(v), std::move(f));
}

struct Heights {
    int etale = 0;
    int formal = 0;
};

/// Etale and formal heights from the stabilized images of V^m on M / p^N M.
inline Heights etale_inf_height(const DieudonneModule& m) {
    const GaloisRing& ring = m.context().ring();
    const int bound = m.rank() * ring.precision() + 1;
    RingMatrix image = ring_identity(ring, m.rank());
    std::vector<int> profile = elementary_divisor_valuations(ring, image);
    for (int step = 0; step < bound; ++step) {
        image = ring_matmul(ring, image, ring_sigma(m.context(), m.v_matrix(), -step));
        std::vector<int> next = elementary_divisor_valuations(ring, image);
        if (next == profile) break;
        profile = std::move(next);
    }
    Heights out;
    for (int v : profile) out.etale += v == 0 ? 1 : 0;
    out.formal = m.rank() - out.etale;
    return out;
}

}  // namespace llc

#pragma once

// Frobenius-semisimple Weil-Deligne representations as multisets of
// rec(atom) (x) Sp(m) blocks, plus an explicit-matrix model for the
// unramified case.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "llc/bzclass.hpp"

namespace llc {

/// rec(atom) (x) Sp(m).
struct WDBlock {
    Atom atom;
    int m = 1;

    auto operator<=>(const WDBlock&) const = default;
    bool operator==(const WDBlock&) const = default;
};

struct WDRep {
    std::vector<WDBlock> blocks;

    std::vector<WDBlock> sorted() const {
        auto b = blocks;
        std::sort(b.begin(), b.end());
        return b;
    }
    bool operator==(const WDRep& o) const { return sorted() == o.sorted(); }
};

inline WDBlock sp_block(Atom atom, int m) {
    if (m < 1) throw Error("domain", "Sp(m) needs m >= 1");
    return {std::move(atom), m};
}

inline WDRep make_wdrep(std::vector<WDBlock> blocks) {
    if (blocks.empty()) throw Error("domain", "Weil-Deligne representation needs at least one block");
    for (const auto& b : blocks)
        if (b.m < 1) throw Error("domain", "Sp(m) needs m >= 1");
    return {std::move(blocks)};
}

inline int dimension(const WDRep& rho, const LabelRegistry& reg) {
    int n = 0;
    for (const auto& b : rho.blocks) n += reg.at(b.atom.label).degree * b.m;
    return n;
}

inline WDRep direct_sum(const WDRep& a, const WDRep& b) {
    WDRep out = a;
    out.blocks.insert(out.blocks.end(), b.blocks.begin(), b.blocks.end());
    return out;
}

inline WDRep wd_twist(const WDRep& rho, HalfInt y) {
    WDRep out = rho;
    for (auto& b : out.blocks) b.atom = atom_twist(b.atom, y);
    return out;
}

/// rho (x) rec(chi) for a degree-one atom chi.
inline WDRep wd_tensor_char(const WDRep& rho, const Atom& chi, const LabelRegistry& reg) {
    const auto& cl = reg.at(chi.label);
    if (!cl.is_character()) throw Error("domain", "tensoring needs a character atom");
    if (reg.is_trivial_character(chi.label)) return wd_twist(rho, chi.x);
    WDRep out = rho;
    for (auto& b : out.blocks) b.atom = {reg.product(b.atom.label, chi.label), b.atom.x + chi.x};
    return out;
}

/// Sp(m)^dual = |.|^(1-m) (x) Sp(m).
inline WDRep wd_dual(const WDRep& rho, const LabelRegistry& reg) {
    WDRep out;
    for (const auto& b : rho.blocks) out.blocks.push_back({atom_twist(dualize(b.atom, reg), HalfInt(1 - b.m)), b.m});
    return out;
}

/// Jordan type of N: m_i repeated n_i times, descending.
inline std::vector<int> nilpotent_partition(const WDRep& rho, const LabelRegistry& reg) {
    std::vector<int> parts;
    for (const auto& b : rho.blocks)
        for (int i = 0; i < reg.at(b.atom.label).degree; ++i) parts.push_back(b.m);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

struct WDPredicates {
    bool irreducible = false;
    bool indecomposable = false;
    bool unramified = false;
    bool ik_spherical = false;
    bool bounded_frobenius = false;
};

inline WDPredicates wd_predicates(const WDRep& rho, const LabelRegistry& reg, const LocalFieldContext& ctx) {
    WDPredicates p;
    auto unram = [&](const WDBlock& b) { return reg.at(b.atom.label).kind == LabelKind::unramified_char; };
    p.indecomposable = rho.blocks.size() == 1;
    p.irreducible = p.indecomposable && rho.blocks.front().m == 1;
    p.unramified = std::all_of(rho.blocks.begin(), rho.blocks.end(),
                               [&](const WDBlock& b) { return b.m == 1 && unram(b); });
    p.ik_spherical = std::all_of(rho.blocks.begin(), rho.blocks.end(), unram);
    // SL2-normalised Frobenius eigenvalues: omega * q^(-n (x + (m-1)/2)) must have norm 1.
    p.bounded_frobenius = std::all_of(rho.blocks.begin(), rho.blocks.end(), [&](const WDBlock& b) {
        const auto& l = reg.at(b.atom.label);
        const HalfInt center = b.atom.x + HalfInt::from_halves(b.m - 1);
        const ExactScalar eta = l.omega * ExactScalar::q_power(-(center * l.degree));
        return norm_sq_compare(norm_sq(eta), PosQMonomial(1, 0), ctx) == std::strong_ordering::equal;
    });
    return p;
}

struct CGTerm {
    int j = 0;
    int m = 1;
    bool operator==(const CGTerm&) const = default;
};

/// Sp(a) (x) Sp(b) = sum_{j < min(a,b)} |.|^j (x) Sp(a + b - 1 - 2j).
inline std::vector<CGTerm> clebsch_gordan(int m1, int m2) {
    if (m1 < 1 || m2 < 1) throw Error("domain", "Clebsch-Gordan needs positive lengths");
    std::vector<CGTerm> out;
    for (int j = 0; j < std::min(m1, m2); ++j) out.push_back({j, m1 + m2 - 1 - 2 * j});
    return out;
}

using QuadMatrix = std::vector<std::vector<QuadScalar>>;

/// Explicit (Phi, N) on a basis of Frobenius eigenvectors.
struct UnramMatrixRep {
    int dimension = 0;
    long long q = 1;
    QuadMatrix frobenius;
    std::vector<std::vector<int>> nilpotent;

    std::string debug_string() const {
        std::string out = "Phi:\n";
        for (const auto& row : frobenius) {
            for (std::size_t j = 0; j < row.size(); ++j) out += (j ? "  " : "") + row[j].str();
            out += "\n";
        }
        out += "N:\n";
        for (const auto& row : nilpotent) {
            for (std::size_t j = 0; j < row.size(); ++j) out += (j ? " " : "") + std::to_string(row[j]);
            out += "\n";
        }
        return out;
    }
};

namespace detail {

inline QuadMatrix quad_zero(int n, long long q) {
    return QuadMatrix(n, std::vector<QuadScalar>(n, QuadScalar::constant(GaussRat(0), q)));
}

/// Determinant over Q(i)(sqrt q) by elimination.
inline QuadScalar quad_det(QuadMatrix a, long long q) {
    const std::size_t n = a.size();
    QuadScalar det = QuadScalar::constant(GaussRat(1), q);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return QuadScalar::constant(GaussRat(0), q);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det = det * a[col][col];
        const QuadScalar inv = a[col][col].inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            const QuadScalar factor = a[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) a[r][c] = a[r][c] - factor * a[col][c];
        }
    }
    return det;
}

/// Rational null space basis of an integer matrix; each basis vector has a 1 in
/// its own free column and 0 in every other free column.
inline std::vector<std::vector<Rational>> null_space(const std::vector<std::vector<int>>& mat, int n,
                                                     std::vector<int>& free_cols) {
    std::vector<std::vector<Rational>> a;
    for (const auto& row : mat) {
        std::vector<Rational> r;
        for (int v : row) r.emplace_back(v);
        a.push_back(std::move(r));
    }
    std::vector<int> pivot_cols;
    std::size_t row = 0;
    for (int col = 0; col < n && row < a.size(); ++col) {
        std::size_t piv = row;
        while (piv < a.size() && a[piv][col] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[row]);
        const Rational inv = Rational(1) / a[row][col];
        for (auto& v : a[row]) v *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col] == 0) continue;
            const Rational factor = a[r][col];
            for (int c = 0; c < n; ++c) a[r][c] -= factor * a[row][c];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    free_cols.clear();
    for (int c = 0; c < n; ++c)
        if (std::find(pivot_cols.begin(), pivot_cols.end(), c) == pivot_cols.end()) free_cols.push_back(c);
    std::vector<std::vector<Rational>> basis;
    for (int fc : free_cols) {
        std::vector<Rational> v(n, Rational(0));
        v[fc] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a[r][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Matrix of Phi restricted to ker N, in the null-space basis above.
inline QuadMatrix frobenius_on_kernel(const UnramMatrixRep& rep) {
    std::vector<int> free_cols;
    const auto basis = null_space(rep.nilpotent, rep.dimension, free_cols);
    const int k = static_cast<int>(basis.size());
    QuadMatrix restricted = quad_zero(k, rep.q);
    for (int j = 0; j < k; ++j) {
        std::vector<QuadScalar> image(rep.dimension, QuadScalar::constant(GaussRat(0), rep.q));
        for (int r = 0; r < rep.dimension; ++r)
            for (int c = 0; c < rep.dimension; ++c)
                if (basis[j][c] != 0) image[r] = image[r] + rep.frobenius[r][c] * QuadScalar::constant(GaussRat(basis[j][c]), rep.q);
        for (int i = 0; i < k; ++i) restricted[i][j] = image[free_cols[i]];
        // Phi-stability of ker N
        for (int r = 0; r < rep.dimension; ++r) {
            QuadScalar expect = QuadScalar::constant(GaussRat(0), rep.q);
            for (int i = 0; i < k; ++i) expect = expect + restricted[i][j] * QuadScalar::constant(GaussRat(basis[i][r]), rep.q);
            if (!(expect == image[r])) throw Error("oracle", "ker N is not Frobenius-stable");
        }
    }
    return restricted;
}

/// Coefficients of det(1 - T M), constant term first (Faddeev-LeVerrier).
inline std::vector<QuadScalar> reversed_charpoly(const QuadMatrix& m, long long q) {
    const int n = static_cast<int>(m.size());
    const auto zero = QuadScalar::constant(GaussRat(0), q);
    std::vector<QuadScalar> coeffs(n + 1, zero);  // coeffs[i] = c_i of x^n + c_1 x^(n-1) + ...
    coeffs[0] = QuadScalar::constant(GaussRat(1), q);
    QuadMatrix mk = quad_zero(n, q);  // M_0 = 0
    for (int k = 1; k <= n; ++k) {
        // M_k = M (M_{k-1} + c_{k-1} I);  c_k = -tr(M_k)/k
        QuadMatrix inner = mk;
        for (int i = 0; i < n; ++i) inner[i][i] = inner[i][i] + coeffs[k - 1];
        QuadMatrix next = quad_zero(n, q);
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (m[i][l].is_zero()) continue;
                for (int j = 0; j < n; ++j) next[i][j] = next[i][j] + m[i][l] * inner[l][j];
            }
        QuadScalar trace = zero;
        for (int i = 0; i < n; ++i) trace = trace + next[i][i];
        coeffs[k] = -(trace * QuadScalar::constant(GaussRat(Rational(1, k)), q));
        mk = std::move(next);
    }
    return coeffs;
}

}  // namespace detail

/// Block-diagonal Phi with entries beta * q^(-i), and shift matrices for N.
inline UnramMatrixRep explicit_unramified(const WDRep& rho, const LabelRegistry& reg, const LocalFieldContext& ctx) {
    UnramMatrixRep rep;
    rep.q = ctx.q();
    for (const auto& b : rho.blocks)
        if (reg.at(b.atom.label).kind != LabelKind::unramified_char)
            throw Error("oracle_undefined", "oracle undefined: block with non-unramified atom '" + b.atom.label + "'");
    const int n = dimension(rho, reg);
    rep.dimension = n;
    rep.frobenius = detail::quad_zero(n, rep.q);
    rep.nilpotent.assign(n, std::vector<int>(n, 0));
    int offset = 0;
    for (const auto& b : rho.blocks) {
        const ExactScalar beta = reg.at(b.atom.label).omega * ExactScalar::q_power(-b.atom.x);
        for (int i = 0; i < b.m; ++i) {
            rep.frobenius[offset + i][offset + i] = QuadScalar::from(beta * ExactScalar::q_power(HalfInt(-i)), rep.q);
            if (i + 1 < b.m) rep.nilpotent[offset + i + 1][offset + i] = 1;  // N e_i = e_{i+1}
        }
        offset += b.m;
    }
    return rep;
}

/// (Phi1 (x) Phi2, N1 (x) 1 + 1 (x) N2).
inline UnramMatrixRep tensor(const UnramMatrixRep& a, const UnramMatrixRep& b) {
    UnramMatrixRep out;
    out.q = a.q;
    out.dimension = a.dimension * b.dimension;
    const int n = out.dimension;
    out.frobenius = detail::quad_zero(n, out.q);
    out.nilpotent.assign(n, std::vector<int>(n, 0));
    auto idx = [&](int i, int j) { return i * b.dimension + j; };
    for (int i1 = 0; i1 < a.dimension; ++i1)
        for (int j1 = 0; j1 < a.dimension; ++j1)
            for (int i2 = 0; i2 < b.dimension; ++i2)
                for (int j2 = 0; j2 < b.dimension; ++j2) {
                    out.frobenius[idx(i1, i2)][idx(j1, j2)] = a.frobenius[i1][j1] * b.frobenius[i2][j2];
                    int nv = 0;
                    if (i2 == j2) nv += a.nilpotent[i1][j1];
                    if (i1 == j1) nv += b.nilpotent[i2][j2];
                    out.nilpotent[idx(i1, i2)][idx(j1, j2)] = nv;
                }
    return out;
}

/// det(1 - T Phi | ker N)^(-1), factored against the eigenvalues of Phi.
inline LFactor matrix_l(const UnramMatrixRep& rep) {
    const QuadMatrix restricted = detail::frobenius_on_kernel(rep);
    std::vector<QuadScalar> poly = detail::reversed_charpoly(restricted, rep.q);
    std::vector<QuadScalar> candidates;
    for (int i = 0; i < rep.dimension; ++i) {
        const QuadScalar& d = rep.frobenius[i][i];
        if (d.is_zero()) continue;
        if (std::find(candidates.begin(), candidates.end(), d) == candidates.end()) candidates.push_back(d);
    }
    std::vector<LFactorTerm> terms;
    for (const auto& lambda : candidates) {
        while (poly.size() > 1) {
            // divide by (1 - lambda T)
            std::vector<QuadScalar> quot(poly.size() - 1, QuadScalar::constant(GaussRat(0), rep.q));
            quot[0] = poly[0];
            for (std::size_t i = 1; i < quot.size(); ++i) quot[i] = poly[i] + lambda * quot[i - 1];
            const QuadScalar rem = poly.back() + lambda * quot.back();
            if (!rem.is_zero()) break;
            poly = std::move(quot);
            const auto mono = lambda.as_monomial();
            if (!mono) throw Error("oracle", "eigenvalue outside the scalar model");
            terms.push_back({*mono, 1});
        }
    }
    if (poly.size() != 1) throw Error("oracle", "characteristic polynomial did not factor over the eigenvalues");
    return LFactor(std::move(terms));
}

/// det(-Phi | V / ker N).
inline ExactScalar matrix_eps_det(const UnramMatrixRep& rep) {
    auto negate = [](QuadMatrix m) {
        for (auto& row : m)
            for (auto& v : row) v = -v;
        return m;
    };
    const QuadScalar full = detail::quad_det(negate(rep.frobenius), rep.q);
    const QuadScalar kernel = detail::quad_det(negate(detail::frobenius_on_kernel(rep)), rep.q);
    const auto mono = (full / kernel).as_monomial();
    if (!mono) throw Error("oracle", "determinant outside the scalar model");
    return *mono;
}

}  // namespace llc

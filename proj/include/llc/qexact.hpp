#pragma once

// Exact scalars c * q^(k/2) with Gaussian-rational c, and the L-factor
// algebra built on them.

#include <algorithm>
#include <compare>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "llc/common.hpp"

namespace llc {

/// Element of Q(i).
struct GaussRat {
    Rational re;
    Rational im;

    GaussRat() = default;
    GaussRat(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {  // NOLINT
        re.canonicalize();
        im.canonicalize();
    }
    GaussRat(long long r) : GaussRat(Rational(static_cast<long>(r))) {}  // NOLINT

    static GaussRat i_unit() { return {0, 1}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    Rational norm() const { return re * re + im * im; }
    GaussRat conj() const { return {re, -im}; }

    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat operator/(const GaussRat& o) const {
        if (o.is_zero()) throw Error("division_by_zero", "division by zero Gaussian rational");
        const Rational n = o.norm();
        const GaussRat t = *this * o.conj();
        return {t.re / n, t.im / n};
    }
    GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }

    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }

    /// Lexicographic (re, im); only used for deterministic ordering.
    std::strong_ordering order(const GaussRat& o) const {
        if (re < o.re) return std::strong_ordering::less;
        if (re > o.re) return std::strong_ordering::greater;
        if (im < o.im) return std::strong_ordering::less;
        if (im > o.im) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    GaussRat pow(long long e) const {
        if (e < 0) return GaussRat(1) / pow(-e);
        GaussRat out(1);
        GaussRat b = *this;
        while (e > 0) {
            if ((e & 1) != 0) out *= b;
            b *= b;
            e >>= 1;
        }
        return out;
    }

    std::string str() const {
        if (im == 0) return re.get_str();
        std::string ims;
        if (im == 1) ims = "i";
        else if (im == -1) ims = "-i";
        else ims = im.get_str() + "i";
        if (re == 0) return ims;
        if (im < 0) {
            const Rational a = -im;
            return re.get_str() + " - " + (a == 1 ? std::string("i") : a.get_str() + "i");
        }
        return re.get_str() + " + " + ims;
    }
};

/// min over re/im of the p-adic valuation; the "unit part" c / p^v has valuation 0.
inline long long gauss_valuation(const GaussRat& c, long long p) {
    if (c.is_zero()) throw Error("domain", "valuation of zero");
    if (c.im == 0) return valuation(c.re, p);
    if (c.re == 0) return valuation(c.im, p);
    return std::min(valuation(c.re, p), valuation(c.im, p));
}

/// q = p^f, the valuation d of the absolute different, and the exponent n(psi).
class LocalFieldContext {
public:
    static LocalFieldContext create(long long p, long long f = 1, long long d = 0, long long n_psi = 0) {
        if (!is_prime(p)) throw Error("invalid_context", "p = " + std::to_string(p) + " is not prime");
        if (f < 1) throw Error("invalid_context", "f must be positive");
        if (d < 0) throw Error("invalid_context", "d must be non-negative");
        long long q = 1;
        for (long long i = 0; i < f; ++i) {
            if (q > (1LL << 40) / p) throw Error("invalid_context", "q = p^f too large");
            q *= p;
        }
        return LocalFieldContext(p, f, q, d, n_psi);
    }

    long long p() const { return p_; }
    long long f() const { return f_; }
    long long q() const { return q_; }
    long long d() const { return d_; }
    long long n_psi() const { return n_psi_; }

private:
    LocalFieldContext(long long p, long long f, long long q, long long d, long long n_psi)
        : p_(p), f_(f), q_(q), d_(d), n_psi_(n_psi) {}

    long long p_;
    long long f_;
    long long q_;
    long long d_;
    long long n_psi_;
};

/// c * q^(k/2). The pair (c, k) is not canonical for a concrete q; compare with
/// `same_value` or through `canonical`.
struct ExactScalar {
    GaussRat c{1};
    long long k = 0;

    ExactScalar() = default;
    ExactScalar(GaussRat coeff, long long half_exp = 0) : c(std::move(coeff)), k(half_exp) {}  // NOLINT

    static ExactScalar one() { return {}; }
    /// q^e for a half-integer e.
    static ExactScalar q_power(HalfInt e) { return {GaussRat(1), e.halves()}; }

    bool is_zero() const { return c.is_zero(); }

    ExactScalar operator*(const ExactScalar& o) const { return {c * o.c, k + o.k}; }
    ExactScalar operator/(const ExactScalar& o) const {
        if (o.is_zero()) throw Error("division_by_zero", "division by zero scalar");
        return {c / o.c, k - o.k};
    }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
    ExactScalar operator-() const { return {-c, k}; }
    ExactScalar pow(long long e) const {
        if (e < 0 && is_zero()) throw Error("division_by_zero", "negative power of zero scalar");
        return {c.pow(e), k * e};
    }
    ExactScalar inverse() const { return ExactScalar::one() / *this; }

    /// Structural equality of the stored pair.
    bool operator==(const ExactScalar& o) const { return k == o.k && c == o.c; }
};

enum class ScalarOp { mul, div, pow };

inline ExactScalar scalar_arith(const ExactScalar& x, const ExactScalar& y, ScalarOp op, long long n = 0) {
    switch (op) {
        case ScalarOp::mul: return x * y;
        case ScalarOp::div: return x / y;
        case ScalarOp::pow: return x.pow(n);
    }
    return x;
}

/// True iff x denotes 1 for the concrete q: c real, positive, c^2 = q^(-k).
inline bool equals_one(const ExactScalar& x, const LocalFieldContext& ctx) {
    if (!x.c.is_real() || x.c.re <= 0) return false;
    return x.c.re * x.c.re == ipow_rational(ctx.q(), -x.k);
}

/// Canonical representative of the value: c = u * p^(r/2) with u of p-valuation 0
/// and k maximal. Equal values have equal canonical forms.
inline ExactScalar canonical(const ExactScalar& x, const LocalFieldContext& ctx) {
    if (x.is_zero()) return {GaussRat(0), 0};
    const long long p = ctx.p();
    const long long f = ctx.f();
    const long long e = gauss_valuation(x.c, p);
    const GaussRat unit = x.c / GaussRat(ipow_rational(p, e));
    const long long total_halves = 2 * e + f * x.k;  // value = unit * p^(total_halves / 2)
    auto floor_div = [](long long a, long long b) {
        long long qv = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --qv;
        return qv;
    };
    long long kk = floor_div(total_halves, f);
    if (f % 2 != 0 && ((total_halves - kk) % 2 != 0)) --kk;
    const long long rem = total_halves - f * kk;  // even, in [0, 2f)
    return {unit * GaussRat(ipow_rational(p, rem / 2)), kk};
}

inline bool same_value(const ExactScalar& x, const ExactScalar& y, const LocalFieldContext& ctx) {
    return canonical(x, ctx) == canonical(y, ctx);
}

inline std::strong_ordering canonical_order(const ExactScalar& a, const ExactScalar& b) {
    if (a.k != b.k) return a.k <=> b.k;
    return a.c.order(b.c);
}

/// "c * q^(k/2)" with the coefficient omitted when 1 and q^(k/2) reduced when k is even.
inline std::string render(const ExactScalar& x) {
    if (x.is_zero()) return "0";
    std::string qpart;
    if (x.k != 0) {
        if (x.k % 2 == 0) {
            qpart = (x.k == 2) ? "q" : "q^" + std::to_string(x.k / 2);
        } else {
            qpart = "q^(" + std::to_string(x.k) + "/2)";
        }
    }
    std::string cpart = x.c.str();
    const bool compound = !x.c.is_real() && x.c.re != 0;
    if (qpart.empty()) return cpart;
    if (x.c == GaussRat(1)) return qpart;
    if (x.c == GaussRat(-1)) return "-" + qpart;
    if (compound) cpart = "(" + cpart + ")";
    return cpart + " * " + qpart;
}

inline std::string render(const ExactScalar& x, const LocalFieldContext& ctx) {
    return render(canonical(x, ctx));
}

/// a * q^(k/2) with a > 0; used for squared absolute values.
struct PosQMonomial {
    Rational a{1};
    long long k = 0;

    PosQMonomial() = default;
    PosQMonomial(Rational av, long long kv) : a(std::move(av)), k(kv) {
        if (a <= 0) throw Error("domain", "PosQMonomial requires a > 0");
    }
};

inline PosQMonomial norm_sq(const ExactScalar& x) {
    return {x.c.norm(), 2 * x.k};
}

inline std::strong_ordering norm_sq_compare(const PosQMonomial& x, const PosQMonomial& y,
                                            const LocalFieldContext& ctx) {
    const long long delta = x.k - y.k;
    auto cmp = [](const Rational& l, const Rational& r) {
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    };
    if (delta % 2 == 0) return cmp(x.a * ipow_rational(ctx.q(), delta / 2), y.a);
    // both sides positive: compare squares
    return cmp(x.a * x.a * ipow_rational(ctx.q(), delta), y.a * y.a);
}

/// One inverse factor (1 - a T^t)^(-1), T = q^(-s).
struct LFactorTerm {
    ExactScalar a;
    int t = 1;
    bool operator==(const LFactorTerm&) const = default;
};

/// Product of inverse factors; the empty product is the constant 1.
class LFactor {
public:
    LFactor() = default;
    explicit LFactor(std::vector<LFactorTerm> terms) : terms_(std::move(terms)) {
        for (const auto& term : terms_) validate(term);
    }

    static LFactor single(ExactScalar a, int t = 1) { return LFactor({LFactorTerm{std::move(a), t}}); }

    const std::vector<LFactorTerm>& terms() const { return terms_; }
    bool is_one() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    LFactor operator*(const LFactor& o) const {
        LFactor out = *this;
        out.terms_.insert(out.terms_.end(), o.terms_.begin(), o.terms_.end());
        return out;
    }
    LFactor& operator*=(const LFactor& o) { return *this = *this * o; }

    /// L(s + y): each a becomes a * q^(-t y).
    LFactor shifted(HalfInt y) const {
        LFactor out = *this;
        for (auto& term : out.terms_) term.a = term.a * ExactScalar::q_power(-(y * term.t));
        return out;
    }

    /// Canonical scalars, sorted by (t, value); equal L-factors give equal results.
    std::vector<LFactorTerm> canonical_terms(const LocalFieldContext& ctx) const {
        std::vector<LFactorTerm> out;
        out.reserve(terms_.size());
        for (const auto& term : terms_) out.push_back({canonical(term.a, ctx), term.t});
        std::sort(out.begin(), out.end(), [](const LFactorTerm& l, const LFactorTerm& r) {
            if (l.t != r.t) return l.t < r.t;
            return canonical_order(l.a, r.a) == std::strong_ordering::less;
        });
        return out;
    }

    bool equals(const LFactor& o, const LocalFieldContext& ctx) const {
        return canonical_terms(ctx) == o.canonical_terms(ctx);
    }

    std::string render(const LocalFieldContext& ctx) const {
        if (terms_.empty()) return "1";
        std::string out;
        for (const auto& term : canonical_terms(ctx)) {
            if (!out.empty()) out += " ";
            std::string a = llc::render(term.a);
            if (a.find(' ') != std::string::npos || a.front() == '-') a = "(" + a + ")";
            out += "(1 - ";
            out += (a == "1") ? std::string() : a + " ";
            out += term.t == 1 ? "T" : "T^" + std::to_string(term.t);
            out += ")^-1";
        }
        return out;
    }

private:
    static void validate(const LFactorTerm& term) {
        if (term.t < 1) throw Error("domain", "L-factor term needs t >= 1");
        if (term.a.is_zero()) throw Error("domain", "L-factor term needs a nonzero coefficient");
    }

    std::vector<LFactorTerm> terms_;
};

inline LFactor lfactor_mul(const LFactor& l1, const LFactor& l2) { return l1 * l2; }

struct PoleInfo {
    bool has_pole = false;
    int order = 0;
};

/// Pole of L at s = s0: a factor (a, t) vanishes there iff a q^(-t s0) = 1.
inline PoleInfo lfactor_pole_at(const LFactor& l, HalfInt s0, const LocalFieldContext& ctx) {
    PoleInfo info;
    for (const auto& term : l.terms()) {
        if (equals_one(term.a * ExactScalar::q_power(-(s0 * term.t)), ctx)) ++info.order;
    }
    info.has_pole = info.order > 0;
    return info;
}

/// Element a + b*sqrt(q) of Q(i)(sqrt q), i.e. Laurent polynomials in v modulo
/// v^2 = q. When q is a square the sqrt part is folded into a.
class QuadScalar {
public:
    QuadScalar() = default;
    QuadScalar(GaussRat a, GaussRat b, long long q) : a_(std::move(a)), b_(std::move(b)), q_(q) { fold(); }

    static QuadScalar from(const ExactScalar& x, long long q) {
        // c * q^(k/2) = c * q^floor(k/2) * (sqrt q)^(k mod 2)
        long long half = x.k / 2;
        long long odd = x.k % 2;
        if (odd < 0) {
            odd += 2;
            half -= 1;
        }
        const GaussRat scaled = x.c * GaussRat(ipow_rational(q, half));
        return odd != 0 ? QuadScalar(GaussRat(0), scaled, q) : QuadScalar(scaled, GaussRat(0), q);
    }
    static QuadScalar constant(GaussRat a, long long q) { return {std::move(a), GaussRat(0), q}; }

    const GaussRat& rational_part() const { return a_; }
    const GaussRat& sqrt_part() const { return b_; }
    long long q() const { return q_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadScalar operator+(const QuadScalar& o) const { return {a_ + o.a_, b_ + o.b_, q_}; }
    QuadScalar operator-(const QuadScalar& o) const { return {a_ - o.a_, b_ - o.b_, q_}; }
    QuadScalar operator-() const { return {-a_, -b_, q_}; }
    QuadScalar operator*(const QuadScalar& o) const {
        return {a_ * o.a_ + b_ * o.b_ * GaussRat(q_), a_ * o.b_ + b_ * o.a_, q_};
    }
    QuadScalar inverse() const {
        if (is_zero()) throw Error("division_by_zero", "inverse of zero");
        const GaussRat den = a_ * a_ - b_ * b_ * GaussRat(q_);
        return {a_ / den, -b_ / den, q_};
    }
    QuadScalar operator/(const QuadScalar& o) const { return *this * o.inverse(); }
    bool operator==(const QuadScalar& o) const { return a_ == o.a_ && b_ == o.b_; }

    /// Back to c * q^(k/2) when the value is a monomial.
    std::optional<ExactScalar> as_monomial() const {
        if (b_.is_zero()) return ExactScalar(a_, 0);
        if (a_.is_zero()) return ExactScalar(b_, 1);
        return std::nullopt;
    }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        const std::string bs = "(" + b_.str() + ") v";
        if (a_.is_zero()) return bs;
        return "(" + a_.str() + ") + " + bs;
    }

private:
    void fold() {
        if (b_.is_zero()) return;
        long long r = 1;
        while ((r + 1) * (r + 1) <= q_) ++r;
        if (r * r == q_) {
            a_ = a_ + b_ * GaussRat(r);
            b_ = GaussRat(0);
        }
    }

    GaussRat a_{0};
    GaussRat b_{0};
    long long q_ = 1;
};

}  // namespace llc

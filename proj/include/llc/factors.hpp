#pragma once

// Local L- and epsilon-factors and conductors of characters, supercuspidal
// pairs, Weil-Deligne representations and pairs of them.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "llc/weildeligne.hpp"

namespace llc {

/// units * mono * q^(-s * s_slope) * num / den, where num and den are
/// L-factors and the units are opaque Gauss-sum symbols g(label)^e.
struct EpsValue {
    std::map<std::string, long long> units;
    ExactScalar mono;
    HalfInt s_slope;
    LFactor num;
    LFactor den;

    EpsValue operator*(const EpsValue& o) const {
        EpsValue out = *this;
        for (const auto& [sym, e] : o.units) out.add_unit(sym, e);
        out.mono *= o.mono;
        out.s_slope += o.s_slope;
        out.num *= o.num;
        out.den *= o.den;
        return out;
    }
    EpsValue& operator*=(const EpsValue& o) { return *this = *this * o; }

    void add_unit(const std::string& sym, long long e) {
        if ((units[sym] += e) == 0) units.erase(sym);
    }

    bool is_monomial() const { return num.is_one() && den.is_one(); }

    /// Monomial parts agree as values (num/den compared as multisets).
    bool equals(const EpsValue& o, const LocalFieldContext& ctx) const {
        return units == o.units && same_value(mono, o.mono, ctx) && s_slope == o.s_slope && num.equals(o.num, ctx) &&
               den.equals(o.den, ctx);
    }

    std::string render(const LocalFieldContext& ctx) const {
        std::string out;
        for (const auto& [sym, e] : units) {
            out += "g(" + sym + ")";
            if (e != 1) out += "^" + std::to_string(e);
            out += " * ";
        }
        out += llc::render(mono, ctx);
        if (s_slope != HalfInt(0)) out += " * T^" + s_slope.str();
        if (!num.is_one()) out += " * " + num.render(ctx);
        if (!den.is_one()) out += " / (" + den.render(ctx) + ")";
        return out;
    }
};

struct CharFactors {
    LFactor l;
    EpsValue eps;
};

/// Tate's local factors of a degree-one atom chi = chi_0 |.|^x.
inline CharFactors tate_char(const Atom& chi, const LabelRegistry& reg, const LocalFieldContext& ctx) {
    const auto& l = reg.at(chi.label);
    if (!l.is_character()) throw Error("domain", "'" + chi.label + "' is not a character label");
    CharFactors out;
    const HalfInt n_psi(ctx.n_psi());
    if (l.kind == LabelKind::unramified_char) {
        const ExactScalar alpha = l.omega * ExactScalar::q_power(-chi.x);
        out.l = LFactor::single(alpha);
        out.eps.mono = alpha.pow(ctx.n_psi()) * ExactScalar::q_power(n_psi) *
                       ExactScalar::q_power(HalfInt::from_halves(-ctx.d()));
        out.eps.s_slope = n_psi;
    } else {
        const HalfInt slope = HalfInt(l.conductor) + n_psi;
        out.eps.add_unit(chi.label, 1);
        out.eps.mono = ExactScalar::q_power(-(chi.x * slope.as_integer()));
        out.eps.s_slope = slope;
    }
    return out;
}

/// L(pi x pi') for supercuspidal atoms: the product of L(chi, s) over unramified
/// chi with chi pi'^dual = pi. Those chi form a coset chi_0 * {zeta : zeta^t = 1},
/// so the product is (1 - chi_0(pi_K)^t q^(-t(x+x')) T^t)^(-1).
inline LFactor pair_l_supercuspidal(const Atom& pi, const Atom& pi2, const LabelRegistry& reg) {
    const auto& l1 = reg.at(pi.label);
    const auto& l2 = reg.at(pi2.label);
    if (l1.kind == LabelKind::unramified_char && l2.kind == LabelKind::unramified_char) {
        return LFactor::single(l1.omega * l2.omega * ExactScalar::q_power(-(pi.x + pi2.x)));
    }
    const int t = l1.torsion;
    std::optional<ExactScalar> chi0;
    if (l2.dual == pi.label) {
        chi0 = ExactScalar::one();
    } else if (l1.degree == l2.degree) {
        // base points related through a declared unramified twist
        const auto& l2v = reg.at(l2.dual);
        for (const auto& [name, chi] : reg.labels()) {
            if (chi.kind != LabelKind::unramified_char) continue;
            if (auto it = l2v.products.find(name); it != l2v.products.end() && it->second == pi.label) {
                chi0 = chi.omega;
                break;
            }
            if (auto it = l1.products.find(name); it != l1.products.end() && it->second == l2.dual) {
                chi0 = chi.omega.inverse();
                break;
            }
        }
    }
    if (!chi0) return {};
    return LFactor::single(chi0->pow(t) * ExactScalar::q_power(-((pi.x + pi2.x) * t)), t);
}

/// det(1 - q^(-s) Phi | V_N^{I_K})^(-1), block by block.
inline LFactor wd_l_factor(const WDRep& rho, const LabelRegistry& reg) {
    LFactor out;
    for (const auto& b : rho.blocks) {
        const auto& l = reg.at(b.atom.label);
        if (l.kind != LabelKind::unramified_char) continue;  // no inertia invariants
        out *= LFactor::single(l.omega * ExactScalar::q_power(-(b.atom.x + HalfInt(b.m - 1))));
    }
    return out;
}

/// L(rho1 (x) rho2) via Clebsch-Gordan on each pair of blocks.
inline LFactor wd_pair_l(const WDRep& rho1, const WDRep& rho2, const LabelRegistry& reg) {
    LFactor out;
    for (const auto& b1 : rho1.blocks)
        for (const auto& b2 : rho2.blocks) {
            const LFactor base = pair_l_supercuspidal(b1.atom, b2.atom, reg);
            if (base.is_one()) continue;
            for (const auto& cg : clebsch_gordan(b1.m, b2.m)) out *= base.shifted(HalfInt(cg.j + cg.m - 1));
        }
    return out;
}

/// L(Q(D) x Q(D')) for segments of lengths r <= r':
/// prod_{i=1..r} L(sigma x sigma', s + r + r' - 1 - i).
inline LFactor gl_segment_pair_l(const Segment& d1, const Segment& d2, const LabelRegistry& reg) {
    const Segment& shorter = d1.m <= d2.m ? d1 : d2;
    const Segment& longer = d1.m <= d2.m ? d2 : d1;
    const int r = shorter.m;
    const int r2 = longer.m;
    const LFactor base = pair_l_supercuspidal(shorter.start, longer.start, reg);
    LFactor out;
    if (base.is_one()) return out;
    for (int i = 1; i <= r; ++i) out *= base.shifted(HalfInt(r + r2 - 1 - i));
    return out;
}

/// GL-side pair L-factor from the inductive relations (symmetry, additivity
/// over segments, segment pairs).
inline LFactor gl_pair_l_inductive(const ClassData& c1, const ClassData& c2, const LabelRegistry& reg) {
    require_q_form(c1, "pair L-factor");
    require_q_form(c2, "pair L-factor");
    LFactor out;
    for (const auto& s1 : c1.segs)
        for (const auto& s2 : c2.segs) out *= gl_segment_pair_l(s1, s2, reg);
    return out;
}

/// epsilon(rho, psi, s): the Weil-group part block by block times
/// det(-Phi | V^I / V^I_N).
inline EpsValue wd_eps(const WDRep& rho, const LabelRegistry& reg, const LocalFieldContext& ctx) {
    EpsValue out;
    for (const auto& b : rho.blocks) {
        const auto& l = reg.at(b.atom.label);
        if (l.kind == LabelKind::unramified_char) {
            for (int i = 0; i < b.m; ++i) out *= tate_char(atom_twist(b.atom, HalfInt(i)), reg, ctx).eps;
            const ExactScalar beta = l.omega * ExactScalar::q_power(-b.atom.x);
            for (int i = 0; i + 1 < b.m; ++i) out.mono *= -(beta * ExactScalar::q_power(HalfInt(-i)));
        } else {
            const long long slope = l.conductor + static_cast<long long>(l.degree) * ctx.n_psi();
            for (int i = 0; i < b.m; ++i) {
                out.add_unit(b.atom.label, 1);
                out.mono *= ExactScalar::q_power(-((b.atom.x + HalfInt(i)) * slope));
                out.s_slope += HalfInt(slope);
            }
        }
    }
    return out;
}

/// Cancel num against den; the result must be a monomial.
inline EpsValue eps_normalize(const EpsValue& e, const LocalFieldContext& ctx) {
    auto num = e.num.canonical_terms(ctx);
    auto den = e.den.canonical_terms(ctx);
    std::vector<LFactorTerm> left_num;
    for (const auto& term : num) {
        auto it = std::find(den.begin(), den.end(), term);
        if (it != den.end()) den.erase(it);
        else left_num.push_back(term);
    }
    if (!left_num.empty() || !den.empty())
        throw Error("not_monomial", "epsilon not monomial with given data");
    EpsValue out = e;
    out.num = LFactor();
    out.den = LFactor();
    return out;
}

enum class ConductorMode { artin, eps_degree };

inline Rational conductor(const WDRep& rho, const LabelRegistry& reg, const LocalFieldContext& ctx,
                          ConductorMode mode) {
    if (mode == ConductorMode::eps_degree) {
        const EpsValue e = wd_eps(rho, reg, ctx);
        return e.s_slope.to_rational() - Rational(static_cast<long>(dimension(rho, reg))) * Rational(static_cast<long>(ctx.n_psi()));
    }
    Rational total(0);
    for (const auto& b : rho.blocks) {
        const auto& l = reg.at(b.atom.label);
        const int d_inertia = l.kind == LabelKind::unramified_char ? 1 : 0;
        total += static_cast<long>(b.m * l.conductor + (b.m - 1) * d_inertia);
    }
    return total;
}

/// L(Ad o rho, s) = L(rho (x) rho^dual, s) has no pole at s = 1.
inline bool adjoint_no_pole_at_one(const WDRep& rho, const LabelRegistry& reg, const LocalFieldContext& ctx) {
    const LFactor ad = wd_pair_l(rho, wd_dual(rho, reg), reg);
    return !lfactor_pole_at(ad, HalfInt(1), ctx).has_pole;
}

/// epsilon(rho1 (x) rho2) when rho1 consists of unramified-character blocks:
/// each pair of blocks is rewritten through Clebsch-Gordan as blocks of the
/// product character.
inline EpsValue wd_pair_eps(const WDRep& rho1, const WDRep& rho2, const LabelRegistry& reg,
                            const LocalFieldContext& ctx) {
    WDRep combined;
    for (const auto& b1 : rho1.blocks) {
        if (reg.at(b1.atom.label).kind != LabelKind::unramified_char)
            throw Error("domain", "pair epsilon needs unramified characters on the left");
        for (const auto& b2 : rho2.blocks) {
            const std::string label = reg.product(b2.atom.label, b1.atom.label);
            for (const auto& cg : clebsch_gordan(b1.m, b2.m))
                combined.blocks.push_back({{label, b1.atom.x + b2.atom.x + HalfInt(cg.j)}, cg.m});
        }
    }
    return wd_eps(combined, reg, ctx);
}

/// Outcome of evaluating the segment-pair epsilon relation exactly as printed.
struct PrintedEpsDiagnostic {
    EpsValue printed;          // raw value, rational part kept in num/den
    bool printed_monomial = false;
    EpsValue weil_deligne;     // epsilon of rec(Q(D)) (x) rec(Q(D'))
    bool agree = false;
};

/// The printed relation for Q(D) x Q(D') with D = [sigma, ..., sigma(r-1)],
/// D' = [sigma', ..., sigma'(r'-1)], r <= r', both built on unramified
/// characters; compared against the Weil-Deligne side.
inline PrintedEpsDiagnostic gl_segment_pair_eps_printed(const Segment& d1, const Segment& d2,
                                                        const LabelRegistry& reg, const LocalFieldContext& ctx) {
    const Segment& a = d1.m <= d2.m ? d1 : d2;
    const Segment& b = d1.m <= d2.m ? d2 : d1;
    const auto& la = reg.at(a.start.label);
    const auto& lb = reg.at(b.start.label);
    if (la.kind != LabelKind::unramified_char || lb.kind != LabelKind::unramified_char)
        throw Error("domain", "printed epsilon relation is only evaluated for unramified characters");
    const int r = a.m;
    const int r2 = b.m;
    // gamma = (sigma sigma')(pi_K)
    const ExactScalar gamma = la.omega * lb.omega * ExactScalar::q_power(-(a.start.x + b.start.x));
    auto eps_at = [&](long long shift) {
        // epsilon(sigma x sigma', s + shift) = epsilon of the character gamma q^(-shift)
        EpsValue e;
        const ExactScalar value = gamma * ExactScalar::q_power(HalfInt(-shift));
        e.mono = value.pow(ctx.n_psi()) * ExactScalar::q_power(HalfInt(ctx.n_psi())) *
                 ExactScalar::q_power(HalfInt::from_halves(-ctx.d()));
        e.s_slope = HalfInt(ctx.n_psi());
        return e;
    };
    PrintedEpsDiagnostic diag;
    for (int i = 1; i <= r; ++i) {
        for (int j = 0; j <= r + r2 - 2 * i; ++j) diag.printed *= eps_at(i + j - 1);
        for (int j = 0; j <= r + r2 - 2 * i - 1; ++j) {
            const long long c = i + j - 1;
            // L(sigma^ x sigma'^, 1 - s - c) = -u^{-1} T (1 - u^{-1} T)^{-1}, u = gamma^{-1} q^{c-1}
            const ExactScalar u_inv = gamma * ExactScalar::q_power(HalfInt(1 - c));
            EpsValue ratio;
            ratio.mono = -u_inv;
            ratio.s_slope = HalfInt(1);
            ratio.num = LFactor::single(u_inv);
            ratio.den = LFactor::single(gamma * ExactScalar::q_power(HalfInt(-c)));
            diag.printed *= ratio;
        }
    }
    const WDRep left = make_wdrep({{a.start, r}});
    const WDRep right = make_wdrep({{b.start, r2}});
    diag.weil_deligne = wd_pair_eps(left, right, reg, ctx);
    try {
        const EpsValue normalized = eps_normalize(diag.printed, ctx);
        diag.printed_monomial = true;
        diag.agree = normalized.equals(diag.weil_deligne, ctx);
    } catch (const Error&) {
        diag.printed_monomial = false;
        diag.agree = false;
    }
    return diag;
}

}  // namespace llc

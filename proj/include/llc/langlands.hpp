#pragma once

// The bijection rec between classification data and Weil-Deligne
// representations, the unramified (Satake) case, and the dictionary of
// properties on both sides.

#include <string>
#include <vector>

#include "llc/factors.hpp"

namespace llc {

/// rec(Q(D_1, ..., D_r)) = sum rec(start_i) (x) Sp(m_i).
inline WDRep rec_forward(const ClassData& c) {
    require_q_form(c, "rec");
    WDRep out;
    for (const auto& s : c.segs) out.blocks.push_back({s.start, s.m});
    return out;
}

inline ClassData rec_inverse(const WDRep& rho) {
    ClassData out{Form::Q, {}};
    for (const auto& b : rho.blocks) out.segs.push_back({b.atom, b.m});
    out.segs = standard_order(out.segs);
    return out;
}

/// Unramified data from Satake parameters. Each value is written as
/// alpha * q^(-x) with alpha the Satake value of a registry label.
inline ClassData satake_to_rep(const std::vector<ExactScalar>& values, const LabelRegistry& reg,
                               const LocalFieldContext& ctx) {
    if (values.empty()) throw Error("domain", "Satake parameter needs at least one value");
    ClassData out{Form::Q, {}};
    for (const auto& v : values) {
        if (v.is_zero()) throw Error("domain", "Satake value must be nonzero");
        bool found = false;
        for (const auto& [name, l] : reg.labels()) {
            if (l.kind != LabelKind::unramified_char) continue;
            // v / alpha = q^(-x) iff its canonical form is exactly 1 * q^(-2x/2)
            const ExactScalar can = canonical(v / l.omega, ctx);
            if (can.c == GaussRat(1)) {
                out.segs.push_back({{name, HalfInt::from_halves(-can.k)}, 1});
                found = true;
            }
            if (found) break;
        }
        if (!found)
            throw Error("registry_incomplete",
                        "label registry incomplete: no unramified label for Satake value " + render(v, ctx));
    }
    out.segs = standard_order(out.segs);
    return out;
}

/// Satake values chi_i(pi_K) of unramified data, in canonical order.
inline std::vector<ExactScalar> satake_from_rep(const ClassData& c, const LabelRegistry& reg,
                                                const LocalFieldContext& ctx) {
    if (!gl_predicates(c, reg).unramified) throw Error("not_unramified", "Satake parameter needs unramified data");
    std::vector<ExactScalar> out;
    for (const auto& s : c.segs) {
        out.push_back(canonical(reg.at(s.start.label).omega * ExactScalar::q_power(-s.start.x), ctx));
    }
    std::sort(out.begin(), out.end(), [](const ExactScalar& a, const ExactScalar& b) {
        return canonical_order(a, b) == std::strong_ordering::less;
    });
    return out;
}

/// Twist by a character atom: label product and |.|^x shift.
inline ClassData twist_class(const ClassData& c, const Atom& chi, const LabelRegistry& reg) {
    ClassData out = c;
    for (auto& s : out.segs) s.start = {reg.product(s.start.label, chi.label), s.start.x + chi.x};
    return out;
}

/// Determinant of a Weil-Deligne representation as central-character data:
/// det(rho_0 (x) |.|^x (x) Sp(m)) = omega^m |.|^(n (m x + m(m-1)/2)).
inline CentralCharData wd_determinant(const WDRep& rho, const LabelRegistry& reg) {
    CentralCharData out;
    for (const auto& b : rho.blocks) {
        const auto& l = reg.at(b.atom.label);
        for (int i = 0; i < b.m; ++i) out.unit_classes.push_back(l.unit_class);
        const HalfInt exponent = (b.atom.x * b.m + HalfInt(static_cast<long long>(b.m) * (b.m - 1) / 2)) * l.degree;
        out.value_at_uniformizer *= l.omega.pow(b.m) * ExactScalar::q_power(-exponent);
    }
    std::sort(out.unit_classes.begin(), out.unit_classes.end());
    return out;
}

struct RecAxiomReport {
    bool twist = false;         // rec(pi chi) = rec(pi) (x) rec(chi)
    bool determinant = false;   // det o rec(pi) = rec(omega_pi)
    bool contragredient = false;  // rec(pi^dual) = rec(pi)^dual
    std::vector<std::string> failures;

    bool all() const { return twist && determinant && contragredient; }
};

inline RecAxiomReport verify_rec_axioms(const ClassData& c, const Atom& chi, const LabelRegistry& reg,
                                        const LocalFieldContext& ctx) {
    require_q_form(c, "rec axioms");
    RecAxiomReport rep;
    const WDRep rho = rec_forward(c);
    try {
        rep.twist = rec_forward(twist_class(c, chi, reg)) == wd_tensor_char(rho, chi, reg);
    } catch (const Error& e) {
        rep.failures.push_back(std::string("twist: ") + e.what());
    }
    if (!rep.twist && rep.failures.empty()) rep.failures.emplace_back("twist: data differ");
    rep.determinant = wd_determinant(rho, reg).equals(central_character(c, reg), ctx);
    if (!rep.determinant) rep.failures.emplace_back("determinant: data differ");
    rep.contragredient = rec_forward(dualize(c, reg)) == wd_dual(rho, reg);
    if (!rep.contragredient) rep.failures.emplace_back("contragredient: data differ");
    return rep;
}

struct DictionaryRow {
    std::string property;
    bool gl_side = false;
    bool wd_side = false;
    bool agree() const { return gl_side == wd_side; }
};

inline std::vector<DictionaryRow> dictionary_report(const ClassData& c, const LabelRegistry& reg,
                                                    const LocalFieldContext& ctx) {
    const GlPredicates gl = gl_predicates(c, reg);
    const WDRep rho = rec_forward(c);
    const WDPredicates wd = wd_predicates(rho, reg, ctx);
    return {
        {"supercuspidal/irreducible", gl.supercuspidal, wd.irreducible},
        {"essentially-square-integrable/indecomposable", gl.ess_square_integrable, wd.indecomposable},
        {"tempered/bounded-frobenius", gl.tempered, wd.bounded_frobenius},
        {"generic/adjoint-no-pole-at-1", gl.generic, adjoint_no_pole_at_one(rho, reg, ctx)},
        {"unramified/unramified", gl.unramified, wd.unramified},
        {"iwahori-spherical/ik-spherical", gl.iwahori_spherical, wd.ik_spherical},
    };
}

}  // namespace llc

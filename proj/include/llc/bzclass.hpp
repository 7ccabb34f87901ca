#pragma once

// Supercuspidal atoms, Bernstein-Zelevinsky segments and the Q/Z classification
// data of irreducible admissible representations of GL_n.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "llc/qexact.hpp"

namespace llc {

enum class LabelKind { symbolic, unramified_char, ramified_char };

inline std::string to_string(LabelKind k) {
    switch (k) {
        case LabelKind::symbolic: return "symbolic";
        case LabelKind::unramified_char: return "unramified-char";
        case LabelKind::ramified_char: return "ramified-char";
    }
    return "?";
}

inline LabelKind parse_label_kind(const std::string& s) {
    if (s == "symbolic") return LabelKind::symbolic;
    if (s == "unramified-char") return LabelKind::unramified_char;
    if (s == "ramified-char") return LabelKind::ramified_char;
    throw ParseError("unknown label kind '" + s + "'");
}

/// An inertial class of supercuspidals, closed under |det|^x twists.
/// `omega` is the central character at the uniformizer of the unitary base
/// point; for unramified characters it is the Satake value.
struct InertialLabel {
    std::string name;
    LabelKind kind = LabelKind::symbolic;
    int degree = 1;
    int torsion = 1;
    int conductor = 0;
    std::string dual;
    ExactScalar omega;
    std::string unit_class;
    /// character label -> label of (this (x) character)
    std::map<std::string, std::string> products;

    bool is_character() const { return kind != LabelKind::symbolic; }
};

/// Immutable set of labels with a closed dual involution.
class LabelRegistry {
public:
    static LabelRegistry load(std::vector<InertialLabel> labels) {
        LabelRegistry reg;
        for (auto& l : labels) {
            if (l.name.empty()) throw Error("invalid_registry", "label with empty name");
            if (reg.labels_.count(l.name) != 0) throw Error("invalid_registry", "duplicate label '" + l.name + "'");
            reg.labels_.emplace(l.name, std::move(l));
        }
        reg.validate();
        return reg;
    }

    const InertialLabel& at(const std::string& name) const {
        auto it = labels_.find(name);
        if (it == labels_.end()) throw Error("unknown_label", "label '" + name + "' not in registry");
        return it->second;
    }
    bool contains(const std::string& name) const { return labels_.count(name) != 0; }
    const std::map<std::string, InertialLabel>& labels() const { return labels_; }

    /// Label of the trivial character, if the registry declares one.
    std::optional<std::string> trivial_character() const {
        for (const auto& [name, l] : labels_)
            if (l.kind == LabelKind::unramified_char && l.omega == ExactScalar::one()) return name;
        return std::nullopt;
    }

    bool is_trivial_character(const std::string& name) const {
        const auto& l = at(name);
        return l.kind == LabelKind::unramified_char && l.omega == ExactScalar::one();
    }

    /// Label of (label (x) chi) for a character label chi.
    std::string product(const std::string& label, const std::string& chi) const {
        const auto& c = at(chi);
        if (!c.is_character()) throw Error("domain", "'" + chi + "' is not a character label");
        if (is_trivial_character(chi)) return label;
        const auto& l = at(label);
        if (auto it = l.products.find(chi); it != l.products.end()) return it->second;
        if (l.is_character() && c.is_character()) {
            if (auto it = c.products.find(label); it != c.products.end()) return it->second;
        }
        if (l.kind == LabelKind::unramified_char && c.kind == LabelKind::unramified_char) {
            const ExactScalar target = l.omega * c.omega;
            for (const auto& [name, cand] : labels_)
                if (cand.kind == LabelKind::unramified_char && cand.omega == target) return name;
        }
        throw Error("registry_incomplete",
                    "label registry incomplete: no product label for '" + label + "' x '" + chi + "'");
    }

private:
    void validate() const {
        std::vector<const InertialLabel*> unram;
        for (const auto& [name, l] : labels_) {
            if (l.degree < 1) throw Error("invalid_registry", "label '" + name + "': degree must be positive");
            if (l.torsion < 1 || l.degree % l.torsion != 0)
                throw Error("invalid_registry", "label '" + name + "': torsion must divide degree");
            if (l.conductor < 0) throw Error("invalid_registry", "label '" + name + "': negative conductor");
            if (l.is_character() && (l.degree != 1 || l.torsion != 1))
                throw Error("invalid_registry", "character label '" + name + "' must have degree 1, torsion 1");
            if (l.kind == LabelKind::unramified_char && l.conductor != 0)
                throw Error("invalid_registry", "unramified label '" + name + "' must have conductor 0");
            if (l.kind == LabelKind::ramified_char && l.conductor < 1)
                throw Error("invalid_registry", "ramified label '" + name + "' must have conductor >= 1");
            // Unitary base point, decided without q: k = 0 and |c| = 1.
            if (l.omega.k != 0 || l.omega.c.norm() != 1)
                throw Error("invalid_registry", "label '" + name + "': base point is not unitary");
            auto dit = labels_.find(l.dual);
            if (dit == labels_.end())
                throw Error("invalid_registry", "label '" + name + "': unknown dual '" + l.dual + "'");
            const InertialLabel& d = dit->second;
            if (d.dual != name)
                throw Error("invalid_registry", "dual involution violated at '" + name + "'");
            if (d.degree != l.degree || d.torsion != l.torsion || d.conductor != l.conductor || d.kind != l.kind)
                throw Error("invalid_registry", "label '" + name + "' and its dual disagree on invariants");
            if (!(d.omega * l.omega == ExactScalar::one()))
                throw Error("invalid_registry", "label '" + name + "': dual central character is not the inverse");
            for (const auto& [chi, res] : l.products) {
                if (!contains(chi) || !at(chi).is_character())
                    throw Error("invalid_registry", "label '" + name + "': product with non-character '" + chi + "'");
                if (!contains(res))
                    throw Error("invalid_registry", "label '" + name + "': unknown product label '" + res + "'");
                if (at(res).degree != l.degree)
                    throw Error("invalid_registry", "label '" + name + "': product changes the degree");
            }
            if (l.kind == LabelKind::unramified_char) unram.push_back(&l);
        }
        // Distinct unramified characters must not be |.|^x twists of each other.
        for (std::size_t i = 0; i < unram.size(); ++i)
            for (std::size_t j = i + 1; j < unram.size(); ++j)
                if (unram[i]->omega == unram[j]->omega)
                    throw Error("invalid_registry", "unramified labels '" + unram[i]->name + "' and '" +
                                                        unram[j]->name + "' share a Satake value");
    }

    std::map<std::string, InertialLabel> labels_;
};

/// pi_0 (x) |det|^x for the base point pi_0 of `label`.
struct Atom {
    std::string label;
    HalfInt x;

    auto operator<=>(const Atom&) const = default;
    bool operator==(const Atom&) const = default;
};

inline Atom atom_twist(const Atom& a, HalfInt y) { return {a.label, a.x + y}; }

/// Delta(start, m) = [start, start(1), ..., start(m-1)].
struct Segment {
    Atom start;
    int m = 1;

    auto operator<=>(const Segment&) const = default;
    bool operator==(const Segment&) const = default;

    HalfInt end() const { return start.x + HalfInt(m - 1); }
    /// Exponent of the central twist: start.x + (m-1)/2.
    HalfInt center() const { return start.x + HalfInt::from_halves(m - 1); }
};

inline Segment make_segment(Atom start, int m) {
    if (m < 1) throw Error("domain", "segment length must be positive");
    return {std::move(start), m};
}

enum class Form { Q, Z };

inline std::string to_string(Form f) { return f == Form::Q ? "Q" : "Z"; }

/// Q(segs) or Z(segs); the segments form a multiset.
struct ClassData {
    Form form = Form::Q;
    std::vector<Segment> segs;

    std::vector<Segment> sorted() const {
        auto s = segs;
        std::sort(s.begin(), s.end());
        return s;
    }
    bool operator==(const ClassData& o) const { return form == o.form && sorted() == o.sorted(); }
};

inline ClassData make_class(Form form, std::vector<Segment> segs) {
    if (segs.empty()) throw Error("domain", "classification data needs at least one segment");
    for (const auto& s : segs)
        if (s.m < 1) throw Error("domain", "segment length must be positive");
    return {form, std::move(segs)};
}

inline int degree(const Segment& s, const LabelRegistry& reg) { return reg.at(s.start.label).degree * s.m; }

inline int degree(const ClassData& c, const LabelRegistry& reg) {
    int n = 0;
    for (const auto& s : c.segs) n += degree(s, reg);
    return n;
}

inline Atom dualize(const Atom& a, const LabelRegistry& reg) { return {reg.at(a.label).dual, -a.x}; }

inline Segment dualize(const Segment& s, const LabelRegistry& reg) {
    return {atom_twist(dualize(s.start, reg), HalfInt(1 - s.m)), s.m};
}

inline ClassData dualize(const ClassData& c, const LabelRegistry& reg) {
    ClassData out{c.form, {}};
    out.segs.reserve(c.segs.size());
    for (const auto& s : c.segs) out.segs.push_back(dualize(s, reg));
    return out;
}

inline bool atom_leq(const Atom& a, const Atom& b) {
    if (a.label != b.label) return false;
    const HalfInt diff = b.x - a.x;
    return diff.is_integer() && diff >= HalfInt(0);
}

inline bool linked(const Segment& d1, const Segment& d2) {
    if (d1.start.label != d2.start.label) return false;
    if (!(d2.start.x - d1.start.x).is_integer()) return false;
    const HalfInt a1 = d1.start.x, b1 = d1.end();
    const HalfInt a2 = d2.start.x, b2 = d2.end();
    const bool one_in_two = a2 <= a1 && b1 <= b2;
    const bool two_in_one = a1 <= a2 && b2 <= b1;
    if (one_in_two || two_in_one) return false;
    // union of integer intervals is an interval iff they overlap or touch
    return a2 <= b1 + HalfInt(1) && a1 <= b2 + HalfInt(1);
}

inline bool precedes(const Segment& d1, const Segment& d2) {
    return linked(d1, d2) && d1.start.x < d2.start.x;
}

/// Order with no earlier segment preceding a later one: label name, then
/// descending start twist, then descending length.
inline std::vector<Segment> standard_order(std::vector<Segment> segs) {
    std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) {
        if (a.start.label != b.start.label) return a.start.label < b.start.label;
        if (a.start.x != b.start.x) return a.start.x > b.start.x;
        return a.m > b.m;
    });
    return segs;
}

/// The involution t on the form tag (Q <-> Z), segments unchanged.
inline ClassData involution_t(const ClassData& c) {
    return {c.form == Form::Q ? Form::Z : Form::Q, c.segs};
}

/// Rewrite in Q-form. Z(Delta) for a single segment is Q of its singletons;
/// longer Z-forms are not resolvable from the classification alone.
inline ClassData resolve_to_q(const ClassData& c) {
    if (c.form == Form::Q) return c;
    if (c.segs.size() != 1)
        throw Error("not_computable",
                    "not computable from the available data: Z-form with more than one segment");
    const Segment& s = c.segs.front();
    ClassData out{Form::Q, {}};
    for (int j = 0; j < s.m; ++j) out.segs.push_back({atom_twist(s.start, HalfInt(j)), 1});
    out.segs = standard_order(out.segs);
    return out;
}

inline std::vector<Atom> supercuspidal_support(const ClassData& c) {
    std::vector<Atom> out;
    for (const auto& s : c.segs)
        for (int j = 0; j < s.m; ++j) out.push_back(atom_twist(s.start, HalfInt(j)));
    std::sort(out.begin(), out.end());
    return out;
}

struct CentralCharData {
    std::vector<std::string> unit_classes;  // sorted multiset
    ExactScalar value_at_uniformizer;

    bool equals(const CentralCharData& o, const LocalFieldContext& ctx) const {
        return unit_classes == o.unit_classes && same_value(value_at_uniformizer, o.value_at_uniformizer, ctx);
    }
};

/// Product over the supercuspidal support of omega(pi_0) * q^(-n x).
inline CentralCharData central_character(const ClassData& c, const LabelRegistry& reg) {
    CentralCharData out;
    for (const Atom& a : supercuspidal_support(c)) {
        const auto& l = reg.at(a.label);
        out.unit_classes.push_back(l.unit_class);
        out.value_at_uniformizer *= l.omega * ExactScalar::q_power(-(a.x * l.degree));
    }
    std::sort(out.unit_classes.begin(), out.unit_classes.end());
    return out;
}

struct GlPredicates {
    bool supercuspidal = false;
    bool ess_square_integrable = false;
    bool square_integrable = false;
    bool tempered = false;
    bool generic = false;
    bool unramified = false;
    bool iwahori_spherical = false;
};

inline void require_q_form(const ClassData& c, const char* what) {
    if (c.form != Form::Q)
        throw Error("z_form", std::string(what) + " needs Q-form data; resolve the Z-form first");
}

inline bool product_irreducible(const std::vector<Segment>& segs) {
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j)
            if (linked(segs[i], segs[j])) return false;
    return true;
}

inline GlPredicates gl_predicates(const ClassData& c, const LabelRegistry& reg) {
    require_q_form(c, "predicates");
    GlPredicates p;
    const bool single = c.segs.size() == 1;
    p.ess_square_integrable = single;
    p.supercuspidal = single && c.segs.front().m == 1;
    p.square_integrable = single && c.segs.front().center() == HalfInt(0);
    p.tempered = std::all_of(c.segs.begin(), c.segs.end(), [](const Segment& s) { return s.center() == HalfInt(0); });
    p.generic = product_irreducible(c.segs);
    auto unram_atom = [&](const Atom& a) { return reg.at(a.label).kind == LabelKind::unramified_char; };
    p.unramified = std::all_of(c.segs.begin(), c.segs.end(),
                               [&](const Segment& s) { return s.m == 1 && unram_atom(s.start); });
    const auto support = supercuspidal_support(c);
    p.iwahori_spherical = std::all_of(support.begin(), support.end(), unram_atom);
    return p;
}

struct LanglandsPiece {
    ClassData tempered;
    HalfInt exponent;
};

/// Group segments by center exponent, decreasing; each group is untwisted to
/// tempered data.
inline std::vector<LanglandsPiece> langlands_quotient_data(const ClassData& c) {
    require_q_form(c, "Langlands quotient data");
    std::map<HalfInt, std::vector<Segment>, std::greater<>> groups;
    for (const auto& s : c.segs) {
        const HalfInt y = s.center();
        groups[y].push_back({atom_twist(s.start, -y), s.m});
    }
    std::vector<LanglandsPiece> out;
    for (auto& [y, segs] : groups) out.push_back({ClassData{Form::Q, standard_order(segs)}, y});
    return out;
}

}  // namespace llc

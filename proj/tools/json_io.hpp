#pragma once

// JSON conversions for the command-line driver. Every reader throws
// llc::ParseError on malformed documents.

#include <string>
#include <vector>

#include <json.hpp>

#include "llc/langlands.hpp"

namespace llc::io {

using nlohmann::json;

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline long long read_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<long long>();
}

inline std::string read_string(const json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

/// Integer or decimal string, for values beyond 64 bits.
inline Integer read_integer(const json& j, const char* what) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        Integer out;
        if (out.set_str(j.get<std::string>(), 10) != 0) throw ParseError(std::string(what) + " is not an integer");
        return out;
    }
    throw ParseError(std::string(what) + " must be an integer");
}

/// [num, den] or a "num/den" string.
inline Rational read_rational(const json& j, const char* what) {
    if (j.is_array() && j.size() == 2) {
        const Integer den = read_integer(j[1], what);
        if (den == 0) throw ParseError(std::string(what) + " has zero denominator");
        Rational r(read_integer(j[0], what), den);
        r.canonicalize();
        return r;
    }
    if (j.is_number_integer()) return Rational(read_integer(j, what));
    if (j.is_string()) {
        Rational r;
        if (r.set_str(j.get<std::string>(), 10) != 0 || r.get_den() == 0)
            throw ParseError(std::string(what) + " is not a rational");
        r.canonicalize();
        return r;
    }
    throw ParseError(std::string(what) + " must be [num, den]");
}

inline json write_rational(const Rational& r) {
    auto small = [](const Integer& z) -> json {
        if (z.fits_slong_p()) return z.get_si();
        return z.get_str();
    };
    return json::array({small(r.get_num()), small(r.get_den())});
}

/// Half-integer as [num, 2] (a plain integer is accepted as well).
inline HalfInt read_halfint(const json& j, const char* what) {
    if (j.is_number_integer()) return HalfInt(j.get<long long>());
    if (!j.is_array() || j.size() != 2) throw ParseError(std::string(what) + " must be [num, 2]");
    return HalfInt::from_fraction(read_int(j[0], what), read_int(j[1], what));
}

inline json write_halfint(HalfInt h) { return json::array({h.halves(), 2}); }

inline ExactScalar read_scalar(const json& j) {
    if (!j.is_object()) throw ParseError("scalar must be an object {re, im, k}");
    ExactScalar out;
    out.c.re = read_rational(field(j, "re"), "re");
    out.c.im = j.contains("im") ? read_rational(j.at("im"), "im") : Rational(0);
    out.k = j.contains("k") ? read_int(j.at("k"), "k") : 0;
    return out;
}

inline json write_scalar(const ExactScalar& x, const LocalFieldContext& ctx) {
    const ExactScalar c = canonical(x, ctx);
    return {{"re", write_rational(c.c.re)}, {"im", write_rational(c.c.im)}, {"k", c.k}, {"text", render(c)}};
}

inline InertialLabel read_label(const json& j) {
    InertialLabel l;
    l.name = read_string(field(j, "name"), "name");
    l.kind = parse_label_kind(read_string(field(j, "kind"), "kind"));
    l.degree = static_cast<int>(read_int(field(j, "degree"), "degree"));
    l.torsion = j.contains("torsion") ? static_cast<int>(read_int(j.at("torsion"), "torsion")) : 1;
    l.conductor = j.contains("conductor") ? static_cast<int>(read_int(j.at("conductor"), "conductor")) : 0;
    l.dual = j.contains("dual") ? read_string(j.at("dual"), "dual") : l.name;
    l.omega = j.contains("omegaAtUniformizer") ? read_scalar(j.at("omegaAtUniformizer")) : ExactScalar::one();
    l.unit_class = j.contains("unitClass") ? read_string(j.at("unitClass"), "unitClass") : l.name;
    if (j.contains("products")) {
        const json& p = j.at("products");
        if (!p.is_object()) throw ParseError("products must be an object");
        for (const auto& [chi, target] : p.items()) l.products[chi] = read_string(target, "product label");
    }
    return l;
}

inline LabelRegistry read_registry(const json& j) {
    if (!j.is_array()) throw ParseError("registry must be an array of labels");
    std::vector<InertialLabel> labels;
    for (const auto& e : j) labels.push_back(read_label(e));
    return LabelRegistry::load(std::move(labels));
}

/// The registry used when none is given: the trivial character only.
inline LabelRegistry default_registry() {
    InertialLabel one;
    one.name = "1";
    one.kind = LabelKind::unramified_char;
    one.dual = "1";
    one.unit_class = "1";
    return LabelRegistry::load({one});
}

inline Atom read_atom(const json& j) {
    return {read_string(field(j, "label"), "label"), j.contains("x") ? read_halfint(j.at("x"), "x") : HalfInt(0)};
}

inline json write_atom(const Atom& a) { return {{"label", a.label}, {"x", write_halfint(a.x)}}; }

inline ClassData read_class(const json& j) {
    ClassData c;
    const std::string form = read_string(field(j, "form"), "form");
    if (form == "Q") {
        c.form = Form::Q;
    } else if (form == "Z") {
        c.form = Form::Z;
    } else {
        throw ParseError("form must be \"Q\" or \"Z\"");
    }
    const json& segs = field(j, "segments");
    if (!segs.is_array()) throw ParseError("segments must be an array");
    for (const auto& s : segs) {
        const int m = s.contains("m") ? static_cast<int>(read_int(s.at("m"), "m")) : 1;
        if (m < 1) throw ParseError("segment length m must be positive");
        c.segs.push_back({read_atom(s), m});
    }
    return c;
}

inline json write_segments(const std::vector<Segment>& segs) {
    json out = json::array();
    for (const auto& s : segs) {
        json e = write_atom(s.start);
        e["m"] = s.m;
        out.push_back(e);
    }
    return out;
}

inline json write_class(const ClassData& c) {
    return {{"form", to_string(c.form)}, {"segments", write_segments(standard_order(c.segs))}};
}

inline WDRep read_wdrep(const json& j) {
    const json& blocks = field(j, "blocks");
    if (!blocks.is_array()) throw ParseError("blocks must be an array");
    WDRep rho;
    for (const auto& b : blocks) {
        const int m = b.contains("m") ? static_cast<int>(read_int(b.at("m"), "m")) : 1;
        if (m < 1) throw ParseError("block length m must be positive");
        rho.blocks.push_back({read_atom(b), m});
    }
    return rho;
}

inline json write_wdrep(const WDRep& rho) {
    std::vector<Segment> segs;
    for (const auto& b : rho.blocks) segs.push_back({b.atom, b.m});
    std::sort(segs.begin(), segs.end());
    return {{"blocks", write_segments(segs)}};
}

/// Either classification data (mapped through rec) or a WD representation.
inline WDRep read_rep(const json& j) {
    if (j.is_object() && j.contains("blocks")) return read_wdrep(j);
    if (j.is_object() && j.contains("segments")) return rec_forward(read_class(j));
    throw ParseError("payload must be classification data {form, segments} or a WD representation {blocks}");
}

inline json write_lfactor(const LFactor& l, const LocalFieldContext& ctx) {
    json terms = json::array();
    for (const auto& t : l.canonical_terms(ctx)) terms.push_back({{"a", write_scalar(t.a, ctx)}, {"t", t.t}});
    return {{"terms", terms}, {"text", l.render(ctx)}};
}

inline json write_eps(const EpsValue& e, const LocalFieldContext& ctx) {
    json units = json::array();
    for (const auto& [sym, exp] : e.units) units.push_back({{"sym", sym}, {"exp", exp}});
    return {{"units", units},
            {"mono", write_scalar(e.mono, ctx)},
            {"sSlope", write_halfint(e.s_slope)},
            {"num", write_lfactor(e.num, ctx)},
            {"den", write_lfactor(e.den, ctx)},
            {"text", e.render(ctx)}};
}

}  // namespace llc::io

// Command-line driver: one subcommand per computation, JSON in and out.
// Exit status 0 on success, 1 on a library error, 2 on malformed input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "llc/cyclic_algebra.hpp"
#include "llc/dieudonne.hpp"
#include "llc/witt.hpp"

namespace {

using nlohmann::json;
using namespace llc;
using namespace llc::io;

struct Options {
    std::string registry;
    long long p = 2;
    long long f = 1;
    long long d = 0;
    long long n_psi = 0;
    int precision = 6;
    std::string input;
    std::string output = "-";
    // witt
    std::string ring = "Fp";
    int length = 0;
    // skewfield
    int r = 1;
    int s = 2;
    // dieudonne
    int rank = 1;
    int etale_height = 0;
    int residue_degree = 1;
};

json read_document(const std::string& path) {
    std::stringstream buf;
    if (path.empty() || path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot read '" + path + "'");
        buf << in.rdbuf();
    }
    try {
        return json::parse(buf.str());
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

LabelRegistry load_registry(const Options& o) {
    if (o.registry.empty()) return default_registry();
    return read_registry(read_document(o.registry));
}

// ---- witt -----------------------------------------------------------------

template <class R>
struct CoordIO;

template <>
struct CoordIO<RationalField> {
    static Rational read(const RationalField&, const json& j) { return read_rational(j, "coordinate"); }
    static json write(const Rational& v) { return write_rational(v); }
};

template <>
struct CoordIO<IntegerRing> {
    static Integer read(const IntegerRing&, const json& j) { return read_integer(j, "coordinate"); }
    static json write(const Integer& v) {
        if (v.fits_slong_p()) return v.get_si();
        return v.get_str();
    }
};

template <>
struct CoordIO<IntegersMod> {
    static long long read(const IntegersMod& r, const json& j) { return r.from_integer(read_integer(j, "coordinate")); }
    static json write(long long v) { return v; }
};

template <>
struct CoordIO<FiniteField> {
    static FiniteField::value_type read(const FiniteField& k, const json& j) {
        if (j.is_number_integer()) return k.from_integer(read_integer(j, "coordinate"));
        if (!j.is_array()) throw ParseError("F_q coordinate must be a list of F_p digits");
        std::vector<long long> coords;
        for (const auto& c : j) coords.push_back(read_int(c, "F_q digit"));
        if (static_cast<int>(coords.size()) > k.degree()) throw ParseError("F_q coordinate has too many digits");
        return k.element(coords);
    }
    static json write(const FiniteField::value_type& v) { return v; }
};

template <class R>
json run_witt_in(const R& ring, const Options& o, const json& doc) {
    using IO = CoordIO<R>;
    auto read_vec = [&](const char* key) {
        const json& arr = field(doc, key);
        if (!arr.is_array() || arr.empty()) throw ParseError(std::string(key) + " must be a non-empty list");
        std::vector<typename R::value_type> v;
        for (const auto& c : arr) v.push_back(IO::read(ring, c));
        return v;
    };
    auto write_vec = [&](const std::vector<typename R::value_type>& v) {
        json out = json::array();
        for (const auto& c : v) out.push_back(IO::write(c));
        return out;
    };
    const std::string op = read_string(field(doc, "op"), "op");
    const auto x = read_vec("x");
    const int length = o.length > 0 ? o.length : static_cast<int>(x.size());
    if (static_cast<int>(x.size()) != length) throw Error("domain", "x must have --length coordinates");
    const WittRing<R> w(ring, o.p, length);
    json out = {{"ring", ring.name()}, {"p", o.p}, {"length", length}, {"op", op}};
    if (op == "add" || op == "sub" || op == "mul") {
        const auto y = read_vec("y");
        if (static_cast<int>(y.size()) != length) throw Error("domain", "y must have --length coordinates");
        out["result"] = write_vec(op == "add" ? w.add(x, y) : op == "sub" ? w.sub(x, y) : w.mul(x, y));
    } else if (op == "neg") {
        out["result"] = write_vec(w.neg(x));
    } else if (op == "frobenius") {
        out["result"] = write_vec(w.frobenius(x));
    } else if (op == "verschiebung") {
        out["result"] = write_vec(w.verschiebung(x));
    } else if (op == "ghost") {
        out["result"] = write_vec(w.ghost(x));
    } else {
        throw ParseError("unknown witt op '" + op + "'");
    }
    if constexpr (std::is_same_v<R, FiniteField>) out["modulus"] = ring.modulus();
    return out;
}

json run_witt(const Options& o, const json& doc) {
    const std::string& ring = o.ring;
    if (ring == "Q") return run_witt_in(RationalField{}, o, doc);
    if (ring == "Z") return run_witt_in(IntegerRing{}, o, doc);
    if (ring == "Fp") return run_witt_in(FiniteField(o.p, 1), o, doc);
    if (ring.rfind("Fq:", 0) == 0) {
        int deg = 0;
        try {
            deg = std::stoi(ring.substr(3));
        } catch (const std::exception&) {
            throw ParseError("--ring Fq:deg needs an integer degree");
        }
        return run_witt_in(FiniteField(o.p, deg), o, doc);
    }
    if (ring.rfind("Z/", 0) == 0) {
        long long m = 0;
        try {
            m = std::stoll(ring.substr(2));
        } catch (const std::exception&) {
            throw ParseError("--ring Z/m needs an integer modulus");
        }
        return run_witt_in(IntegersMod(m), o, doc);
    }
    throw ParseError("--ring must be one of Q, Z, Fp, Fq:deg, Z/m");
}

// ---- skewfield / dieudonne ------------------------------------------------

json write_local(const UnramifiedContext& ctx, const LocalElement& x) {
    if (x.is_zero()) return {{"zero", true}, {"abs", x.val}};
    return {{"val", x.val}, {"rel", x.rel}, {"unit", ctx.ring().truncate(x.unit, x.rel)}};
}

json write_local_matrix(const UnramifiedContext& ctx, const LocalMatrix& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& e : row) r.push_back(write_local(ctx, e));
        out.push_back(r);
    }
    return out;
}

json write_ring_matrix(const RingMatrix& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& e : row) r.push_back(e);
        out.push_back(r);
    }
    return out;
}

/// Carrier coefficient: a list of integers (coordinates in 1, X, ...) or
/// {"val": v, "unit": [...]} for p^v times that element.
LocalElement read_local(const UnramifiedContext& ctx, const json& j) {
    long long val = 0;
    const json* coords = &j;
    if (j.is_object()) {
        val = j.contains("val") ? read_int(j.at("val"), "val") : 0;
        coords = &field(j, "unit");
    }
    if (coords->is_number_integer()) {
        return ctx.mul(ctx.p_power(val), ctx.from_integer(coords->get<long long>()));
    }
    if (!coords->is_array()) throw ParseError("carrier element must be a list of integers");
    std::vector<long long> c;
    for (const auto& v : *coords) c.push_back(read_int(v, "carrier coordinate"));
    if (static_cast<int>(c.size()) > ctx.ring().degree()) throw ParseError("carrier element has too many coordinates");
    return ctx.mul(ctx.p_power(val), ctx.from_ring(ctx.ring().element(c)));
}

CyclicAlgebra::Element read_algebra_element(const CyclicAlgebra& d, const json& j) {
    if (!j.is_array() || static_cast<int>(j.size()) != d.s())
        throw ParseError("algebra element must be a list of s coefficients");
    std::vector<LocalElement> coeffs;
    for (const auto& c : j) coeffs.push_back(read_local(d.context(), c));
    return d.make(coeffs);
}

json write_algebra_element(const CyclicAlgebra& d, const CyclicAlgebra::Element& x) {
    json out = json::array();
    for (const auto& c : x) out.push_back(write_local(d.context(), c));
    return out;
}

json run_skewfield(const Options& o, const json* doc) {
    const UnramifiedContext ctx(o.p, static_cast<int>(o.f), o.s, o.precision);
    const CyclicAlgebra d(ctx, o.r);
    json out = {{"p", o.p}, {"f", o.f}, {"r", o.r}, {"s", o.s}, {"precision", o.precision}};
    auto norm_json = [&](const CyclicAlgebra::Element& x) {
        const auto n = d.reduced_norm(x);
        return json{{"nrd", write_local(ctx, n.nrd)}, {"vD", to_string(n.v_d)}};
    };
    const std::string op = doc != nullptr ? read_string(field(*doc, "op"), "op") : "invariant";
    out["op"] = op;
    if (op == "invariant") {
        out["invariant"] = to_string(brauer_invariant(ctx, o.r));
        out["embedPi"] = write_local_matrix(ctx, d.embed(d.pi()));
        out["normPi"] = norm_json(d.pi());
        out["piToS"] = write_algebra_element(d, d.pow(d.pi(), o.s));
    } else if (op == "mul") {
        const auto x = read_algebra_element(d, field(*doc, "x"));
        const auto y = read_algebra_element(d, field(*doc, "y"));
        out["result"] = write_algebra_element(d, d.mul(x, y));
    } else if (op == "embed") {
        const auto x = read_algebra_element(d, field(*doc, "x"));
        const LocalMatrix m = d.embed(x);
        out["matrix"] = write_local_matrix(ctx, m);
        out["relationsHold"] = d.satisfies_relations(m);
    } else if (op == "nrd") {
        out.update(norm_json(read_algebra_element(d, field(*doc, "x"))));
    } else {
        throw ParseError("unknown skewfield op '" + op + "'");
    }
    return out;
}

json run_dieudonne(const Options& o) {
    const UnramifiedContext ctx(o.p, static_cast<int>(o.f), o.residue_degree, o.precision);
    const DieudonneModule m = dieudonne_standard(ctx, o.rank, o.etale_height);
    const Heights h = etale_inf_height(m);
    const int formal = o.rank - o.etale_height;
    json out = {{"p", o.p},
                {"f", o.f},
                {"residueDegree", o.residue_degree},
                {"precision", o.precision},
                {"rank", o.rank},
                {"V", write_ring_matrix(m.v_matrix())},
                {"F", write_ring_matrix(m.f_matrix())},
                {"fvEqualsP", m.fv_vf_is_p()},
                {"etale", h.etale},
                {"formal", h.formal},
                {"lieLength", m.lie_length()}};
    if (formal > 0) {
        const RingMatrix block = ring_submatrix(m.v_power(formal), o.etale_height, o.rank);
        out["formalVPowerIsP"] = block == ring_identity(ctx.ring(), formal, ctx.p());
    }
    return out;
}

// ---- representation-theoretic subcommands ---------------------------------

json run_rep_command(const std::string& cmd, const Options& o, const json& doc) {
    const LocalFieldContext ctx = LocalFieldContext::create(o.p, o.f, o.d, o.n_psi);
    const LabelRegistry reg = load_registry(o);
    if (cmd == "rec") return write_wdrep(rec_forward(read_class(doc)));
    if (cmd == "rec-inverse") return write_class(rec_inverse(read_wdrep(doc)));
    if (cmd == "satake") {
        const std::string dir = read_string(field(doc, "direction"), "direction");
        if (dir == "toWD") {
            const json& vals = field(doc, "values");
            if (!vals.is_array()) throw ParseError("values must be a list of scalars");
            std::vector<ExactScalar> v;
            for (const auto& e : vals) v.push_back(read_scalar(e));
            const ClassData c = satake_to_rep(v, reg, ctx);
            return {{"class", write_class(c)}, {"wd", write_wdrep(rec_forward(c))}};
        }
        if (dir == "fromRep") {
            json vals = json::array();
            for (const auto& v : satake_from_rep(read_class(field(doc, "class")), reg, ctx))
                vals.push_back(write_scalar(v, ctx));
            return {{"values", vals}};
        }
        throw ParseError("direction must be \"toWD\" or \"fromRep\"");
    }
    if (cmd == "lfactor") return write_lfactor(wd_l_factor(read_rep(doc), reg), ctx);
    if (cmd == "lfactor-pair") {
        const json& left = field(doc, "left");
        const json& right = field(doc, "right");
        json out = {{"wd", write_lfactor(wd_pair_l(read_rep(left), read_rep(right), reg), ctx)}};
        if (left.contains("segments") && right.contains("segments"))
            out["inductive"] = write_lfactor(gl_pair_l_inductive(read_class(left), read_class(right), reg), ctx);
        return out;
    }
    if (cmd == "eps") {
        const EpsValue e = wd_eps(read_rep(doc), reg, ctx);
        json out = {{"eps", write_eps(e, ctx)}};
        if (e.is_monomial()) out["normalized"] = write_eps(eps_normalize(e, ctx), ctx);
        return out;
    }
    if (cmd == "conductor") {
        const WDRep rho = read_rep(doc);
        return {{"artin", to_string(conductor(rho, reg, ctx, ConductorMode::artin))},
                {"epsDegree", to_string(conductor(rho, reg, ctx, ConductorMode::eps_degree))}};
    }
    if (cmd == "dictionary") {
        json rows = json::array();
        for (const auto& row : dictionary_report(read_class(doc), reg, ctx))
            rows.push_back({{"property", row.property}, {"glSide", row.gl_side}, {"wdSide", row.wd_side},
                            {"agree", row.agree()}});
        return rows;
    }
    if (cmd == "involution") return write_class(involution_t(read_class(doc)));
    if (cmd == "dual") {
        if (doc.is_object() && doc.contains("blocks")) return write_wdrep(wd_dual(read_wdrep(doc), reg));
        return write_class(dualize(read_class(doc), reg));
    }
    if (cmd == "classify-predicates") {
        const ClassData c = read_class(doc);
        const GlPredicates g = gl_predicates(c, reg);
        json out = {{"gl",
                     {{"supercuspidal", g.supercuspidal},
                      {"essentiallySquareIntegrable", g.ess_square_integrable},
                      {"squareIntegrable", g.square_integrable},
                      {"tempered", g.tempered},
                      {"generic", g.generic},
                      {"unramified", g.unramified},
                      {"iwahoriSpherical", g.iwahori_spherical}}}};
        if (c.form == Form::Q) {
            const WDPredicates w = wd_predicates(rec_forward(c), reg, ctx);
            out["wd"] = {{"irreducible", w.irreducible},
                         {"indecomposable", w.indecomposable},
                         {"unramified", w.unramified},
                         {"ikSpherical", w.ik_spherical},
                         {"boundedFrobenius", w.bounded_frobenius}};
        }
        return out;
    }
    if (cmd == "verify") {
        const RecAxiomReport r = verify_rec_axioms(read_class(field(doc, "class")), read_atom(field(doc, "chi")), reg, ctx);
        return {{"twist", r.twist},
                {"determinant", r.determinant},
                {"contragredient", r.contragredient},
                {"all", r.all()},
                {"failures", r.failures}};
    }
    throw ParseError("unknown subcommand '" + cmd + "'");
}

void emit(const json& doc, const std::string& path) {
    const std::string text = doc.dump(2) + "\n";
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("io", "cannot write '" + path + "'");
    out << text;
}

int fail(const std::string& kind, const std::string& detail, int status) {
    std::cout << json{{"error", kind}, {"detail", detail}}.dump(2) << "\n";
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Exact local Langlands computations for GL(n)"};
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->always_capture_default();
    app.add_option("--registry", o.registry, "label registry JSON");
    app.add_option("--p", o.p, "residue characteristic");
    app.add_option("--f", o.f, "residue degree, q = p^f");
    app.add_option("--d", o.d, "exponent of the different");
    app.add_option("--npsi", o.n_psi, "conductor exponent of the additive character");
    app.add_option("--precision", o.precision, "p-adic precision N");
    app.add_option("--input", o.input, "payload JSON path or -");
    app.add_option("--output", o.output, "output path or -");

    const std::vector<std::string> rep_commands = {"rec",       "rec-inverse", "satake",     "lfactor",
                                                   "lfactor-pair", "eps",      "conductor",  "dictionary",
                                                   "involution", "dual",       "classify-predicates", "verify"};
    for (const auto& name : rep_commands) app.add_subcommand(name);
    auto* witt = app.add_subcommand("witt", "Witt vector arithmetic");
    witt->add_option("--ring", o.ring, "Q, Z, Fp, Fq:deg or Z/m");
    witt->add_option("--length", o.length, "Witt length N");
    auto* skew = app.add_subcommand("skewfield", "cyclic division algebra D_{r/s}");
    skew->add_option("--r", o.r);
    skew->add_option("--s", o.s);
    auto* dieu = app.add_subcommand("dieudonne", "standard Dieudonne module");
    dieu->add_option("--rank", o.rank);
    dieu->add_option("--etale-height", o.etale_height);
    dieu->add_option("--residue-degree", o.residue_degree, "k = F_{q^u}");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        return fail("parse_error", e.what(), 2);
    }

    try {
        const std::string cmd = app.get_subcommands().front()->get_name();
        json result;
        if (cmd == "witt") {
            result = run_witt(o, read_document(o.input));
        } else if (cmd == "skewfield") {
            if (o.input.empty()) {
                result = run_skewfield(o, nullptr);
            } else {
                const json doc = read_document(o.input);
                result = run_skewfield(o, &doc);
            }
        } else if (cmd == "dieudonne") {
            result = run_dieudonne(o);
        } else {
            result = run_rep_command(cmd, o, read_document(o.input));
        }
        emit(result, o.output);
        return 0;
    } catch (const ParseError& e) {
        return fail(e.kind(), e.what(), 2);
    } catch (const Error& e) {
        return fail(e.kind(), e.what(), 1);
    } catch (const json::exception& e) {
        return fail("parse_error", e.what(), 2);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), 1);
    }
}

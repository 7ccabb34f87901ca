#pragma once

// Shared fixtures for the test binaries: registries and seeded random data.

#include <random>
#include <string>
#include <vector>

#include "llc/langlands.hpp"

namespace llc::testing {

inline InertialLabel label(std::string name, LabelKind kind, int degree, int torsion, int conductor, std::string dual,
                           ExactScalar omega = ExactScalar::one(), std::string unit_class = "") {
    InertialLabel l;
    l.name = name;
    l.kind = kind;
    l.degree = degree;
    l.torsion = torsion;
    l.conductor = conductor;
    l.dual = std::move(dual);
    l.omega = std::move(omega);
    l.unit_class = unit_class.empty() ? name : std::move(unit_class);
    return l;
}

inline ExactScalar unit(long long re, long long im) { return {GaussRat(make_rational(re), make_rational(im)), 0}; }

/// Unramified characters (Satake values 1, -1, i, -i), ramified characters and
/// symbolic supercuspidals of degree 2 and 3.
inline LabelRegistry mixed_registry() {
    using K = LabelKind;
    return LabelRegistry::load({
        label("1", K::unramified_char, 1, 1, 0, "1"),
        label("m1", K::unramified_char, 1, 1, 0, "m1", unit(-1, 0), "1"),
        label("i", K::unramified_char, 1, 1, 0, "mi", unit(0, 1), "1"),
        label("mi", K::unramified_char, 1, 1, 0, "i", unit(0, -1), "1"),
        label("chi", K::ramified_char, 1, 1, 1, "chibar"),
        label("chibar", K::ramified_char, 1, 1, 1, "chi"),
        label("eta", K::ramified_char, 1, 1, 2, "eta", unit(-1, 0)),
        label("tau", K::symbolic, 2, 1, 3, "tauv", unit(0, 1)),
        label("tauv", K::symbolic, 2, 1, 3, "tau", unit(0, -1)),
        label("rho", K::symbolic, 2, 2, 2, "rho", unit(-1, 0)),
        label("sig", K::symbolic, 3, 3, 4, "sig"),
    });
}

/// The trivial character alone.
inline LabelRegistry trivial_registry() {
    return LabelRegistry::load({label("1", LabelKind::unramified_char, 1, 1, 0, "1")});
}

/// Ten symbolic labels: five dual pairs with mixed degrees and torsion.
inline LabelRegistry symbolic_registry() {
    using K = LabelKind;
    std::vector<InertialLabel> ls;
    const int degrees[5] = {2, 2, 3, 4, 6};
    const int torsions[5] = {1, 2, 3, 2, 6};
    for (int k = 0; k < 5; ++k) {
        const std::string a = "s" + std::to_string(k) + "a", b = "s" + std::to_string(k) + "b";
        ls.push_back(label(a, K::symbolic, degrees[k], torsions[k], k + 1, b));
        ls.push_back(label(b, K::symbolic, degrees[k], torsions[k], k + 1, a));
    }
    return LabelRegistry::load(ls);
}

inline Atom atom(const std::string& label, int halves = 0) { return {label, HalfInt::from_halves(halves)}; }
inline Segment seg(const std::string& label, int halves, int m = 1) { return {atom(label, halves), m}; }
inline ClassData q_class(std::vector<Segment> segs) { return {Form::Q, std::move(segs)}; }

/// St(n): the segment of the trivial character from |.|^((1-n)/2) to |.|^((n-1)/2).
inline ClassData steinberg(int n) { return q_class({seg("1", 1 - n, n)}); }

inline WDRep sp(int m, const std::string& label = "1", int halves = 0) { return {{{atom(label, halves), m}}}; }

inline ExactScalar qp(int halves) { return ExactScalar::q_power(HalfInt::from_halves(halves)); }

class Random {
public:
    explicit Random(std::uint64_t seed) : gen_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
    bool coin() { return uniform(0, 1) == 1; }
    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
    }
    HalfInt half(int max_halves) { return HalfInt::from_halves(uniform(-max_halves, max_halves)); }
    std::mt19937_64& engine() { return gen_; }

    /// Q-form data with at most max_segs segments and degree at most max_degree.
    /// Segments frequently share labels and integral offsets so that links occur.
    ClassData class_data(const LabelRegistry& reg, int max_segs, int max_degree) {
        std::vector<std::string> names;
        for (const auto& [name, l] : reg.labels()) names.push_back(name);
        ClassData c{Form::Q, {}};
        int degree = 0;
        const int count = uniform(1, max_segs);
        const std::string base_label = pick(names);
        const HalfInt base_x = half(2);
        for (int k = 0; k < count; ++k) {
            const std::string name = coin() ? base_label : pick(names);
            const int n = reg.at(name).degree;
            const int room = (max_degree - degree) / n;
            if (room < 1) continue;
            const int m = uniform(1, std::min(room, 3));
            HalfInt x = coin() ? base_x + HalfInt(uniform(-2, 2)) : half(4);
            c.segs.push_back({{name, x}, m});
            degree += n * m;
        }
        if (c.segs.empty()) c.segs.push_back({{names.front(), HalfInt(0)}, 1});
        c.segs = standard_order(c.segs);
        return c;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace llc::testing

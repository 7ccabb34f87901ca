#pragma once

// Randomized identity checks for truncated Witt vectors, shared by the unit
// tests and the acceptance runner. Each check returns an empty string on
// success and a description of the first counterexample otherwise.

#include <functional>
#include <random>
#include <string>

#include "llc/witt.hpp"

namespace llc::testing {

template <CoeffRing R>
using Sampler = std::function<typename R::value_type(std::mt19937_64&)>;

template <CoeffRing R>
std::string show(const WittRing<R>& w, const WittVector<R>& x) {
    std::string out = "(";
    for (std::size_t i = 0; i < x.size(); ++i) out += (i ? ", " : "") + w.ring().str(x[i]);
    return out + ")";
}

/// Equality on the coordinates both vectors determine.
template <CoeffRing R>
bool prefix_equal(const WittRing<R>& w, const WittVector<R>& a, const WittVector<R>& b) {
    const std::size_t len = std::min(a.size(), b.size());
    if (len == 0) return true;
    return w.equal(WittRing<R>::truncate(a, len), WittRing<R>::truncate(b, len));
}

template <CoeffRing R>
WittVector<R> random_vector(const WittRing<R>& w, const Sampler<R>& sample, std::mt19937_64& gen) {
    WittVector<R> x;
    for (int i = 0; i < w.length(); ++i) x.push_back(sample(gen));
    return x;
}

template <CoeffRing R>
std::string check_ring_axioms(const WittRing<R>& w, const Sampler<R>& sample, int count, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    const auto zero = w.zero(), one = w.one();
    for (int i = 0; i < count; ++i) {
        const auto x = random_vector(w, sample, gen), y = random_vector(w, sample, gen), z = random_vector(w, sample, gen);
        const auto fail = [&](const char* what) { return std::string(what) + " at x=" + show(w, x) + " y=" + show(w, y); };
        if (!w.equal(w.add(x, y), w.add(y, x))) return fail("x+y=y+x");
        if (!w.equal(w.mul(x, y), w.mul(y, x))) return fail("xy=yx");
        if (!w.equal(w.add(w.add(x, y), z), w.add(x, w.add(y, z)))) return fail("(x+y)+z=x+(y+z)");
        if (!w.equal(w.mul(w.mul(x, y), z), w.mul(x, w.mul(y, z)))) return fail("(xy)z=x(yz)");
        if (!w.equal(w.mul(x, w.add(y, z)), w.add(w.mul(x, y), w.mul(x, z)))) return fail("x(y+z)=xy+xz");
        if (!w.equal(w.add(x, zero), x)) return fail("x+0=x");
        if (!w.equal(w.mul(x, one), x)) return fail("x*1=x");
        if (!w.equal(w.mul(x, zero), zero)) return fail("x*0=0");
        if (!w.equal(w.add(x, w.neg(x)), zero)) return fail("x+(-x)=0");
    }
    return {};
}

/// The sigma/tau relations, compared on common prefixes where sigma loses
/// the top coordinate.
template <CoeffRing R>
std::string check_relations(const WittRing<R>& w, const Sampler<R>& sample, int count, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    const auto p = w.from_integer(w.p());
    const auto tau_one = w.verschiebung(w.one());
    if (w.characteristic_p() && !w.equal(tau_one, p)) return "tau(1) = p fails in characteristic p";
    for (int i = 0; i < count; ++i) {
        const auto x = random_vector(w, sample, gen), y = random_vector(w, sample, gen);
        const auto fail = [&](const char* what) { return std::string(what) + " at x=" + show(w, x) + " y=" + show(w, y); };
        const auto sx = w.frobenius(x), sy = w.frobenius(y);
        const auto tx = w.verschiebung(x), ty = w.verschiebung(y);
        if (!prefix_equal(w, w.frobenius(tx), w.mul(p, x))) return fail("(i) sigma(tau(x)) = p x");
        if (!prefix_equal(w, w.verschiebung(w.mul(x, sy)), w.mul(tx, y))) return fail("(ii) tau(x sigma(y)) = tau(x) y");
        if (!w.equal(w.mul(tx, ty), w.mul(p, w.verschiebung(w.mul(x, y))))) return fail("(iii) tau(x) tau(y) = p tau(xy)");
        if (!prefix_equal(w, w.verschiebung(sx), w.mul(tau_one, x))) return fail("(iv) tau(sigma(x)) = tau(1) x");
        // sigma is a ring map
        if (!prefix_equal(w, w.frobenius(w.add(x, y)), w.add(sx, sy))) return fail("sigma(x+y) = sigma(x)+sigma(y)");
        if (!prefix_equal(w, w.frobenius(w.mul(x, y)), w.mul(sx, sy))) return fail("sigma(xy) = sigma(x)sigma(y)");
    }
    return {};
}

template <CoeffRing R>
std::string check_ghost_homomorphism(const WittRing<R>& w, const Sampler<R>& sample, int count, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    const R& ring = w.ring();
    for (int i = 0; i < count; ++i) {
        const auto x = random_vector(w, sample, gen), y = random_vector(w, sample, gen);
        const auto gx = w.ghost(x), gy = w.ghost(y), gs = w.ghost(w.add(x, y)), gp = w.ghost(w.mul(x, y));
        for (int n = 0; n < w.length(); ++n) {
            if (!ring.equal(gs[n], ring.add(gx[n], gy[n]))) return "ghost(x+y) at x=" + show(w, x) + " y=" + show(w, y);
            if (!ring.equal(gp[n], ring.mul(gx[n], gy[n]))) return "ghost(xy) at x=" + show(w, x) + " y=" + show(w, y);
        }
    }
    return {};
}

/// Z -> W_N(F_p): n -> n * 1 is onto with kernel p^N Z.
inline std::string check_integers_mod_pn(long long p, int n) {
    const WittRing<IntegersMod> w(IntegersMod(p), p, n);
    long long size = 1;
    for (int i = 0; i < n; ++i) size *= p;
    std::vector<WittVector<IntegersMod>> images;
    for (long long k = 0; k < size; ++k) {
        const auto v = w.from_integer(k);
        for (const auto& u : images)
            if (w.equal(u, v)) return "two residues below p^N have the same image";
        images.push_back(v);
        // compatibility with the ring operations of Z/p^N
        for (long long j = 0; j < size; ++j) {
            if (!w.equal(w.add(v, w.from_integer(j)), w.from_integer((k + j) % size))) return "sum not compatible";
            if (!w.equal(w.mul(v, w.from_integer(j)), w.from_integer((k * j) % size))) return "product not compatible";
        }
    }
    if (!w.equal(w.from_integer(size), w.zero())) return "p^N does not map to zero";
    if (!w.equal(w.from_integer(-1), w.from_integer(size - 1))) return "-1 differs from p^N - 1";
    return {};
}

}  // namespace llc::testing

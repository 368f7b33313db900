#pragma once

#include "pmv/algebra.hpp"
#include "pmv/jordan.hpp"
#include "pmv/state.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace pmv::testing {

inline Rat Q(long long p, long long q = 1) { return Rat(p) / Rat(q); }

/// Small random rationals p/q with |p| <= mag, 1 <= q <= den.
inline Rat random_rat(std::mt19937& rng, long long mag = 6, long long den = 4) {
    std::uniform_int_distribution<long long> pn(-mag, mag), qd(1, den);
    return Q(pn(rng), qd(rng));
}

/// Random convex weights (exact, from integer tickets).
inline std::vector<Rat> random_weights(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> ticket(0, 8);
    std::vector<long long> t(n, 0);
    long long total = 0;
    while (total == 0) {
        total = 0;
        for (std::size_t i = 0; i < n; ++i) total += t[i] = ticket(rng);
    }
    std::vector<Rat> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = Q(t[i], total);
    return w;
}

/// Random point of the real state polytope: a convex combination of its
/// vertices.
inline Vec random_state_vector(std::mt19937& rng, const std::vector<Vec>& vertices) {
    const auto w = random_weights(rng, vertices.size());
    Vec out(vertices[0].size(), Rat(0));
    for (std::size_t j = 0; j < vertices.size(); ++j)
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += w[j] * vertices[j][i];
    return out;
}

/// Random Q^m state on a finite algebra (componentwise random polytope
/// points).
inline RState random_r_state(std::mt19937& rng, const AlgebraPtr& a,
                             const std::vector<Vec>& vertices, int m) {
    std::vector<Vec> cols;
    for (int i = 0; i < m; ++i) cols.push_back(random_state_vector(rng, vertices));
    return RState::from_components(a, cols);
}

/// Random signed measure: difference of two scaled random states.
inline SignedMeasure random_signed_measure(std::mt19937& rng, const AlgebraPtr& a,
                                           const std::vector<Vec>& vertices, int m) {
    std::uniform_int_distribution<long long> lam(0, 6);
    const SignedMeasure p = SignedMeasure::from_state(random_r_state(rng, a, vertices, m));
    const SignedMeasure q = SignedMeasure::from_state(random_r_state(rng, a, vertices, m));
    return p.scale(Q(lam(rng), 2)) - q.scale(Q(lam(rng), 2));
}

/// Random subadditive map: the min-envelope over decompositions of a random
/// seed map (the largest subadditive map below the seed).
inline SubadditiveMap random_subadditive(std::mt19937& rng, const AlgebraPtr& a, int m) {
    const DenseTables& t = a->dense();
    std::vector<Vec> seed(t.n, Vec(m));
    for (int x = 0; x < t.n; ++x)
        for (int c = 0; c < m; ++c) seed[x][c] = x == t.zero ? Rat(0) : random_rat(rng, 4, 2);
    // Min over ordered decompositions, computed by the same well-founded
    // recursion the library uses for sups (independent direction).
    std::vector<Vec> env(t.n);
    std::vector<char> done(t.n, 0);
    const std::function<const Vec&(int)> rec = [&](int x) -> const Vec& {
        if (done[x]) return env[x];
        Vec best = seed[x];
        for (int y = 0; y < t.n; ++y) {
            if (y == t.zero) continue;
            for (int z = 0; z < t.n; ++z) {
                if (z == t.zero || t.op(t.padd, y, z) != x) continue;
                const Vec& via = rec(y);
                for (int c = 0; c < m; ++c)
                    if (via[c] + seed[z][c] < best[c]) best[c] = via[c] + seed[z][c];
            }
        }
        env[x] = std::move(best);
        done[x] = 1;
        return env[x];
    };
    for (int x = 0; x < t.n; ++x) rec(x);
    return make_subadditive(a, RieszRep::qn(m), std::move(env));
}

/// Brute-force oracle: every ordered decomposition of every element into
/// nonzero summands, evaluated directly. Exponential; small carriers only.
inline std::vector<Vec> decomposition_sup_bruteforce(const AlgebraPtr& a,
                                                     const std::vector<Vec>& d, bool maximize) {
    const DenseTables& t = a->dense();
    const int m = static_cast<int>(d[0].size());
    std::vector<Vec> best = d;  // k = 1 decomposition
    // Depth-first over decomposition suffixes: state = (current sum, value).
    const std::function<void(int, const Vec&)> walk = [&](int sum, const Vec& value) {
        for (int z = 0; z < t.n; ++z) {
            if (z == t.zero) continue;
            const int next = t.op(t.padd, sum, z);
            if (next < 0) continue;
            Vec v(m);
            for (int c = 0; c < m; ++c) v[c] = value[c] + d[z][c];
            for (int c = 0; c < m; ++c)
                if (maximize ? v[c] > best[next][c] : v[c] < best[next][c]) best[next][c] = v[c];
            walk(next, v);
        }
    };
    for (int first = 0; first < t.n; ++first) {
        if (first == t.zero) continue;
        walk(first, d[first]);
    }
    return best;
}

/// The identity suite every state satisfies; returns the first violated
/// identity name or empty when all hold.
inline std::string state_identity_violation(const RState& s) {
    const Algebra& a = *s.algebra();
    const RieszRep& r = s.target();
    const DenseTables& t = a.dense();
    const auto val = [&](int i) { return s.value_at(i); };
    const auto neg_unit = [&](const Vec& v) { return r.sub(r.unit(), v); };
    if (!vec_is_zero(val(t.zero))) return "s(0)=0";
    for (int x = 0; x < t.n; ++x) {
        // double negations
        if (val(t.negm[t.negm[x]]) != val(x)) return "s(x^=)=s(x)";
        if (val(t.negt[t.negt[x]]) != val(x)) return "s(x^~~)=s(x)";
        if (val(t.negm[x]) != neg_unit(val(x))) return "s(x^-)=1-s(x)";
        if (val(t.negt[x]) != neg_unit(val(x))) return "s(x^~)=1-s(x)";
        for (int y = 0; y < t.n; ++y) {
            if (t.le(x, y)) {
                if (!r.leq(val(x), val(y))) return "monotone";
                const Vec diff = r.sub(val(y), val(x));
                if (val(t.op(t.odot, y, t.negm[x])) != diff) return "s(y.x^-)=s(y)-s(x)";
                if (val(t.op(t.odot, t.negt[x], y)) != diff) return "s(x^~.y)=s(y)-s(x)";
            }
            const Vec sum = r.add(val(x), val(y));
            if (r.add(val(t.op(t.join, x, y)), val(t.op(t.meet, x, y))) != sum)
                return "s(xvy)+s(x^y)=s(x)+s(y)";
            if (r.add(val(t.op(t.oplus, x, y)), val(t.op(t.odot, x, y))) != sum)
                return "s(x(+)y)+s(x(.)y)=s(x)+s(y)";
            if (r.oplus_unit(val(t.op(t.oplus, x, y)), val(t.op(t.odot, x, y))) !=
                r.oplus_unit(val(x), val(y)))
                return "s(x(+)y)(+)s(x(.)y)=s(x)(+)s(y)";
            if (r.archimedean() &&
                val(t.op(t.oplus, x, y)) != val(t.op(t.oplus, y, x)))
                return "s(x(+)y)=s(y(+)x)";
        }
    }
    return "";
}

}  // namespace pmv::testing

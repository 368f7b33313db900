#include "pmv/ideal.hpp"

#include <algorithm>
#include <set>

namespace pmv {

namespace {

// Finite ideals as index characteristic vectors over the carrier.
std::vector<char> to_mask(const Algebra& a, const std::vector<Elem>& members) {
    std::vector<char> mask(a.size(), 0);
    for (const Elem& e : members) mask[a.index_of(e)] = 1;
    return mask;
}

std::vector<Elem> from_mask(const Algebra& a, const std::vector<char>& mask) {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) out.push_back(a.carrier()[i]);
    return out;
}

// Downward + oplus closure to a fixpoint.
std::vector<char> close_mask(const Algebra& a, std::vector<char> mask) {
    const DenseTables& t = a.dense();
    mask[t.zero] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < t.n; ++x) {
            if (mask[x]) continue;
            for (int b = 0; b < t.n; ++b)
                if (mask[b] && t.le(x, b)) {
                    mask[x] = 1;
                    changed = true;
                    break;
                }
        }
        for (int x = 0; x < t.n; ++x) {
            if (!mask[x]) continue;
            for (int y = 0; y < t.n; ++y) {
                if (!mask[y]) continue;
                const int s = t.op(t.oplus, x, y);
                if (!mask[s]) {
                    mask[s] = 1;
                    changed = true;
                }
            }
        }
    }
    return mask;
}

bool mask_is_ideal(const Algebra& a, const std::vector<char>& mask) {
    const DenseTables& t = a.dense();
    if (!mask[t.zero]) return false;
    for (int x = 0; x < t.n; ++x) {
        if (!mask[x]) continue;
        for (int y = 0; y < t.n; ++y) {
            if (t.le(y, x) && !mask[y]) return false;
            if (mask[y] && !mask[t.op(t.oplus, x, y)]) return false;
        }
    }
    return true;
}

bool mask_is_normal(const Algebra& a, const std::vector<char>& mask) {
    const DenseTables& t = a.dense();
    for (int x = 0; x < t.n; ++x) {
        std::set<int> left, right;  // x (+) I and I (+) x
        for (int b = 0; b < t.n; ++b) {
            if (!mask[b]) continue;
            left.insert(t.op(t.oplus, x, b));
            right.insert(t.op(t.oplus, b, x));
        }
        if (left != right) return false;
    }
    return true;
}

bool mask_full(const std::vector<char>& mask) {
    for (char c : mask)
        if (!c) return false;
    return true;
}

bool mask_is_maximal(const Algebra& a, const std::vector<char>& mask) {
    if (mask_full(mask)) return false;  // maximality requires a proper ideal
    for (std::size_t x = 0; x < mask.size(); ++x) {
        if (mask[x]) continue;
        std::vector<char> ext = mask;
        ext[x] = 1;
        if (!mask_full(close_mask(a, std::move(ext)))) return false;
    }
    return true;
}

}  // namespace

bool Ideal::contains(const Elem& x) const {
    if (lazy) return oracle(x);
    return std::binary_search(members.begin(), members.end(), x);
}

bool Ideal::operator==(const Ideal& other) const {
    if (lazy || other.lazy) throw std::logic_error("Ideal: cannot compare lazy ideals");
    return members == other.members;
}

Ideal ideal_from_members(AlgebraPtr algebra, std::vector<Elem> members) {
    for (const Elem& e : members) algebra->require_member(e);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Ideal ideal;
    ideal.algebra = std::move(algebra);
    ideal.members = std::move(members);
    return ideal;
}

Ideal ideal_generated(const AlgebraPtr& algebra, std::vector<Elem> generators, int bound) {
    for (const Elem& e : generators) algebra->require_member(e);
    if (algebra->finite()) {
        std::vector<char> mask(algebra->size(), 0);
        for (const Elem& e : generators) mask[algebra->index_of(e)] = 1;
        return ideal_from_members(algebra, from_mask(*algebra, close_mask(*algebra, mask)));
    }
    // Lazy closure oracle: gen(S) = gen(g_1 (+) ... (+) g_k) and membership in
    // a principal ideal means y <= n (*) g for some n; n (*) g is monotone in
    // n, so one test at the bound decides up to that budget.
    Ideal ideal;
    ideal.algebra = algebra;
    ideal.lazy = true;
    ideal.generators = generators;
    const AlgebraPtr alg = algebra;
    ideal.oracle = [alg, generators, bound](const Elem& y) {
        alg->require_member(y);
        if (y == alg->zero()) return true;
        if (generators.empty()) return false;
        Elem g = alg->zero();
        for (const Elem& e : generators) g = alg->oplus(g, e);
        const auto reach = iterate(*alg, g, bound, IterateMode::oplus_mul);
        return reach && alg->leq(y, *reach);
    };
    return ideal;
}

IdealClassification classify_ideal(const AlgebraPtr& algebra, const Ideal& ideal, int bound) {
    IdealClassification out;
    if (algebra->finite() && !ideal.lazy) {
        const std::vector<char> mask = to_mask(*algebra, ideal.members);
        out.is_ideal = mask_is_ideal(*algebra, mask);
        out.is_normal = out.is_ideal && mask_is_normal(*algebra, mask);
        out.is_maximal = out.is_ideal && mask_is_maximal(*algebra, mask);
        return out;
    }

    const auto* gamma = dynamic_cast<const GammaAlgebra*>(algebra.get());
    if (gamma == nullptr || gamma->group().kind() != GroupKind::z2_lex)
        throw std::invalid_argument("classify_ideal: lazy classification needs the lex backend");
    out.bounded = true;
    const std::vector<Elem> sample = lex_sample(*gamma, bound);
    std::vector<Elem> inside;
    for (const Elem& e : sample)
        if (ideal.contains(e)) inside.push_back(e);

    out.is_ideal = ideal.contains(algebra->zero());
    for (const Elem& a : inside) {
        for (const Elem& b : sample)
            if (algebra->leq(b, a) && !ideal.contains(b)) out.is_ideal = false;
        for (const Elem& b : inside)
            if (!ideal.contains(algebra->oplus(a, b))) out.is_ideal = false;
    }

    // Normality on samples: two-sided inclusion of a (+) I and I (+) a.
    out.is_normal = out.is_ideal;
    for (const Elem& a : sample) {
        std::set<Elem> left, right;
        for (const Elem& b : inside) {
            left.insert(algebra->oplus(a, b));
            right.insert(algebra->oplus(b, a));
        }
        if (left != right) out.is_normal = false;
    }

    // Bounded maximality: every sampled point outside the ideal must generate
    // every sampled point via  y <= n (*) x (+) h,  h in the sampled ideal.
    bool proper = false;
    for (const Elem& e : sample)
        if (!ideal.contains(e)) proper = true;
    out.is_maximal = out.is_ideal && proper;
    if (out.is_maximal) {
        for (const Elem& x : sample) {
            if (ideal.contains(x)) continue;
            const auto nx = iterate(*algebra, x, bound, IterateMode::oplus_mul);
            for (const Elem& y : sample) {
                bool reached = false;
                if (nx) {
                    for (const Elem& h : inside)
                        if (algebra->leq(y, algebra->oplus(*nx, h))) { reached = true; break; }
                    if (!reached && algebra->leq(y, *nx)) reached = true;
                }
                if (!reached) { out.is_maximal = false; break; }
            }
            if (!out.is_maximal) break;
        }
    }
    return out;
}

std::vector<MaximalIdeal> all_maximal_ideals(const AlgebraPtr& algebra) {
    const DenseTables& t = algebra->dense();
    // Principal ideals exhaust the ideal lattice of a finite algebra: an
    // ideal is closed under join (x v y <= x (+) y), so it has a largest
    // element and equals the ideal that element generates.
    std::vector<std::vector<char>> ideals;
    for (int x = 0; x < t.n; ++x) {
        std::vector<char> mask(t.n, 0);
        mask[x] = 1;
        mask = close_mask(*algebra, std::move(mask));
        if (mask_full(mask)) continue;  // generates M
        if (std::find(ideals.begin(), ideals.end(), mask) == ideals.end())
            ideals.push_back(std::move(mask));
    }
    std::vector<MaximalIdeal> out;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < ideals.size() && !dominated; ++j) {
            if (i == j) continue;
            bool subset = true, equal = true;
            for (int x = 0; x < t.n; ++x) {
                if (ideals[i][x] && !ideals[j][x]) subset = false;
                if (ideals[i][x] != ideals[j][x]) equal = false;
            }
            dominated = subset && !equal;
        }
        if (dominated) continue;
        MaximalIdeal m;
        m.ideal = ideal_from_members(algebra, from_mask(*algebra, ideals[i]));
        m.normal = mask_is_normal(*algebra, ideals[i]);
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), [](const MaximalIdeal& a, const MaximalIdeal& b) {
        return a.ideal.members < b.ideal.members;
    });
    return out;
}

QuotientResult quotient(const AlgebraPtr& algebra, const Ideal& ideal) {
    if (!algebra->finite()) throw std::domain_error("quotient: infinite carrier");
    const IdealClassification cls = classify_ideal(algebra, ideal);
    if (!cls.is_ideal) throw std::invalid_argument("quotient: not an ideal");
    if (!cls.is_normal) throw std::invalid_argument("quotient: ideal is not normal");
    const DenseTables& t = algebra->dense();
    const std::vector<char> mask = to_mask(*algebra, ideal.members);
    if (mask_full(mask)) throw std::invalid_argument("quotient: quotient by M is degenerate (0 = 1)");

    const auto congruent = [&](int x, int y) {
        return mask[t.op(t.odot, x, t.negm[y])] && mask[t.op(t.odot, y, t.negm[x])];
    };
    std::vector<int> cls_of(t.n, -1);
    std::vector<int> reps;
    for (int x = 0; x < t.n; ++x) {
        for (std::size_t c = 0; c < reps.size(); ++c)
            if (congruent(x, reps[c])) { cls_of[x] = static_cast<int>(c); break; }
        if (cls_of[x] < 0) {
            cls_of[x] = static_cast<int>(reps.size());
            reps.push_back(x);
        }
    }

    const int k = static_cast<int>(reps.size());
    std::vector<std::vector<int>> qplus(k, std::vector<int>(k));
    std::vector<int> qnegm(k), qnegt(k);
    for (int i = 0; i < k; ++i) {
        qnegm[i] = cls_of[t.negm[reps[i]]];
        qnegt[i] = cls_of[t.negt[reps[i]]];
        for (int j = 0; j < k; ++j) qplus[i][j] = cls_of[t.op(t.oplus, reps[i], reps[j])];
    }
    // Congruence soundness: the class of x (+) y must only depend on classes.
    for (int x = 0; x < t.n; ++x) {
        if (cls_of[t.negm[x]] != qnegm[cls_of[x]] || cls_of[t.negt[x]] != qnegt[cls_of[x]])
            throw std::logic_error("quotient: negation not congruent");
        for (int y = 0; y < t.n; ++y)
            if (cls_of[t.op(t.oplus, x, y)] != qplus[cls_of[x]][cls_of[y]])
                throw std::logic_error("quotient: oplus not congruent");
    }

    std::vector<std::string> names;
    names.reserve(k);
    for (int i = 0; i < k; ++i)
        names.push_back("[" + algebra->elem_name(algebra->carrier()[reps[i]]) + "]");
    QuotientResult out;
    out.quotient = make_table(std::move(names), std::move(qplus), std::move(qnegm),
                              std::move(qnegt), cls_of[t.zero], cls_of[t.one]);
    out.projection = std::move(cls_of);
    return out;
}

}  // namespace pmv

#pragma once

#include "pmv/algebra.hpp"

#include <functional>

namespace pmv {

/// An ideal of a pseudo MV-algebra: downward closed and closed under oplus,
/// containing 0. Finite backends carry the member list (sorted in carrier
/// order); lazy backends carry the generator list plus a bounded membership
/// oracle.
struct Ideal {
    AlgebraPtr algebra;
    std::vector<Elem> members;                      // finite backends
    std::vector<Elem> generators;                   // lazy backends
    std::function<bool(const Elem&)> oracle;        // lazy membership (bounded)
    bool lazy = false;

    bool contains(const Elem& x) const;
    bool operator==(const Ideal& other) const;      // finite member comparison
};

/// Wraps an explicit member set (finite backends).
Ideal ideal_from_members(AlgebraPtr algebra, std::vector<Elem> members);

/// Least ideal containing the generators. Finite backends iterate downward
/// and oplus closure to a fixpoint; lazy backends return the bounded closure
/// oracle  y in gen(S)  iff  y <= bound (*) (g_1 (+) ... (+) g_k).
Ideal ideal_generated(const AlgebraPtr& algebra, std::vector<Elem> generators, int bound = 25);

struct IdealClassification {
    bool is_ideal = false;
    bool is_normal = false;
    bool is_maximal = false;
    bool bounded = false;  // verdicts from sampled checks only
};

/// Ideal laws, normality (a (+) I = I (+) a as sets) and maximality (every
/// proper extension generates M). Lazy backends are verified over a sample
/// and the verdicts are tagged bounded.
IdealClassification classify_ideal(const AlgebraPtr& algebra, const Ideal& ideal, int bound = 25);

struct MaximalIdeal {
    Ideal ideal;
    bool normal = false;
};

/// All maximal ideals of a finite algebra, canonical order, each flagged for
/// normality. Every ideal of a finite pseudo MV-algebra is generated by its
/// largest element (ideals are closed under join), so the principal ideals
/// exhaust the ideal lattice.
std::vector<MaximalIdeal> all_maximal_ideals(const AlgebraPtr& algebra);

struct QuotientResult {
    AlgebraPtr quotient;          // table algebra on the congruence classes
    std::vector<int> projection;  // carrier index -> class index
};

/// Quotient by the congruence x ~ y iff x (.) y^- and y (.) x^- both lie in
/// the (normal) ideal. Classes are named after their least representative.
/// The degenerate quotient by M itself is rejected since 0 = 1 there.
QuotientResult quotient(const AlgebraPtr& algebra, const Ideal& ideal);

}  // namespace pmv

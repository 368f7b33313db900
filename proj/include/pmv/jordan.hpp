#pragma once

#include "pmv/state.hpp"

#include <optional>
#include <utility>

namespace pmv {

/// R-signed measure on a finite algebra with a Q^n target: m(x+y) = m(x)+m(y)
/// whenever the partial sum is defined (so m(0) = 0). Additivity is validated
/// at construction. A measure is a pointwise nonnegative signed measure.
class SignedMeasure {
  public:
    SignedMeasure(AlgebraPtr algebra, RieszRep target, std::vector<Vec> values);

    static SignedMeasure zero(AlgebraPtr algebra, RieszRep target);
    static SignedMeasure from_state(const RState& s);

    const AlgebraPtr& algebra() const { return algebra_; }
    const RieszRep& target() const { return target_; }
    const std::vector<Vec>& values() const { return values_; }
    const Vec& value_at(int carrier_index) const { return values_.at(carrier_index); }

    bool is_measure() const;  // pointwise >= 0

    SignedMeasure operator+(const SignedMeasure& other) const;
    SignedMeasure operator-(const SignedMeasure& other) const;
    SignedMeasure negate() const;
    SignedMeasure scale(const Rat& a) const;
    bool operator==(const SignedMeasure& other) const { return values_ == other.values_; }
    bool operator!=(const SignedMeasure& other) const { return !(*this == other); }

  private:
    AlgebraPtr algebra_;
    RieszRep target_;
    std::vector<Vec> values_;
};

/// m1 <=+ m2 iff m2 - m1 is a measure; additive maps are measures exactly
/// when pointwise nonnegative, so this is the pointwise comparison.
bool leq_plus(const SignedMeasure& m1, const SignedMeasure& m2);

/// Subadditive map: d(0) = 0 and d(x+y) <= d(x) + d(y) on defined sums.
struct SubadditiveMap {
    AlgebraPtr algebra;
    RieszRep target;
    std::vector<Vec> values;
};

/// Validates and wraps a subadditive map.
SubadditiveMap make_subadditive(AlgebraPtr algebra, RieszRep target, std::vector<Vec> values);

/// The signed measure m(x) = sup{ d(x_1)+...+d(x_k) : x = x_1+...+x_k } over
/// all ordered decompositions into nonzero summands (k = 1 included).
/// Computed per component by the dynamic program
///   best(x) = max(d(x), max over defined splits x = y+z of best(y)+d(z)),
/// which covers every decomposition because the partial addition is
/// associative and prefixes of a decomposition are themselves defined.
/// The per-component maximum is the componentwise supremum since all
/// components range over the same decomposition set. The result is verified
/// additive.
SignedMeasure sup_from_subadditive(const SubadditiveMap& d);

/// Least upper bound of two signed measures in <=+ : the sup construction
/// applied to the pointwise join. Rejects lex targets (the lattice structure
/// needs a Dedekind complete target).
SignedMeasure lattice_sup(const SignedMeasure& m1, const SignedMeasure& m2);

/// Greatest lower bound: the dual (min) dynamic program applied to the
/// pointwise meet.
SignedMeasure lattice_inf(const SignedMeasure& m1, const SignedMeasure& m2);

/// m = m+ - m- with m+ = sup(m, 0) and m- = m+ - m; both parts are measures.
std::pair<SignedMeasure, SignedMeasure> jordan_decompose(const SignedMeasure& m);

/// Independent least-upper-bound oracle by exact linear programming:
/// minimize the total mass of an additive h with h >= m1, m2 pointwise.
/// The least upper bound m* satisfies m* <= h pointwise for every feasible h,
/// so it is the unique minimizer of the total-mass functional: any other
/// feasible h has sum h > sum m* unless h = m* everywhere. Solved per
/// coordinate (the constraints decouple).
SignedMeasure lub_oracle(const SignedMeasure& m1, const SignedMeasure& m2);

struct SimplexReport {
    bool empty = false;
    int vertex_count = 0;
    int affine_dimension = 0;
    bool is_simplex = false;
    bool is_bauer = false;
    std::optional<Vec> dependency_witness;  // affine dependency when not a simplex
    int components = 1;                     // product structure of the Q^n state space
};

/// Certification of the real state space: vertex count, affine dimension,
/// affine independence (simplex), closed finite extreme boundary (Bauer).
/// For Q^n targets the state space is the n-fold product of the real one;
/// `components` records n.
SimplexReport simplex_report(const AlgebraPtr& algebra, const RieszRep& target);

}  // namespace pmv

#pragma once

#include "pmv/algebra.hpp"
#include "pmv/ideal.hpp"
#include "pmv/linalg.hpp"

namespace pmv {

/// Exact H-representation of the real state space of a finite algebra:
/// one variable per carrier element, the equalities s(0)=0, s(1)=1 and
/// s(x)+s(y)=s(x+y) for every defined partial sum, plus bounds 0<=s(x)<=1.
struct StatePolytope {
    AlgebraPtr algebra;
    linalg::RowBasis equalities;  // reduced equality system over the carrier
    int dimension = 0;            // |carrier| - rank of the equality system
    bool consistent = false;      // equality system solvable at all
};

StatePolytope state_polytope(const AlgebraPtr& algebra);

/// Exact vertex enumeration by exhaustive active-set search in the affine
/// parameterization of the equality system. Returns the vertices as value
/// vectors over the carrier, duplicate-free, lexicographically sorted. An
/// empty result certifies statelessness. Throws CapExceeded when the
/// dimension or the candidate count exceeds the caps.
std::vector<Vec> enumerate_vertices(const StatePolytope& p, int max_dim = 12,
                                    unsigned long long candidate_cap = 2000000);

/// A Riesz-space-valued state: s(1) = 1_R, values in [0, 1_R], additive on
/// the partial addition. Finite backends store the full value table (carrier
/// order); the interval of Z lex Z carries the closed-form family
///   s_b(x1, x2) = (x1, b*x2),  b >= 0
/// instead.
class RState {
  public:
    /// Dense values, validated: unit at 1, range, additivity on all defined
    /// partial sums.
    static RState from_values(AlgebraPtr algebra, RieszRep target, std::vector<Vec> values);

    /// Q^n state assembled from n real states (each a carrier-length value
    /// column). Every column is validated as a real state.
    static RState from_components(AlgebraPtr algebra, const std::vector<Vec>& columns);

    /// The lex-interval family above; requires Gamma(Z lex Z, (1,0)) and
    /// b >= 0.
    static RState lex_family(AlgebraPtr algebra, Rat b);

    const AlgebraPtr& algebra() const { return algebra_; }
    const RieszRep& target() const { return target_; }
    bool lazy() const { return lazy_; }
    const Rat& family_b() const { return b_; }

    Vec operator()(const Elem& x) const;
    const Vec& value_at(int carrier_index) const;
    const std::vector<Vec>& values() const;
    /// Column i of the value table: the i-th component real state.
    Vec component(int i) const;

    bool operator==(const RState& other) const;

  private:
    RState(AlgebraPtr algebra, RieszRep target, std::vector<Vec> values, bool lazy, Rat b);

    AlgebraPtr algebra_;
    RieszRep target_;
    std::vector<Vec> values_;
    bool lazy_ = false;
    Rat b_;
};

enum class Verdict { yes, no, unknown };

std::string verdict_str(Verdict v);

struct StateClassification {
    bool is_state = false;
    Verdict is_morphism = Verdict::unknown;
    Verdict is_extremal = Verdict::unknown;
    Ideal kernel;
    IdealClassification kernel_class;
    Verdict kernel_maximal = Verdict::unknown;
    bool bounded = false;  // verdicts obtained from sampled checks
    std::string note;
};

/// Meet-preservation test s(x^y) = s(x)^s(y) over all pairs (a state is a
/// morphism exactly when it preserves meets).
bool preserves_meets(const RState& s);

/// Full homomorphism equations into Gamma(R, 1_R): oplus, both negations,
/// 0 and 1.
bool is_hom(const RState& s);

/// Morphism / extremality / kernel classification. Extremality over Q^n uses
/// the product-simplex characterization (every component is a vertex of the
/// real state polytope); over lex Q^2 only the interval family is classified
/// (extremal iff b = 0) and anything else reports unknown. Lazy backends are
/// checked over the canonical sample and tagged bounded.
StateClassification classify_r_state(const RState& s, int sample_bound = 25);

/// State-morphism of a (product of) chain(s) into Q^m from a Boolean
/// partition a_1,...,a_n of 1 in {0,1}^m:  s(x) = sum_i (x_i/k_i) a_i.
RState morphism_from_partition(const AlgebraPtr& algebra, const RieszRep& target,
                               const std::vector<Vec>& booleans);

/// All (R,1_R)-state-morphisms into Q^m of a finite algebra: exhaustive
/// search over the solution set of the homomorphism equations, pruned to the
/// real-state-polytope vertices componentwise (every Q^1 morphism is an
/// extremal real state, hence a vertex). Canonical order.
std::vector<RState> enumerate_r_morphisms(const AlgebraPtr& algebra, const RieszRep& target,
                                          std::size_t result_cap = 100000);

struct KernelQuotient {
    AlgebraPtr quotient;
    std::vector<int> projection;
    RState induced;  // s~([x]) = s(x); has trivial kernel
};

KernelQuotient quotient_by_kernel(const RState& s);

struct ConvexTerm {
    std::vector<int> vertex_per_component;  // index into the Q^1 vertex list
    Rat weight;
};

struct ConvexDecomposition {
    std::vector<Vec> q1_vertices;
    std::vector<ConvexTerm> terms;
};

/// Exact convex decomposition of a Q^n state into extremal states (tuples of
/// real-state vertices): per-component barycentric weights found by exact LP
/// feasibility, recombined by products. Reconstruction is verified exactly.
ConvexDecomposition convex_decompose(const RState& s, const std::vector<Vec>& q1_vertices);

/// The extremal Q^n state picked out by one decomposition term.
RState extremal_from_term(const AlgebraPtr& algebra, const std::vector<Vec>& q1_vertices,
                          const std::vector<int>& vertex_per_component);

}  // namespace pmv

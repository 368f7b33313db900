#pragma once

#include "pmv/linalg.hpp"
#include "pmv/state.hpp"

namespace pmv {

/// A state on the interval of a unital group Z^n, extended to the whole
/// group; carries the images of the standard basis vectors for kernel and
/// image-lattice work.
struct MetricContext {
    AlgebraPtr interval;             // Gamma algebra over Z^n
    RState state;                    // on the interval, Q^m target
    std::vector<Vec> basis_values;   // extension images of the group basis
};

/// Extends a state on Gamma(G, u) to the group G. Values of the extension
/// are computed by greedy unit-interval slicing: a positive g is peeled as
/// g ^ u, (g - g^u) ^ u, ... and a general g evaluates as the difference of
/// its positive and negative parts.
MetricContext extend_state(const RState& s);

/// The extension value at an arbitrary group element (greedy slicing).
Vec extended_value(const MetricContext& ctx, Vec g);

/// |g|_s = || extension(g) ||_{1_R}; the coordinate representation of Q^m is
/// the identity, so no embedding appears.
Rat pseudo_norm(const MetricContext& ctx, const Vec& g);

/// d_s(x, y) = |x - y|_s; a pseudo-metric, a metric exactly when the norm
/// kernel is trivial.
Rat dist(const MetricContext& ctx, const Vec& x, const Vec& y);

/// Integer basis (rows) of {x in Z^n : extension(x) = 0}, from the exact
/// integer kernel of the basis-image matrix.
linalg::IMat norm_kernel(const MetricContext& ctx);

/// Membership of a target vector in the Z-span of the basis images, i.e. in
/// the image subgroup of the extension.
bool image_member(const MetricContext& ctx, const Vec& value);

struct NormPropertyReport {
    struct Property {
        std::string name;
        long long checked = 0;
        bool passed = true;
        std::string counterexample;
    };
    std::vector<Property> properties;
    bool all_passed = true;

    const Property* find(const std::string& name) const;
};

/// The pseudo-norm laws over a sample of group elements, all exact:
///   (i)   |x+y|_s <= |x|_s + |y|_s
///   (ii)  per-coordinate |ext(x)(t) - ext(y)(t)| <= |x-y|_s
///   (iii) |nx|_s <= |n| |x|_s for n in [-3, 3]
///   (iv)  |-x|_s = |x|_s and |0|_s = 0
///   (v)   y >= 0 and -y <= x <= y imply |x|_s <= |y|_s
NormPropertyReport check_norm_properties(const MetricContext& ctx, const std::vector<Vec>& samples);

struct InterpolationCase {
    Vec x1, x2, y1, y2;  // image vectors with x1, x2 <= y1, y2 componentwise
};

struct InterpolationReport {
    long long checked = 0;
    long long passed = 0;
    std::vector<std::size_t> failures;  // indices of unsatisfied cases
    bool all_passed = true;
};

/// For each quadruple, tests the candidate interpolant z = x1 v x2
/// (componentwise) for image membership and z <= y1, y2. A failed candidate
/// is recorded, not patched.
InterpolationReport check_interpolation(const MetricContext& ctx,
                                        const std::vector<InterpolationCase>& quads);

}  // namespace pmv

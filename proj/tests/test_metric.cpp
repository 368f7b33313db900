#include "pmv/metric.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace pmv;
using pmv::testing::Q;

namespace {

Vec v1(long long a) { return Vec{Rat(a)}; }
Vec v2(long long a, long long b) { return Vec{Rat(a), Rat(b)}; }

// Unique state on Gamma(Z, 2): s(j) = j/2, extended.
MetricContext half_context() {
    const auto a = make_chain(2);
    return extend_state(RState::from_values(a, RieszRep::qn(1), {v1(0), Vec{Q(1, 2)}, v1(1)}));
}

// Identity-like faithful state on Gamma(Z^2, (2,2)) into Q^2.
MetricContext identity_context() {
    const auto a = make_gamma(UnitalGroup::zn(2, Vec{Rat(2), Rat(2)}));
    std::vector<Vec> values;
    for (const Elem& x : a->carrier())
        values.push_back(Vec{x.vec()[0] / 2, x.vec()[1] / 2});
    return extend_state(RState::from_values(a, RieszRep::qn(2), std::move(values)));
}

// Degenerate state (pi1/2, pi1/2) on the same algebra: kernel Z(0,1).
MetricContext degenerate_context() {
    const auto a = make_gamma(UnitalGroup::zn(2, Vec{Rat(2), Rat(2)}));
    std::vector<Vec> values;
    for (const Elem& x : a->carrier())
        values.push_back(Vec{x.vec()[0] / 2, x.vec()[0] / 2});
    return extend_state(RState::from_values(a, RieszRep::qn(2), std::move(values)));
}

std::vector<Vec> grid2(long long bound) {
    std::vector<Vec> out;
    for (long long a = -bound; a <= bound; ++a)
        for (long long b = -bound; b <= bound; ++b) out.push_back(v2(a, b));
    return out;
}

}  // namespace

TEST_CASE("state extension by unit slicing") {
    const MetricContext ctx = half_context();
    CHECK(extended_value(ctx, v1(5)) == Vec{Q(5, 2)});  // 5 = 2 + 2 + 1
    CHECK(extended_value(ctx, v1(-5)) == Vec{Q(-5, 2)});
    CHECK(extended_value(ctx, v1(0)) == Vec{Q(0)});
    CHECK(extended_value(ctx, v1(2)) == Vec{Q(1)});  // s(u) = 1_R

    // additivity of the extension on samples
    for (long long a = -6; a <= 6; ++a)
        for (long long b = -6; b <= 6; ++b) {
            const Vec va = extended_value(ctx, v1(a)), vb = extended_value(ctx, v1(b));
            CHECK(extended_value(ctx, v1(a + b)) == Vec{va[0] + vb[0]});
        }
    CHECK_THROWS_AS(extend_state(RState::lex_family(make_gamma(UnitalGroup::z2lex()), Q(1))),
                    std::invalid_argument);
}

TEST_CASE("extension is well-defined across alternative decompositions") {
    // random decompositions of positive elements into interval pieces sum to
    // the same value the greedy slicing produces
    const MetricContext ctx = identity_context();
    const auto& gamma = dynamic_cast<const GammaAlgebra&>(*ctx.interval);
    const UnitalGroup& grp = gamma.group();
    std::mt19937 rng(83);
    std::uniform_int_distribution<long long> coord(0, 9);
    for (int trial = 0; trial < 60; ++trial) {
        Vec g = v2(coord(rng), coord(rng));
        const Vec expected = extended_value(ctx, g);
        // peel random interval-sized pieces instead of maximal ones
        Vec total{Q(0), Q(0)};
        Vec rest = g;
        while (!vec_is_zero(rest)) {
            Vec piece(2);
            for (int i = 0; i < 2; ++i) {
                const long long avail = numerator(rmin(rest[i], grp.unit()[i])).convert_to<long long>();
                piece[i] = Rat(std::uniform_int_distribution<long long>(0, avail)(rng));
            }
            if (vec_is_zero(piece)) continue;
            total = vec_add(total, ctx.state(Elem::coords(piece)));
            rest = grp.sub(rest, piece);
        }
        CHECK(total == expected);
    }
}

TEST_CASE("distance obeys the pseudo-metric laws") {
    const MetricContext ctx = degenerate_context();
    const auto pts = grid2(2);
    for (const Vec& x : pts) {
        CHECK(dist(ctx, x, x) == 0);
        for (const Vec& y : pts) {
            CHECK(dist(ctx, x, y) == dist(ctx, y, x));
            for (const Vec& z : pts)
                CHECK(dist(ctx, x, z) <= dist(ctx, x, y) + dist(ctx, y, z));
        }
    }
}

TEST_CASE("extension is linear in the basis images") {
    const MetricContext ctx = identity_context();
    for (const Vec& g : grid2(4)) {
        Vec expect{Q(0), Q(0)};
        for (int i = 0; i < 2; ++i)
            for (int t = 0; t < 2; ++t) expect[t] += g[i] * ctx.basis_values[i][t];
        CHECK(extended_value(ctx, g) == expect);
    }
}

TEST_CASE("pseudo-norm and distance") {
    const MetricContext ctx = identity_context();
    CHECK(pseudo_norm(ctx, v2(1, 2)) == 1);  // max(1/2, 1)
    CHECK(pseudo_norm(ctx, v2(0, 0)) == 0);
    CHECK(dist(ctx, v2(3, 1), v2(3, 1)) == 0);
    CHECK(dist(ctx, v2(2, 0), v2(0, 0)) == 1);
}

TEST_CASE("norm kernel bases") {
    CHECK(norm_kernel(identity_context()).empty());
    const auto basis = norm_kernel(degenerate_context());
    REQUIRE(basis.size() == 1);
    CHECK((basis[0] == std::vector<Int>{Int(0), Int(1)} ||
           basis[0] == std::vector<Int>{Int(0), Int(-1)}));
    CHECK(norm_kernel(half_context()).empty());
}

TEST_CASE("pseudo-metric vs metric, both directions") {
    // trivial kernel: distance separates points on a grid
    const MetricContext faithful = identity_context();
    for (const Vec& x : grid2(3))
        for (const Vec& y : grid2(3))
            if (x != y) CHECK(dist(faithful, x, y) > 0);

    // engineered kernel: distance collapses exactly along the kernel
    const MetricContext degenerate = degenerate_context();
    const auto kernel = norm_kernel(degenerate);
    REQUIRE_FALSE(kernel.empty());
    CHECK(dist(degenerate, v2(1, 5), v2(1, -5)) == 0);
    CHECK(dist(degenerate, v2(1, 0), v2(0, 0)) > 0);
    // x - y in the kernel span iff distance zero
    for (const Vec& x : grid2(2))
        for (const Vec& y : grid2(2)) {
            const bool zero_dist = dist(degenerate, x, y) == 0;
            const bool in_kernel = (x[0] == y[0]);  // kernel = Z(0,1)
            CHECK(zero_dist == in_kernel);
        }
}

TEST_CASE("extension factors through the kernel") {
    const MetricContext ctx = degenerate_context();
    for (const Vec& x : grid2(2))
        for (const Vec& y : grid2(2))
            if (x[0] == y[0]) CHECK(extended_value(ctx, x) == extended_value(ctx, y));
}

TEST_CASE("norm properties pass on grids") {
    for (const MetricContext& ctx : {half_context(), identity_context(), degenerate_context()}) {
        std::vector<Vec> samples;
        if (ctx.basis_values.size() == 1) {
            for (long long a = -7; a <= 7; ++a) samples.push_back(v1(a));
        } else {
            samples = grid2(3);
        }
        const auto report = check_norm_properties(ctx, samples);
        CHECK(report.all_passed);
        REQUIRE(report.find("triangle") != nullptr);
        CHECK(report.find("triangle")->checked > 0);
        CHECK(report.find("order-monotonicity")->checked > 0);
    }
}

TEST_CASE("image membership and directedness") {
    const MetricContext ctx = identity_context();  // image = Z(1/2,0) + Z(0,1/2)
    CHECK(image_member(ctx, Vec{Q(1, 2), Q(0)}));
    CHECK(image_member(ctx, Vec{Q(3, 2), Q(-1)}));
    CHECK_FALSE(image_member(ctx, Vec{Q(1, 3), Q(0)}));
    // sampled image elements split as differences of nonnegative image values
    const auto grp = dynamic_cast<const GammaAlgebra&>(*ctx.interval).group();
    for (const Vec& g : grid2(3)) {
        const Vec pos = extended_value(ctx, grp.join(g, grp.zero()));
        const Vec neg = extended_value(ctx, grp.join(grp.neg(g), grp.zero()));
        CHECK(ctx.state.target().leq(ctx.state.target().zero(), pos));
        CHECK(ctx.state.target().leq(ctx.state.target().zero(), neg));
        CHECK(extended_value(ctx, g) == ctx.state.target().sub(pos, neg));
    }
}

TEST_CASE("interpolation in the image subgroup") {
    const MetricContext ctx = identity_context();
    // totally ordered pairs: interpolant is the max
    InterpolationCase ordered;
    ordered.x1 = Vec{Q(0), Q(0)};
    ordered.x2 = Vec{Q(1, 2), Q(1, 2)};
    ordered.y1 = Vec{Q(1), Q(1)};
    ordered.y2 = Vec{Q(3, 2), Q(1, 2)};
    // the worked quadruple: ((0,0),(1/2,-1/2)) <= ((1/2,1/2),(1,0))
    InterpolationCase worked;
    worked.x1 = Vec{Q(0), Q(0)};
    worked.x2 = Vec{Q(1, 2), Q(-1, 2)};
    worked.y1 = Vec{Q(1, 2), Q(1, 2)};
    worked.y2 = Vec{Q(1), Q(0)};
    // degenerate x1 = y1
    InterpolationCase degen;
    degen.x1 = degen.x2 = degen.y1 = degen.y2 = Vec{Q(1, 2), Q(0)};

    const auto report = check_interpolation(ctx, {ordered, worked, degen});
    CHECK(report.checked == 3);
    CHECK(report.passed == 3);
    CHECK(report.all_passed);

    // precondition violations are rejected
    InterpolationCase bad;
    bad.x1 = Vec{Q(1), Q(1)};
    bad.x2 = Vec{Q(0), Q(0)};
    bad.y1 = Vec{Q(0), Q(0)};
    bad.y2 = Vec{Q(0), Q(0)};
    CHECK_THROWS_AS(check_interpolation(ctx, {bad}), std::invalid_argument);
}

TEST_CASE("random interpolation quadruples certify the identity context") {
    const MetricContext ctx = identity_context();
    const auto grp = dynamic_cast<const GammaAlgebra&>(*ctx.interval).group();
    std::mt19937 rng(71);
    std::uniform_int_distribution<long long> coord(-5, 5), bump(0, 3);
    std::vector<InterpolationCase> quads;
    for (int i = 0; i < 100; ++i) {
        const Vec g1 = v2(coord(rng), coord(rng)), g2x = v2(coord(rng), coord(rng));
        const Vec top = grp.join(g1, g2x);
        InterpolationCase q;
        q.x1 = extended_value(ctx, g1);
        q.x2 = extended_value(ctx, g2x);
        q.y1 = extended_value(ctx, grp.add(top, v2(bump(rng), bump(rng))));
        q.y2 = extended_value(ctx, grp.add(top, v2(bump(rng), bump(rng))));
        quads.push_back(std::move(q));
    }
    CHECK(check_interpolation(ctx, quads).all_passed);
}

#include "pmv/jordan.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace pmv;
using pmv::testing::Q;

namespace {

AlgebraPtr luk_square() { return make_product({make_chain(1), make_chain(1)}); }

// Signed measure on L1^2 with prescribed Q^1 values at the two atoms.
SignedMeasure atom_measure(const AlgebraPtr& a, const Rat& at_e1, const Rat& at_e2) {
    // carrier order: (0,0), (0,1), (1,0), (1,1)
    return SignedMeasure(a, RieszRep::qn(1),
                         {Vec{Q(0)}, Vec{at_e2}, Vec{at_e1}, Vec{at_e1 + at_e2}});
}

}  // namespace

TEST_CASE("measure order is the pointwise order") {
    const auto a = luk_square();
    const SignedMeasure m1 = atom_measure(a, Q(2), Q(0));
    const SignedMeasure m2 = atom_measure(a, Q(0), Q(2));
    CHECK(leq_plus(m1, m1));
    CHECK_FALSE(leq_plus(m1, m2));
    CHECK_FALSE(leq_plus(m2, m1));
    const SignedMeasure s = atom_measure(a, Q(1), Q(1));
    CHECK(s.is_measure());
    CHECK(leq_plus(m1, m1 + s));
}

TEST_CASE("sup of a subadditive map via decompositions") {
    const auto a = luk_square();
    // d(e1) = d(e2) = d(1) = 2: D(1) = {2, 4}, so m(1) = 4
    const SubadditiveMap d =
        make_subadditive(a, RieszRep::qn(1), {Vec{Q(0)}, Vec{Q(2)}, Vec{Q(2)}, Vec{Q(2)}});
    const SignedMeasure m = sup_from_subadditive(d);
    CHECK(m.values() == std::vector<Vec>{Vec{Q(0)}, Vec{Q(2)}, Vec{Q(2)}, Vec{Q(4)}});

    // an additive d is its own sup
    const SignedMeasure add = atom_measure(a, Q(1, 2), Q(3));
    const SubadditiveMap d2 = make_subadditive(a, RieszRep::qn(1), add.values());
    CHECK(sup_from_subadditive(d2) == add);

    // zero map
    const SubadditiveMap z = make_subadditive(a, RieszRep::qn(1),
                                              std::vector<Vec>(4, Vec{Q(0)}));
    CHECK(sup_from_subadditive(z) == SignedMeasure::zero(a, RieszRep::qn(1)));

    // non-subadditive input is rejected
    CHECK_THROWS_AS(
        make_subadditive(a, RieszRep::qn(1), {Vec{Q(0)}, Vec{Q(0)}, Vec{Q(0)}, Vec{Q(1)}}),
        std::invalid_argument);
}

TEST_CASE("lattice sup and inf on the worked pair") {
    const auto a = luk_square();
    const SignedMeasure m1 = atom_measure(a, Q(2), Q(0));
    const SignedMeasure m2 = atom_measure(a, Q(0), Q(2));
    const SignedMeasure sup = lattice_sup(m1, m2);
    CHECK(sup == atom_measure(a, Q(2), Q(2)));  // sup(1) = 4
    CHECK(lub_oracle(m1, m2) == sup);

    const SignedMeasure inf = lattice_inf(m1, m2);
    CHECK(inf == atom_measure(a, Q(0), Q(0)));

    // comparable pair
    const SignedMeasure small = atom_measure(a, Q(1), Q(1));
    const SignedMeasure big = atom_measure(a, Q(2), Q(3));
    CHECK(lattice_sup(small, big) == big);
    CHECK(lattice_inf(small, big) == small);
    // inf with 0 of a measure is 0
    CHECK(lattice_inf(big, SignedMeasure::zero(a, RieszRep::qn(1))) ==
          SignedMeasure::zero(a, RieszRep::qn(1)));
    // oracle trivial cases
    CHECK(lub_oracle(big, big) == big);
    CHECK(lub_oracle(small, big) == big);
}

TEST_CASE("jordan decomposition") {
    const auto a = luk_square();
    const SignedMeasure m = atom_measure(a, Q(1), Q(-1));
    const auto [plus, minus] = jordan_decompose(m);
    CHECK(plus == atom_measure(a, Q(1), Q(0)));
    CHECK(minus == atom_measure(a, Q(0), Q(1)));
    CHECK(plus - minus == m);
    CHECK(lattice_inf(plus, minus) == SignedMeasure::zero(a, RieszRep::qn(1)));

    const SignedMeasure pos = atom_measure(a, Q(3), Q(1, 2));
    const auto [p2, m2] = jordan_decompose(pos);
    CHECK(p2 == pos);
    CHECK(m2 == SignedMeasure::zero(a, RieszRep::qn(1)));
    const auto [p3, m3] = jordan_decompose(pos.negate());
    CHECK(p3 == SignedMeasure::zero(a, RieszRep::qn(1)));
    CHECK(m3 == pos);
}

TEST_CASE("dp sup equals the brute-force decomposition oracle") {
    std::mt19937 rng(51);
    for (const auto& a : {make_chain(5), luk_square(),
                          make_product({make_chain(2), make_chain(2)}),
                          make_product({make_chain(1), make_chain(1), make_chain(1)})}) {
        for (int trial = 0; trial < 12; ++trial) {
            const SubadditiveMap d = pmv::testing::random_subadditive(rng, a, 2);
            const SignedMeasure m = sup_from_subadditive(d);
            const auto brute = pmv::testing::decomposition_sup_bruteforce(a, d.values, true);
            CHECK(m.values() == brute);
        }
    }
}

TEST_CASE("lattice sup agrees with the lp oracle on random pairs") {
    std::mt19937 rng(53);
    for (const auto& a : {luk_square(), make_product({make_chain(2), make_chain(3)})}) {
        const auto verts = enumerate_vertices(state_polytope(a));
        for (int trial = 0; trial < 25; ++trial) {
            const auto m1 = pmv::testing::random_signed_measure(rng, a, verts, 2);
            const auto m2 = pmv::testing::random_signed_measure(rng, a, verts, 2);
            const SignedMeasure sup = lattice_sup(m1, m2);
            CHECK(sup == lub_oracle(m1, m2));
            CHECK(leq_plus(m1, sup));
            CHECK(leq_plus(m2, sup));
            // inf duality
            CHECK(lattice_inf(m1, m2) == lattice_sup(m1.negate(), m2.negate()).negate());
        }
    }
}

TEST_CASE("riesz space laws for jordan measures") {
    std::mt19937 rng(59);
    const auto a = luk_square();
    const auto verts = enumerate_vertices(state_polytope(a));
    std::uniform_int_distribution<long long> lam(0, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const auto m1 = pmv::testing::random_signed_measure(rng, a, verts, 2);
        const auto m2 = pmv::testing::random_signed_measure(rng, a, verts, 2);
        const auto m3 = pmv::testing::random_signed_measure(rng, a, verts, 2);
        CHECK(lattice_sup(m1, m2) == lattice_sup(m2, m1));
        CHECK(lattice_sup(lattice_sup(m1, m2), m3) == lattice_sup(m1, lattice_sup(m2, m3)));
        CHECK(lattice_sup(m1, lattice_inf(m1, m2)) == m1);
        CHECK(lattice_inf(m1, lattice_sup(m1, m2)) == m1);
        CHECK(lattice_sup(m1 + m3, m2 + m3) == lattice_sup(m1, m2) + m3);
        const Rat alpha = Q(lam(rng), 2);
        CHECK(lattice_sup(m1.scale(alpha), m2.scale(alpha)) == lattice_sup(m1, m2).scale(alpha));
        // m+ ^ m- = 0
        const auto [plus, minus] = jordan_decompose(m1);
        CHECK(lattice_inf(plus, minus) == SignedMeasure::zero(a, RieszRep::qn(2)));
        CHECK(plus - minus == m1);
    }
}

TEST_CASE("states are exactly the measures with unit total mass") {
    std::mt19937 rng(61);
    const auto a = make_product({make_chain(2), make_chain(2)});
    const auto verts = enumerate_vertices(state_polytope(a));
    const DenseTables& t = a->dense();
    for (int trial = 0; trial < 20; ++trial) {
        const RState s = pmv::testing::random_r_state(rng, a, verts, 2);
        const SignedMeasure m = SignedMeasure::from_state(s);
        CHECK(m.is_measure());
        CHECK(m.value_at(t.one) == m.target().unit());
        // scaling to non-unit mass leaves the state polytope
        CHECK(m.scale(Q(2)).value_at(t.one) != m.target().unit());
    }
    // a measure with m(1) = 1_R has all values in [0,1] and is a state table
    const SignedMeasure m = SignedMeasure::from_state(
        pmv::testing::random_r_state(rng, a, verts, 1));
    for (const Vec& v : m.values()) CHECK(m.target().in_unit_interval(v));
    CHECK_NOTHROW(RState::from_values(a, m.target(), m.values()));
}

TEST_CASE("simplex certification") {
    // S(L_2^3): 3 affinely independent vertices, dimension 2
    const auto cube2 = make_product({make_chain(2), make_chain(2), make_chain(2)});
    const auto rep = simplex_report(cube2, RieszRep::qn(1));
    CHECK_FALSE(rep.empty);
    CHECK(rep.vertex_count == 3);
    CHECK(rep.affine_dimension == 2);
    CHECK(rep.is_simplex);
    CHECK(rep.is_bauer);

    for (int k = 1; k <= 3; ++k) {
        const auto chain_rep = simplex_report(make_chain(k), RieszRep::qn(1));
        CHECK(chain_rep.vertex_count == 1);
        CHECK(chain_rep.affine_dimension == 0);
        CHECK(chain_rep.is_simplex);
    }

    const auto square = simplex_report(luk_square(), RieszRep::qn(2));
    CHECK(square.is_simplex);
    CHECK(square.components == 2);
    CHECK(square.vertex_count == 2);
}

TEST_CASE("lex targets are rejected by the lattice machinery") {
    const auto a = luk_square();
    CHECK_THROWS_AS(
        SignedMeasure(a, RieszRep::lexq2(), std::vector<Vec>(4, Vec{Q(0), Q(0)})),
        std::invalid_argument);
    CHECK_THROWS_AS(simplex_report(a, RieszRep::lexq2()), std::invalid_argument);
}

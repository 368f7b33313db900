#include "pmv/lp.hpp"

#include <doctest.h>

#include <optional>
#include <random>

using namespace pmv;

TEST_CASE("simplex solves small equality-form programs") {
    // min x0 + 2 x1  s.t.  x0 + x1 = 1
    const auto res = lp::solve({{Rat(1), Rat(1)}}, {Rat(1)}, {Rat(1), Rat(2)});
    REQUIRE(res.status == lp::Status::optimal);
    CHECK(res.objective == 1);
    CHECK(res.x == Vec{Rat(1), Rat(0)});
}

TEST_CASE("simplex detects infeasibility") {
    // x0 + x1 = -1 with x >= 0
    const auto res = lp::solve({{Rat(1), Rat(1)}}, {Rat(-1)}, {Rat(1), Rat(1)});
    CHECK(res.status == lp::Status::infeasible);
}

TEST_CASE("simplex detects unboundedness") {
    // min -x0 s.t. x0 - x1 = 0
    const auto res = lp::solve({{Rat(1), Rat(-1)}}, {Rat(0)}, {Rat(-1), Rat(0)});
    CHECK(res.status == lp::Status::unbounded);
}

TEST_CASE("simplex handles redundant and fractional data") {
    // x0 + x1 = 1 duplicated, x1 = 1/3
    linalg::Mat a = {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}, {Rat(0), Rat(1)}};
    Vec b = {Rat(1), Rat(2), Rat(1) / 3};
    const auto res = lp::solve(a, b, {Rat(5), Rat(7)});
    REQUIRE(res.status == lp::Status::optimal);
    CHECK(res.x == Vec{Rat(2) / 3, Rat(1) / 3});
    CHECK(res.objective == Rat(5) * (Rat(2) / 3) + Rat(7) / 3);
}

TEST_CASE("feasible_point finds exact convex weights") {
    // weights on three points of Q^1: 0, 1/2, 1 reproducing 1/3 with sum 1
    linalg::Mat a = {{Rat(0), Rat(1) / 2, Rat(1)}, {Rat(1), Rat(1), Rat(1)}};
    const auto res = lp::feasible_point(a, {Rat(1) / 3, Rat(1)});
    REQUIRE(res.status == lp::Status::optimal);
    Rat total(0), value(0);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(res.x[i] >= 0);
        total += res.x[i];
    }
    value = res.x[1] / 2 + res.x[2];
    CHECK(total == 1);
    CHECK(value == Rat(1) / 3);
}

namespace {

// Brute-force oracle: minimum objective over all basic solutions of
// a x = b, x >= 0 (choose column subsets, solve, keep feasible points).
std::optional<Rat> brute_force_lp(const linalg::Mat& a, const Vec& b, const Vec& c) {
    const std::size_t m = a.size(), n = c.size();
    std::optional<Rat> best;
    // iterate subsets of columns of size <= m
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (1u << j)) cols.push_back(j);
        if (cols.size() > m) continue;
        linalg::Mat sub(m, Vec(cols.size()));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) sub[i][j] = a[i][cols[j]];
        const auto sol = linalg::solve_affine(sub, b);
        if (!sol.consistent || !sol.null_basis.empty()) continue;
        bool nonneg = true;
        for (const Rat& v : sol.particular)
            if (v < 0) nonneg = false;
        if (!nonneg) continue;
        Rat obj(0);
        for (std::size_t j = 0; j < cols.size(); ++j) obj += c[cols[j]] * sol.particular[j];
        if (!best || obj < *best) best = obj;
    }
    return best;
}

}  // namespace

TEST_CASE("simplex optimum matches the basic-solution brute force") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> entry(-2, 3);
    int solved = 0;
    for (int trial = 0; trial < 200 && solved < 60; ++trial) {
        const std::size_t m = 2, n = 5;
        linalg::Mat a(m, Vec(n));
        Vec p(n), c(n);
        for (auto& row : a)
            for (auto& e : row) e = entry(rng);
        for (auto& e : p) e = Rat(std::uniform_int_distribution<int>(0, 2)(rng));
        for (auto& e : c) e = entry(rng);
        Vec b(m, Rat(0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) b[i] += a[i][j] * p[j];
        const auto res = lp::solve(a, b, c);
        if (res.status != lp::Status::optimal) continue;  // unbounded cases skipped
        const auto brute = brute_force_lp(a, b, c);
        REQUIRE(brute.has_value());  // a feasible bounded LP has an optimal basic solution
        CHECK(res.objective == *brute);
        ++solved;
    }
    CHECK(solved >= 40);
}

TEST_CASE("random feasible programs: optimum is feasible and not above sampled points") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> entry(-3, 3), dim(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4, m = dim(rng);
        // build A, pick a known nonnegative point p, set b = A p
        linalg::Mat a(m, Vec(n));
        Vec p(n), c(n);
        for (auto& row : a)
            for (auto& e : row) e = entry(rng);
        for (auto& e : p) e = Rat(std::uniform_int_distribution<int>(0, 3)(rng));
        for (auto& e : c) e = entry(rng);
        Vec b(m, Rat(0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) b[i] += a[i][j] * p[j];
        const auto res = lp::solve(a, b, c);
        REQUIRE(res.status != lp::Status::infeasible);  // p is feasible
        if (res.status != lp::Status::optimal) continue;
        // feasibility of the reported point
        for (int i = 0; i < m; ++i) {
            Rat dot(0);
            for (int j = 0; j < n; ++j) dot += a[i][j] * res.x[j];
            CHECK(dot == b[i]);
        }
        for (int j = 0; j < n; ++j) CHECK(res.x[j] >= 0);
        // optimality against the sampled feasible point
        Rat at_p(0);
        for (int j = 0; j < n; ++j) at_p += c[j] * p[j];
        CHECK(res.objective <= at_p);
    }
}

#include "pmv/jordan.hpp"

#include "pmv/lp.hpp"

#include <algorithm>
#include <functional>

namespace pmv {

SignedMeasure::SignedMeasure(AlgebraPtr algebra, RieszRep target, std::vector<Vec> values)
    : algebra_(std::move(algebra)), target_(std::move(target)), values_(std::move(values)) {
    if (target_.kind() != RieszKind::qn)
        throw std::invalid_argument("SignedMeasure: target must be Q^n");
    const DenseTables& t = algebra_->dense();
    if (values_.size() != static_cast<std::size_t>(t.n))
        throw std::invalid_argument("SignedMeasure: one value per carrier element required");
    for (const Vec& v : values_) target_.require_element(v);
    for (int x = 0; x < t.n; ++x)
        for (int y = 0; y < t.n; ++y) {
            const int s = t.op(t.padd, x, y);
            if (s < 0) continue;
            if (values_[s] != target_.add(values_[x], values_[y]))
                throw std::invalid_argument("SignedMeasure: not additive on the partial addition");
        }
}

SignedMeasure SignedMeasure::zero(AlgebraPtr algebra, RieszRep target) {
    const std::size_t n = algebra->size();
    return SignedMeasure(std::move(algebra), target, std::vector<Vec>(n, target.zero()));
}

SignedMeasure SignedMeasure::from_state(const RState& s) {
    return SignedMeasure(s.algebra(), s.target(), s.values());
}

bool SignedMeasure::is_measure() const {
    for (const Vec& v : values_)
        if (!target_.leq(target_.zero(), v)) return false;
    return true;
}

SignedMeasure SignedMeasure::operator+(const SignedMeasure& other) const {
    if (algebra_ != other.algebra_ || !(target_ == other.target_))
        throw std::invalid_argument("SignedMeasure: mismatched domains");
    std::vector<Vec> v(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
        v[i] = target_.add(values_[i], other.values_[i]);
    return SignedMeasure(algebra_, target_, std::move(v));
}

SignedMeasure SignedMeasure::operator-(const SignedMeasure& other) const {
    return *this + other.negate();
}

SignedMeasure SignedMeasure::negate() const {
    std::vector<Vec> v(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) v[i] = target_.neg(values_[i]);
    return SignedMeasure(algebra_, target_, std::move(v));
}

SignedMeasure SignedMeasure::scale(const Rat& a) const {
    std::vector<Vec> v(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) v[i] = target_.scale(a, values_[i]);
    return SignedMeasure(algebra_, target_, std::move(v));
}

bool leq_plus(const SignedMeasure& m1, const SignedMeasure& m2) {
    if (m1.algebra() != m2.algebra() || !(m1.target() == m2.target()))
        throw std::invalid_argument("leq_plus: mismatched domains");
    for (std::size_t i = 0; i < m1.values().size(); ++i)
        if (!m1.target().leq(m1.values()[i], m2.values()[i])) return false;
    return true;
}

SubadditiveMap make_subadditive(AlgebraPtr algebra, RieszRep target, std::vector<Vec> values) {
    if (target.kind() != RieszKind::qn)
        throw std::invalid_argument("make_subadditive: target must be Q^n");
    const DenseTables& t = algebra->dense();
    if (values.size() != static_cast<std::size_t>(t.n))
        throw std::invalid_argument("make_subadditive: one value per carrier element required");
    for (const Vec& v : values) target.require_element(v);
    if (!vec_is_zero(values[t.zero]))
        throw std::invalid_argument("make_subadditive: d(0) must be 0");
    for (int x = 0; x < t.n; ++x)
        for (int y = 0; y < t.n; ++y) {
            const int s = t.op(t.padd, x, y);
            if (s < 0) continue;
            if (!target.leq(values[s], target.add(values[x], values[y])))
                throw std::invalid_argument("make_subadditive: d(x+y) <= d(x)+d(y) violated");
        }
    return {std::move(algebra), std::move(target), std::move(values)};
}

namespace {

// Nonzero splits x = y + z, bucketed by x.
std::vector<std::vector<std::pair<int, int>>> partial_splits(const DenseTables& t) {
    std::vector<std::vector<std::pair<int, int>>> splits(t.n);
    for (int y = 0; y < t.n; ++y) {
        if (y == t.zero) continue;
        for (int z = 0; z < t.n; ++z) {
            if (z == t.zero) continue;
            const int s = t.op(t.padd, y, z);
            if (s >= 0) splits[s].push_back({y, z});
        }
    }
    return splits;
}

// best(x) over ordered decompositions of x into nonzero summands, per
// component; maximize = true gives the supremum form, false the dual.
std::vector<Vec> decomposition_opt(const Algebra& algebra, const std::vector<Vec>& d,
                                   bool maximize) {
    const DenseTables& t = algebra.dense();
    const int dim = static_cast<int>(d.empty() ? 0 : d[0].size());
    const auto splits = partial_splits(t);
    std::vector<Vec> best(t.n);
    std::vector<char> done(t.n, 0);
    const std::function<const Vec&(int)> rec = [&](int x) -> const Vec& {
        if (done[x]) return best[x];
        Vec b = d[x];
        for (const auto& [y, z] : splits[x]) {
            const Vec& via = rec(y);  // y < x strictly, so the recursion is well-founded
            for (int c = 0; c < dim; ++c) {
                const Rat cand = via[c] + d[z][c];
                if (maximize ? cand > b[c] : cand < b[c]) b[c] = cand;
            }
        }
        best[x] = std::move(b);
        done[x] = 1;
        return best[x];
    };
    for (int x = 0; x < t.n; ++x) rec(x);
    return best;
}

void require_same_domain(const SignedMeasure& m1, const SignedMeasure& m2, const char* where) {
    if (m1.algebra() != m2.algebra() || !(m1.target() == m2.target()))
        throw std::invalid_argument(std::string(where) + ": mismatched domains");
}

}  // namespace

SignedMeasure sup_from_subadditive(const SubadditiveMap& d) {
    std::vector<Vec> best = decomposition_opt(*d.algebra, d.values, true);
    return SignedMeasure(d.algebra, d.target, std::move(best));
}

SignedMeasure lattice_sup(const SignedMeasure& m1, const SignedMeasure& m2) {
    require_same_domain(m1, m2, "lattice_sup");
    std::vector<Vec> join(m1.values().size());
    for (std::size_t i = 0; i < join.size(); ++i)
        join[i] = m1.target().join(m1.values()[i], m2.values()[i]);
    SignedMeasure sup = sup_from_subadditive(make_subadditive(m1.algebra(), m1.target(), join));
    if (!leq_plus(m1, sup) || !leq_plus(m2, sup))
        throw std::logic_error("lattice_sup: result is not an upper bound");
    return sup;
}

SignedMeasure lattice_inf(const SignedMeasure& m1, const SignedMeasure& m2) {
    require_same_domain(m1, m2, "lattice_inf");
    std::vector<Vec> meet(m1.values().size());
    for (std::size_t i = 0; i < meet.size(); ++i)
        meet[i] = m1.target().meet(m1.values()[i], m2.values()[i]);
    std::vector<Vec> best = decomposition_opt(*m1.algebra(), meet, false);
    SignedMeasure inf(m1.algebra(), m1.target(), std::move(best));
    if (!leq_plus(inf, m1) || !leq_plus(inf, m2))
        throw std::logic_error("lattice_inf: result is not a lower bound");
    return inf;
}

std::pair<SignedMeasure, SignedMeasure> jordan_decompose(const SignedMeasure& m) {
    const SignedMeasure plus = lattice_sup(m, SignedMeasure::zero(m.algebra(), m.target()));
    const SignedMeasure minus = plus - m;
    if (!plus.is_measure() || !minus.is_measure())
        throw std::logic_error("jordan_decompose: parts must be measures");
    return {plus, minus};
}

SignedMeasure lub_oracle(const SignedMeasure& m1, const SignedMeasure& m2) {
    require_same_domain(m1, m2, "lub_oracle");
    const DenseTables& t = m1.algebra()->dense();
    const int n = t.n;
    const int dim = m1.target().dim();

    std::vector<Vec> h(n, Vec(dim));
    for (int comp = 0; comp < dim; ++comp) {
        // Shift h = g + lb with lb the pointwise join, so g >= 0; minimize
        // the total mass sum_x g(x) over additive h.
        Vec lb(n);
        for (int x = 0; x < n; ++x)
            lb[x] = rmax(m1.values()[x][comp], m2.values()[x][comp]);
        linalg::Mat rows;
        Vec rhs;
        {
            Vec row(n, Rat(0));
            row[t.zero] = 1;
            rows.push_back(row);
            rhs.push_back(-lb[t.zero]);
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                const int s = t.op(t.padd, x, y);
                if (s < 0) continue;
                Vec row(n, Rat(0));
                row[s] += 1;
                row[x] -= 1;
                row[y] -= 1;
                rows.push_back(std::move(row));
                rhs.push_back(lb[x] + lb[y] - lb[s]);
            }
        const auto res = lp::solve(rows, rhs, Vec(n, Rat(1)));
        if (res.status != lp::Status::optimal)
            throw std::logic_error("lub_oracle: least upper bound LP must be solvable");
        for (int x = 0; x < n; ++x) h[x][comp] = res.x[x] + lb[x];
    }
    SignedMeasure out(m1.algebra(), m1.target(), std::move(h));
    if (!leq_plus(m1, out) || !leq_plus(m2, out))
        throw std::logic_error("lub_oracle: result is not an upper bound");
    return out;
}

SimplexReport simplex_report(const AlgebraPtr& algebra, const RieszRep& target) {
    if (target.kind() != RieszKind::qn)
        throw std::invalid_argument("simplex_report: target must be Q^n");
    SimplexReport rep;
    rep.components = target.dim();
    const auto vertices = enumerate_vertices(state_polytope(algebra));
    rep.vertex_count = static_cast<int>(vertices.size());
    if (vertices.empty()) {
        rep.empty = true;
        return rep;
    }
    rep.affine_dimension = linalg::affine_rank(vertices);
    const auto dependency = linalg::affine_dependency(vertices);
    rep.is_simplex = !dependency.has_value();
    rep.dependency_witness = dependency;
    rep.is_bauer = true;  // finite extreme set is closed
    return rep;
}

}  // namespace pmv

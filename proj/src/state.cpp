#include "pmv/state.hpp"

#include "pmv/lp.hpp"

#include <algorithm>

namespace pmv {

StatePolytope state_polytope(const AlgebraPtr& algebra) {
    const DenseTables& t = algebra->dense();
    const int n = t.n;
    StatePolytope p{algebra, linalg::RowBasis(static_cast<std::size_t>(n)), 0, false};

    Vec row(n, Rat(0));
    row[t.zero] = 1;
    p.equalities.insert(row, Rat(0));
    std::fill(row.begin(), row.end(), Rat(0));
    row[t.one] = 1;
    p.equalities.insert(row, Rat(1));
    // All ordered pairs: x+y defined need not make y+x defined (or equal)
    // outside the commutative case. Redundant rows die in the basis.
    for (int x = 0; x < n; ++x) {
        if (x == t.zero) continue;
        for (int y = 0; y < n; ++y) {
            if (y == t.zero) continue;
            const int s = t.op(t.padd, x, y);
            if (s < 0) continue;
            std::fill(row.begin(), row.end(), Rat(0));
            row[x] += 1;
            row[y] += 1;
            row[s] -= 1;
            if (!vec_is_zero(row)) p.equalities.insert(row, Rat(0));
        }
    }
    p.consistent = p.equalities.consistent();
    p.dimension = n - p.equalities.rank();
    return p;
}

namespace {

// One inequality a.t >= rhs in the nullspace parameterization.
struct IneqRow {
    Vec a;
    Rat rhs;
};

unsigned long long binomial_capped(unsigned long long n, unsigned long long k,
                                   unsigned long long cap) {
    if (k > n) return 0;
    unsigned long long r = 1;
    for (unsigned long long i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);
        if (r > cap) return cap + 1;
    }
    return r;
}

}  // namespace

std::vector<Vec> enumerate_vertices(const StatePolytope& p, int max_dim,
                                    unsigned long long candidate_cap) {
    if (!p.consistent) return {};
    const int n = static_cast<int>(p.equalities.cols());
    const Vec base = p.equalities.particular_solution();
    const std::vector<Vec> null_basis = p.equalities.nullspace_basis();
    const int d = static_cast<int>(null_basis.size());
    if (d > max_dim)
        throw CapExceeded("enumerate_vertices: dimension " + std::to_string(d) +
                          " exceeds cap " + std::to_string(max_dim));

    const auto in_bounds = [](const Rat& v) { return v >= 0 && v <= 1; };
    if (d == 0) {
        for (const Rat& v : base)
            if (!in_bounds(v)) return {};
        return {base};
    }

    // Bounds 0 <= s_i <= 1 become inequalities over the d parameters; rows
    // are normalized (first nonzero coefficient has absolute value 1) and
    // merged keeping the tightest right-hand side.
    std::map<Vec, Rat> tight;
    for (int i = 0; i < n; ++i) {
        Vec a(d);
        for (int j = 0; j < d; ++j) a[j] = null_basis[j][i];
        if (vec_is_zero(a)) {
            if (!in_bounds(base[i])) return {};
            continue;
        }
        const auto push = [&](Vec coeff, Rat rhs) {
            Rat scale(0);
            for (const Rat& c : coeff)
                if (c != 0) { scale = rabs(c); break; }
            for (Rat& c : coeff) c /= scale;
            rhs /= scale;
            const auto it = tight.find(coeff);
            if (it == tight.end())
                tight.emplace(std::move(coeff), std::move(rhs));
            else
                it->second = rmax(it->second, rhs);
        };
        push(a, Rat(-base[i]));            //  a.t >= -p_i      (s_i >= 0)
        push(vec_neg(a), base[i] - 1);     // -a.t >= p_i - 1   (s_i <= 1)
    }
    std::vector<IneqRow> rows;
    rows.reserve(tight.size());
    for (auto& [a, rhs] : tight) rows.push_back({a, rhs});

    const unsigned long long r = rows.size();
    if (binomial_capped(r, d, candidate_cap) > candidate_cap)
        throw CapExceeded("enumerate_vertices: candidate active sets exceed cap");

    std::vector<Vec> found;
    std::vector<int> pick(d);
    for (int i = 0; i < d; ++i) pick[i] = i;
    const auto advance = [&]() {
        int i = d - 1;
        while (i >= 0 && pick[i] == static_cast<int>(r) - d + i) --i;
        if (i < 0) return false;
        ++pick[i];
        for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
        return true;
    };
    if (static_cast<int>(r) >= d) do {
        linalg::Mat sys(d, Vec(d));
        Vec rhs(d);
        for (int i = 0; i < d; ++i) {
            sys[i] = rows[pick[i]].a;
            rhs[i] = rows[pick[i]].rhs;
        }
        const auto sol = linalg::solve_affine(sys, rhs);
        if (!sol.consistent || !sol.null_basis.empty()) continue;
        bool feasible = true;
        for (const IneqRow& row : rows) {
            Rat lhs(0);
            for (int j = 0; j < d; ++j) lhs += row.a[j] * sol.particular[j];
            if (lhs < row.rhs) { feasible = false; break; }
        }
        if (!feasible) continue;
        Vec s = base;
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < n; ++i) s[i] += sol.particular[j] * null_basis[j][i];
        found.push_back(std::move(s));
    } while (advance());

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

// ---- RState ----------------------------------------------------------------

RState::RState(AlgebraPtr algebra, RieszRep target, std::vector<Vec> values, bool lazy, Rat b)
    : algebra_(std::move(algebra)),
      target_(std::move(target)),
      values_(std::move(values)),
      lazy_(lazy),
      b_(std::move(b)) {}

RState RState::from_values(AlgebraPtr algebra, RieszRep target, std::vector<Vec> values) {
    const DenseTables& t = algebra->dense();
    if (values.size() != static_cast<std::size_t>(t.n))
        throw std::invalid_argument("RState: one value per carrier element required");
    for (const Vec& v : values) target.require_element(v);
    if (values[t.one] != target.unit())
        throw std::invalid_argument("RState: s(1) must be the strong unit");
    for (const Vec& v : values)
        if (!target.in_unit_interval(v))
            throw std::invalid_argument("RState: values must lie in [0, 1_R]");
    for (int x = 0; x < t.n; ++x)
        for (int y = 0; y < t.n; ++y) {
            const int s = t.op(t.padd, x, y);
            if (s < 0) continue;
            if (values[s] != target.add(values[x], values[y]))
                throw std::invalid_argument("RState: not additive on the partial addition");
        }
    return RState(std::move(algebra), std::move(target), std::move(values), false, Rat(0));
}

RState RState::from_components(AlgebraPtr algebra, const std::vector<Vec>& columns) {
    if (columns.empty()) throw std::invalid_argument("RState: no components");
    const std::size_t n = algebra->size();
    const int m = static_cast<int>(columns.size());
    for (const Vec& col : columns)
        if (col.size() != n)
            throw std::invalid_argument("RState: component length must match the carrier");
    std::vector<Vec> values(n, Vec(m));
    for (std::size_t i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) values[i][j] = columns[j][i];
    return from_values(std::move(algebra), RieszRep::qn(m), std::move(values));
}

RState RState::lex_family(AlgebraPtr algebra, Rat b) {
    const auto* gamma = dynamic_cast<const GammaAlgebra*>(algebra.get());
    if (gamma == nullptr || gamma->group().kind() != GroupKind::z2_lex ||
        gamma->group().unit() != Vec{Rat(1), Rat(0)})
        throw std::invalid_argument("RState::lex_family: needs Gamma(Z lex Z, (1,0))");
    if (b < 0) throw std::invalid_argument("RState::lex_family: b must be >= 0");
    return RState(std::move(algebra), RieszRep::lexq2(), {}, true, std::move(b));
}

Vec RState::operator()(const Elem& x) const {
    if (lazy_) {
        algebra_->require_member(x);
        return Vec{x.vec()[0], b_ * x.vec()[1]};
    }
    return values_[algebra_->index_of(x)];
}

const Vec& RState::value_at(int carrier_index) const {
    if (lazy_) throw std::logic_error("RState: no value table on a lazy backend");
    return values_.at(carrier_index);
}

const std::vector<Vec>& RState::values() const {
    if (lazy_) throw std::logic_error("RState: no value table on a lazy backend");
    return values_;
}

Vec RState::component(int i) const {
    if (lazy_) throw std::logic_error("RState: no value table on a lazy backend");
    Vec col(values_.size());
    for (std::size_t x = 0; x < values_.size(); ++x) col[x] = values_[x][i];
    return col;
}

bool RState::operator==(const RState& other) const {
    if (lazy_ != other.lazy_) return false;
    if (lazy_) return b_ == other.b_;
    return values_ == other.values_;
}

// ---- classification --------------------------------------------------------

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "unknown";
    }
}

bool preserves_meets(const RState& s) {
    const Algebra& a = *s.algebra();
    if (s.lazy()) {
        const auto* gamma = dynamic_cast<const GammaAlgebra*>(&a);
        const auto sample = lex_sample(*gamma, 25);
        for (const Elem& x : sample)
            for (const Elem& y : sample)
                if (s(a.meet(x, y)) != s.target().meet(s(x), s(y))) return false;
        return true;
    }
    const DenseTables& t = a.dense();
    for (int x = 0; x < t.n; ++x)
        for (int y = 0; y < t.n; ++y)
            if (s.value_at(t.op(t.meet, x, y)) !=
                s.target().meet(s.value_at(x), s.value_at(y)))
                return false;
    return true;
}

bool is_hom(const RState& s) {
    const Algebra& a = *s.algebra();
    const RieszRep& r = s.target();
    const auto neg_unit = [&](const Vec& v) { return r.sub(r.unit(), v); };
    if (s.lazy()) {
        const auto* gamma = dynamic_cast<const GammaAlgebra*>(&a);
        const auto sample = lex_sample(*gamma, 25);
        if (s(a.zero()) != r.zero() || s(a.one()) != r.unit()) return false;
        for (const Elem& x : sample) {
            if (s(a.neg_minus(x)) != neg_unit(s(x))) return false;
            if (s(a.neg_tilde(x)) != neg_unit(s(x))) return false;
            for (const Elem& y : sample)
                if (s(a.oplus(x, y)) != r.oplus_unit(s(x), s(y))) return false;
        }
        return true;
    }
    const DenseTables& t = a.dense();
    if (s.value_at(t.zero) != r.zero() || s.value_at(t.one) != r.unit()) return false;
    for (int x = 0; x < t.n; ++x) {
        if (s.value_at(t.negm[x]) != neg_unit(s.value_at(x))) return false;
        if (s.value_at(t.negt[x]) != neg_unit(s.value_at(x))) return false;
        for (int y = 0; y < t.n; ++y)
            if (s.value_at(t.op(t.oplus, x, y)) !=
                r.oplus_unit(s.value_at(x), s.value_at(y)))
                return false;
    }
    return true;
}

StateClassification classify_r_state(const RState& s, int sample_bound) {
    StateClassification out;
    const AlgebraPtr& a = s.algebra();

    if (s.lazy()) {
        const auto* gamma = dynamic_cast<const GammaAlgebra*>(a.get());
        const auto sample = lex_sample(*gamma, sample_bound);
        out.bounded = true;
        out.is_state = true;  // range + additivity over the sample
        for (const Elem& x : sample) {
            if (!s.target().in_unit_interval(s(x))) out.is_state = false;
            for (const Elem& y : sample) {
                const auto sum = partial_add(*a, x, y);
                if (sum && s(*sum) != s.target().add(s(x), s(y))) out.is_state = false;
            }
        }
        out.is_morphism = preserves_meets(s) ? Verdict::yes : Verdict::no;
        // Interval-family classification: s_0 is the unique extremal state of
        // this algebra; every s_b with b > 0 is a non-extremal morphism.
        out.is_extremal = s.family_b() == 0 ? Verdict::yes : Verdict::no;
        out.note = "extremality from the interval-family classification";

        Ideal kernel;
        kernel.algebra = a;
        kernel.lazy = true;
        const RState scopy = s;
        kernel.oracle = [scopy](const Elem& x) { return vec_is_zero(scopy(x)); };
        out.kernel = std::move(kernel);
        out.kernel_class = classify_ideal(a, out.kernel, sample_bound);
        out.kernel_maximal = out.kernel_class.is_maximal ? Verdict::yes : Verdict::no;
        return out;
    }

    out.is_state = true;  // construction validated; kept for report symmetry
    out.is_morphism = preserves_meets(s) ? Verdict::yes : Verdict::no;

    if (s.target().kind() == RieszKind::qn) {
        const auto vertices = enumerate_vertices(state_polytope(a));
        bool extremal = true;
        for (int i = 0; i < s.target().dim() && extremal; ++i) {
            const Vec col = s.component(i);
            extremal = std::binary_search(vertices.begin(), vertices.end(), col);
        }
        out.is_extremal = extremal ? Verdict::yes : Verdict::no;
    } else {
        out.is_extremal = Verdict::unknown;
        out.note = "extremality undecided for lex-valued states outside the interval family";
    }

    std::vector<Elem> members;
    const auto& carrier = a->carrier();
    for (std::size_t i = 0; i < carrier.size(); ++i)
        if (vec_is_zero(s.value_at(static_cast<int>(i)))) members.push_back(carrier[i]);
    out.kernel = ideal_from_members(a, std::move(members));
    out.kernel_class = classify_ideal(a, out.kernel);
    out.kernel_maximal = out.kernel_class.is_maximal ? Verdict::yes : Verdict::no;
    return out;
}

// ---- morphism constructions -------------------------------------------------

namespace {

// The chain lengths k_i of a chain or product-of-chains algebra, plus access
// to the i-th Lukasiewicz coordinate of an element.
struct ChainShape {
    std::vector<Rat> k;
    std::vector<const GammaAlgebra*> chains;
    bool product;
};

ChainShape chain_shape(const Algebra& a) {
    ChainShape shape;
    const auto as_chain = [](const Algebra& f) -> const GammaAlgebra* {
        const auto* g = dynamic_cast<const GammaAlgebra*>(&f);
        if (g == nullptr || g->group().kind() != GroupKind::zn_componentwise ||
            g->group().dim() != 1)
            return nullptr;
        return g;
    };
    if (const auto* p = dynamic_cast<const ProductAlgebra*>(&a)) {
        shape.product = true;
        for (const auto& f : p->factors()) {
            const auto* g = as_chain(*f);
            if (g == nullptr)
                throw std::invalid_argument("morphism_from_partition: factors must be chains");
            shape.chains.push_back(g);
            shape.k.push_back(g->group().unit()[0]);
        }
        return shape;
    }
    const auto* g = as_chain(a);  // single chain
    if (g == nullptr)
        throw std::invalid_argument("morphism_from_partition: algebra must be a (product of) chain(s)");
    shape.product = false;
    shape.chains.push_back(g);
    shape.k.push_back(g->group().unit()[0]);
    return shape;
}

Rat chain_coordinate(const ChainShape& shape, const Elem& x, std::size_t i) {
    const Elem& part = shape.product ? x.parts()[i] : x;
    return part.vec()[0] / shape.k[i];
}

}  // namespace

RState morphism_from_partition(const AlgebraPtr& algebra, const RieszRep& target,
                               const std::vector<Vec>& booleans) {
    if (target.kind() != RieszKind::qn)
        throw std::invalid_argument("morphism_from_partition: target must be Q^m");
    const ChainShape shape = chain_shape(*algebra);
    if (booleans.size() != shape.k.size())
        throw std::invalid_argument("morphism_from_partition: one Boolean per factor required");
    Vec sum = target.zero();
    for (const Vec& b : booleans) {
        target.require_element(b);
        for (const Rat& c : b)
            if (c != 0 && c != 1)
                throw std::invalid_argument("morphism_from_partition: coefficients must be Boolean");
        for (int j = 0; j < target.dim(); ++j)
            if (b[j] == 1 && sum[j] == 1)
                throw std::invalid_argument("morphism_from_partition: Booleans must be disjoint");
        sum = target.add(sum, b);
    }
    if (sum != target.unit())
        throw std::invalid_argument("morphism_from_partition: Booleans must sum to 1_R");

    const auto& carrier = algebra->carrier();
    std::vector<Vec> values;
    values.reserve(carrier.size());
    for (const Elem& x : carrier) {
        Vec v = target.zero();
        for (std::size_t i = 0; i < booleans.size(); ++i)
            v = target.add(v, target.scale(chain_coordinate(shape, x, i), booleans[i]));
        values.push_back(std::move(v));
    }
    RState s = RState::from_values(algebra, target, std::move(values));
    if (!preserves_meets(s))
        throw std::logic_error("morphism_from_partition: result fails the morphism criterion");
    return s;
}

std::vector<RState> enumerate_r_morphisms(const AlgebraPtr& algebra, const RieszRep& target,
                                          std::size_t result_cap) {
    if (target.kind() != RieszKind::qn)
        throw std::invalid_argument("enumerate_r_morphisms: target must be Q^m");
    const auto vertices = enumerate_vertices(state_polytope(algebra));
    // Q^1 morphisms are exactly the meet-preserving vertices (morphisms are
    // extremal real states, i.e. vertices; the converse is checked here
    // rather than assumed).
    std::vector<Vec> base;
    for (const Vec& v : vertices) {
        std::vector<Vec> cols{v};
        const RState s = RState::from_components(algebra, cols);
        if (is_hom(s)) base.push_back(v);
    }
    const int m = target.dim();
    std::size_t total = 1;
    for (int i = 0; i < m; ++i) {
        total *= base.size();
        if (total > result_cap)
            throw CapExceeded("enumerate_r_morphisms: result count exceeds cap");
    }
    std::vector<RState> out;
    if (base.empty()) return out;
    std::vector<std::size_t> pick(m, 0);
    for (;;) {
        std::vector<Vec> cols;
        cols.reserve(m);
        for (int i = 0; i < m; ++i) cols.push_back(base[pick[i]]);
        RState s = RState::from_components(algebra, cols);
        if (!is_hom(s))
            throw std::logic_error("enumerate_r_morphisms: componentwise morphism failed");
        out.push_back(std::move(s));
        int i = m - 1;
        while (i >= 0 && pick[i] + 1 == base.size()) {
            pick[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++pick[i];
    }
    return out;
}

KernelQuotient quotient_by_kernel(const RState& s) {
    const AlgebraPtr& a = s.algebra();
    const StateClassification cls = classify_r_state(s);
    if (!cls.kernel_class.is_normal)
        throw std::logic_error("quotient_by_kernel: kernel must be a normal ideal");
    QuotientResult q = quotient(a, cls.kernel);

    const int classes = static_cast<int>(q.quotient->size());
    std::vector<Vec> values(classes);
    std::vector<char> seen(classes, 0);
    const auto& carrier = a->carrier();
    for (std::size_t i = 0; i < carrier.size(); ++i) {
        const int c = q.projection[i];
        if (!seen[c]) {
            values[c] = s.value_at(static_cast<int>(i));
            seen[c] = 1;
        } else if (values[c] != s.value_at(static_cast<int>(i))) {
            throw std::logic_error("quotient_by_kernel: induced state ill-defined");
        }
    }
    RState induced = RState::from_values(q.quotient, s.target(), std::move(values));
    const DenseTables& qt = q.quotient->dense();
    for (int c = 0; c < qt.n; ++c)
        if (vec_is_zero(induced.value_at(c)) && c != qt.zero)
            throw std::logic_error("quotient_by_kernel: induced state must have trivial kernel");
    return {q.quotient, std::move(q.projection), std::move(induced)};
}

ConvexDecomposition convex_decompose(const RState& s, const std::vector<Vec>& q1_vertices) {
    if (s.target().kind() != RieszKind::qn)
        throw std::invalid_argument("convex_decompose: target must be Q^n");
    if (q1_vertices.empty()) throw std::invalid_argument("convex_decompose: no vertices");
    const std::size_t n = s.algebra()->size();
    const std::size_t v = q1_vertices.size();

    // Per component: lambda >= 0, sum lambda = 1, V lambda = component.
    std::vector<std::vector<std::pair<int, Rat>>> sparse(s.target().dim());
    for (int comp = 0; comp < s.target().dim(); ++comp) {
        linalg::Mat a(n + 1, Vec(v, Rat(0)));
        Vec b(n + 1, Rat(0));
        for (std::size_t j = 0; j < v; ++j)
            for (std::size_t i = 0; i < n; ++i) a[i][j] = q1_vertices[j][i];
        const Vec col = s.component(comp);
        for (std::size_t i = 0; i < n; ++i) b[i] = col[i];
        for (std::size_t j = 0; j < v; ++j) a[n][j] = 1;
        b[n] = 1;
        const auto res = lp::feasible_point(a, b);
        if (res.status != lp::Status::optimal)
            throw std::invalid_argument("convex_decompose: state outside the vertex hull");
        for (std::size_t j = 0; j < v; ++j)
            if (res.x[j] != 0) sparse[comp].push_back({static_cast<int>(j), res.x[j]});
    }

    ConvexDecomposition out;
    out.q1_vertices = q1_vertices;
    std::vector<std::size_t> pick(sparse.size(), 0);
    for (;;) {
        ConvexTerm term;
        term.weight = 1;
        for (std::size_t i = 0; i < sparse.size(); ++i) {
            term.vertex_per_component.push_back(sparse[i][pick[i]].first);
            term.weight *= sparse[i][pick[i]].second;
        }
        out.terms.push_back(std::move(term));
        int i = static_cast<int>(sparse.size()) - 1;
        while (i >= 0 && pick[i] + 1 == sparse[i].size()) {
            pick[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++pick[i];
    }

    // Exact reconstruction check.
    Rat total(0);
    std::vector<Vec> recon(n, Vec(s.target().dim(), Rat(0)));
    for (const ConvexTerm& term : out.terms) {
        total += term.weight;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t c = 0; c < term.vertex_per_component.size(); ++c)
                recon[i][c] += term.weight * q1_vertices[term.vertex_per_component[c]][i];
    }
    if (total != 1) throw std::logic_error("convex_decompose: weights do not sum to 1");
    for (std::size_t i = 0; i < n; ++i)
        if (recon[i] != s.value_at(static_cast<int>(i)))
            throw std::logic_error("convex_decompose: reconstruction mismatch");
    return out;
}

RState extremal_from_term(const AlgebraPtr& algebra, const std::vector<Vec>& q1_vertices,
                          const std::vector<int>& vertex_per_component) {
    std::vector<Vec> cols;
    cols.reserve(vertex_per_component.size());
    for (int j : vertex_per_component) cols.push_back(q1_vertices.at(j));
    return RState::from_components(algebra, cols);
}

}  // namespace pmv

#include "pmv/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace pmv {

bool Elem::operator<(const Elem& other) const {
    if (rep_.index() != other.rep_.index()) return rep_.index() < other.rep_.index();
    switch (rep_.index()) {
        case 0:
            return std::get<0>(rep_) < std::get<0>(other.rep_);
        case 1: {
            const Vec& a = std::get<1>(rep_);
            const Vec& b = std::get<1>(other.rep_);
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        }
        default: {
            const auto& a = std::get<2>(rep_);
            const auto& b = std::get<2>(other.rep_);
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        }
    }
}

// ---- Algebra base ----------------------------------------------------------

Elem Algebra::odot(const Elem& x, const Elem& y) const {
    // x (.) y = (y^- (+) x^-)^~
    return neg_tilde(oplus(neg_minus(y), neg_minus(x)));
}

bool Algebra::leq(const Elem& x, const Elem& y) const { return oplus(neg_minus(x), y) == one(); }

Elem Algebra::join(const Elem& x, const Elem& y) const { return oplus(x, odot(neg_tilde(x), y)); }

Elem Algebra::meet(const Elem& x, const Elem& y) const { return odot(x, oplus(neg_minus(x), y)); }

void Algebra::require_member(const Elem& x) const {
    if (!contains(x))
        throw std::invalid_argument(describe() + ": element not in carrier");
}

void Algebra::ensure_cache() const {
    std::call_once(cache_once_, [this] {
        if (!finite()) throw std::domain_error(describe() + ": infinite carrier");
        carrier_ = build_carrier();
        const int n = static_cast<int>(carrier_.size());
        for (int i = 0; i < n; ++i) index_[carrier_[i]] = i;

        DenseTables t;
        t.n = n;
        t.oplus.resize(static_cast<std::size_t>(n) * n);
        t.negm.resize(n);
        t.negt.resize(n);
        const auto at = [&](const Elem& e) {
            const auto it = index_.find(e);
            if (it == index_.end())
                throw std::logic_error(describe() + ": operation left the carrier");
            return it->second;
        };
        t.zero = at(zero());
        t.one = at(one());
        for (int i = 0; i < n; ++i) {
            t.negm[i] = at(neg_minus(carrier_[i]));
            t.negt[i] = at(neg_tilde(carrier_[i]));
            for (int j = 0; j < n; ++j) t.oplus[i * n + j] = at(oplus(carrier_[i], carrier_[j]));
        }
        // Derived tables from the defining identities, at index level.
        t.odot.resize(static_cast<std::size_t>(n) * n);
        t.join.resize(static_cast<std::size_t>(n) * n);
        t.meet.resize(static_cast<std::size_t>(n) * n);
        t.leq.resize(static_cast<std::size_t>(n) * n);
        t.padd.resize(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                t.odot[i * n + j] = t.negt[t.oplus[t.negm[j] * n + t.negm[i]]];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                t.leq[i * n + j] = t.oplus[t.negm[i] * n + j] == t.one ? 1 : 0;
                t.join[i * n + j] = t.oplus[i * n + t.odot[t.negt[i] * n + j]];
                t.meet[i * n + j] = t.odot[i * n + t.oplus[t.negm[i] * n + j]];
                t.padd[i * n + j] = t.odot[i * n + j] == t.zero ? t.oplus[i * n + j] : -1;
            }
        dense_ = std::move(t);
    });
}

const std::vector<Elem>& Algebra::carrier() const {
    ensure_cache();
    return carrier_;
}

int Algebra::index_of(const Elem& x) const {
    ensure_cache();
    const auto it = index_.find(x);
    if (it == index_.end())
        throw std::invalid_argument(describe() + ": element not in carrier");
    return it->second;
}

const DenseTables& Algebra::dense() const {
    ensure_cache();
    return dense_;
}

// ---- TableAlgebra ----------------------------------------------------------

TableAlgebra::TableAlgebra(std::vector<std::string> names, std::vector<std::vector<int>> oplus,
                           std::vector<int> neg_minus, std::vector<int> neg_tilde, int zero,
                           int one)
    : names_(std::move(names)),
      oplus_(std::move(oplus)),
      negm_(std::move(neg_minus)),
      negt_(std::move(neg_tilde)),
      zero_(zero),
      one_(one) {
    const std::size_t n = names_.size();
    if (n == 0) throw std::invalid_argument("table: empty carrier");
    if (oplus_.size() != n) throw std::invalid_argument("table: oplus must be a square table");
    for (const auto& row : oplus_) {
        if (row.size() != n) throw std::invalid_argument("table: oplus must be a square table");
        for (int v : row)
            if (v < 0 || v >= static_cast<int>(n))
                throw std::invalid_argument("table: oplus entry out of range");
    }
    const auto check_unary = [n](const std::vector<int>& tbl, const char* what) {
        if (tbl.size() != n) throw std::invalid_argument(std::string("table: ") + what + " size mismatch");
        for (int v : tbl)
            if (v < 0 || v >= static_cast<int>(n))
                throw std::invalid_argument(std::string("table: ") + what + " entry out of range");
    };
    check_unary(negm_, "neg_minus");
    check_unary(negt_, "neg_tilde");
    if (zero_ < 0 || zero_ >= static_cast<int>(n) || one_ < 0 || one_ >= static_cast<int>(n))
        throw std::invalid_argument("table: zero/one out of range");
    if (zero_ == one_) throw std::invalid_argument("table: zero and one must differ");
}

std::string TableAlgebra::describe() const {
    return "table(" + std::to_string(names_.size()) + ")";
}

bool TableAlgebra::contains(const Elem& x) const {
    return x.is_index() && x.idx() >= 0 && x.idx() < static_cast<int>(names_.size());
}

int TableAlgebra::at(const Elem& x) const {
    if (!contains(x)) throw std::invalid_argument(describe() + ": element not in carrier");
    return x.idx();
}

Elem TableAlgebra::oplus(const Elem& x, const Elem& y) const {
    return Elem::index(oplus_[at(x)][at(y)]);
}

Elem TableAlgebra::neg_minus(const Elem& x) const { return Elem::index(negm_[at(x)]); }

Elem TableAlgebra::neg_tilde(const Elem& x) const { return Elem::index(negt_[at(x)]); }

std::string TableAlgebra::elem_name(const Elem& x) const { return names_[at(x)]; }

std::vector<Elem> TableAlgebra::build_carrier() const {
    std::vector<Elem> out;
    out.reserve(names_.size());
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) out.push_back(Elem::index(i));
    return out;
}

// ---- GammaAlgebra ----------------------------------------------------------

GammaAlgebra::GammaAlgebra(UnitalGroup group) : group_(std::move(group)) {}

std::string GammaAlgebra::describe() const {
    if (group_.kind() == GroupKind::z2_lex) return "gamma(Z lex Z, " + vec_str(group_.unit()) + ")";
    if (group_.dim() == 1) return "chain(" + rat_str(group_.unit()[0]) + ")";
    return "gamma(Z^" + std::to_string(group_.dim()) + ", " + vec_str(group_.unit()) + ")";
}

bool GammaAlgebra::contains(const Elem& x) const {
    if (!x.is_coords()) return false;
    const Vec& v = x.vec();
    if (static_cast<int>(v.size()) != group_.dim()) return false;
    for (const Rat& c : v)
        if (!is_integer(c)) return false;
    return group_.leq(group_.zero(), v) && group_.leq(v, group_.unit());
}

const Vec& GammaAlgebra::at(const Elem& x) const {
    if (!contains(x)) throw std::invalid_argument(describe() + ": element not in carrier");
    return x.vec();
}

Elem GammaAlgebra::oplus(const Elem& x, const Elem& y) const {
    return Elem::coords(group_.meet(group_.add(at(x), at(y)), group_.unit()));
}

Elem GammaAlgebra::neg_minus(const Elem& x) const {
    return Elem::coords(group_.sub(group_.unit(), at(x)));
}

Elem GammaAlgebra::neg_tilde(const Elem& x) const {
    return Elem::coords(group_.add(group_.neg(at(x)), group_.unit()));
}

Elem GammaAlgebra::odot(const Elem& x, const Elem& y) const {
    const Vec s = group_.add(group_.sub(at(x), group_.unit()), at(y));
    return Elem::coords(group_.join(s, group_.zero()));
}

bool GammaAlgebra::leq(const Elem& x, const Elem& y) const { return group_.leq(at(x), at(y)); }

Elem GammaAlgebra::join(const Elem& x, const Elem& y) const {
    return Elem::coords(group_.join(at(x), at(y)));
}

Elem GammaAlgebra::meet(const Elem& x, const Elem& y) const {
    return Elem::coords(group_.meet(at(x), at(y)));
}

std::string GammaAlgebra::elem_name(const Elem& x) const {
    const Vec& v = at(x);
    if (group_.dim() == 1) return rat_str(v[0]);
    return vec_str(v);
}

std::vector<Elem> GammaAlgebra::build_carrier() const {
    // finite() was checked by the cache; enumerate [0,u] lexicographically.
    const int d = group_.dim();
    const Vec& u = group_.unit();
    std::vector<Elem> out;
    Vec cur(d, Rat(0));
    for (;;) {
        out.push_back(Elem::coords(cur));
        int i = d - 1;
        while (i >= 0 && cur[i] == u[i]) {
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
        cur[i] += 1;
    }
    return out;
}

// ---- ProductAlgebra --------------------------------------------------------

ProductAlgebra::ProductAlgebra(std::vector<AlgebraPtr> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("product: needs at least one factor");
    for (const auto& f : factors_)
        if (!f) throw std::invalid_argument("product: null factor");
}

std::string ProductAlgebra::describe() const {
    std::ostringstream out;
    out << "product(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out << " x ";
        out << factors_[i]->describe();
    }
    out << ")";
    return out.str();
}

bool ProductAlgebra::finite() const {
    for (const auto& f : factors_)
        if (!f->finite()) return false;
    return true;
}

bool ProductAlgebra::contains(const Elem& x) const {
    if (!x.is_tuple() || x.parts().size() != factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (!factors_[i]->contains(x.parts()[i])) return false;
    return true;
}

namespace {

Elem product_map(const std::vector<AlgebraPtr>& fs, const Elem& x, const Elem& y,
                 Elem (Algebra::*op)(const Elem&, const Elem&) const) {
    std::vector<Elem> parts;
    parts.reserve(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i)
        parts.push_back(((*fs[i]).*op)(x.parts()[i], y.parts()[i]));
    return Elem::tuple(std::move(parts));
}

}  // namespace

Elem ProductAlgebra::zero() const {
    std::vector<Elem> parts;
    for (const auto& f : factors_) parts.push_back(f->zero());
    return Elem::tuple(std::move(parts));
}

Elem ProductAlgebra::one() const {
    std::vector<Elem> parts;
    for (const auto& f : factors_) parts.push_back(f->one());
    return Elem::tuple(std::move(parts));
}

Elem ProductAlgebra::oplus(const Elem& x, const Elem& y) const {
    require_member(x);
    require_member(y);
    return product_map(factors_, x, y, &Algebra::oplus);
}

Elem ProductAlgebra::neg_minus(const Elem& x) const {
    require_member(x);
    std::vector<Elem> parts;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        parts.push_back(factors_[i]->neg_minus(x.parts()[i]));
    return Elem::tuple(std::move(parts));
}

Elem ProductAlgebra::neg_tilde(const Elem& x) const {
    require_member(x);
    std::vector<Elem> parts;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        parts.push_back(factors_[i]->neg_tilde(x.parts()[i]));
    return Elem::tuple(std::move(parts));
}

Elem ProductAlgebra::odot(const Elem& x, const Elem& y) const {
    require_member(x);
    require_member(y);
    return product_map(factors_, x, y, &Algebra::odot);
}

bool ProductAlgebra::leq(const Elem& x, const Elem& y) const {
    require_member(x);
    require_member(y);
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (!factors_[i]->leq(x.parts()[i], y.parts()[i])) return false;
    return true;
}

Elem ProductAlgebra::join(const Elem& x, const Elem& y) const {
    require_member(x);
    require_member(y);
    return product_map(factors_, x, y, &Algebra::join);
}

Elem ProductAlgebra::meet(const Elem& x, const Elem& y) const {
    require_member(x);
    require_member(y);
    return product_map(factors_, x, y, &Algebra::meet);
}

std::string ProductAlgebra::elem_name(const Elem& x) const {
    require_member(x);
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out << ", ";
        out << factors_[i]->elem_name(x.parts()[i]);
    }
    out << ')';
    return out.str();
}

std::vector<Elem> ProductAlgebra::build_carrier() const {
    std::vector<std::vector<Elem>> parts(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) parts[i] = factors_[i]->carrier();
    std::vector<Elem> out;
    std::vector<std::size_t> idx(factors_.size(), 0);
    for (;;) {
        std::vector<Elem> tup;
        tup.reserve(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i) tup.push_back(parts[i][idx[i]]);
        out.push_back(Elem::tuple(std::move(tup)));
        int i = static_cast<int>(factors_.size()) - 1;
        while (i >= 0 && idx[i] + 1 == parts[i].size()) {
            idx[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++idx[i];
    }
    return out;
}

// ---- factories -------------------------------------------------------------

AlgebraPtr make_chain(int k) {
    if (k < 1) throw std::invalid_argument("make_chain: k must be >= 1");
    return std::make_shared<GammaAlgebra>(UnitalGroup::zn(1, Vec{Rat(k)}));
}

AlgebraPtr make_gamma(UnitalGroup group) { return std::make_shared<GammaAlgebra>(std::move(group)); }

AlgebraPtr make_product(std::vector<AlgebraPtr> factors) {
    return std::make_shared<ProductAlgebra>(std::move(factors));
}

AlgebraPtr make_table(std::vector<std::string> names, std::vector<std::vector<int>> oplus,
                      std::vector<int> neg_minus, std::vector<int> neg_tilde, int zero, int one) {
    return std::make_shared<TableAlgebra>(std::move(names), std::move(oplus), std::move(neg_minus),
                                          std::move(neg_tilde), zero, one);
}

std::shared_ptr<const TableAlgebra> materialize(const Algebra& a) {
    const DenseTables& t = a.dense();
    const auto& carrier = a.carrier();
    std::vector<std::string> names;
    names.reserve(t.n);
    for (const Elem& e : carrier) names.push_back(a.elem_name(e));
    std::vector<std::vector<int>> oplus(t.n, std::vector<int>(t.n));
    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j) oplus[i][j] = t.oplus[i * t.n + j];
    return std::make_shared<TableAlgebra>(std::move(names), std::move(oplus), t.negm, t.negt,
                                          t.zero, t.one);
}

// ---- partial arithmetic ----------------------------------------------------

std::optional<Elem> partial_add(const Algebra& a, const Elem& x, const Elem& y) {
    if (a.odot(x, y) != a.zero()) return std::nullopt;
    return a.oplus(x, y);
}

Elem subtract(const Algebra& a, const Elem& x, const Elem& y, Side side) {
    if (!a.leq(x, y)) throw std::invalid_argument(a.describe() + ": subtract requires x <= y");
    Elem z = a.zero();
    if (const auto* g = dynamic_cast<const GammaAlgebra*>(&a)) {
        const UnitalGroup& grp = g->group();
        z = side == Side::right ? Elem::coords(grp.sub(y.vec(), x.vec()))
                                : Elem::coords(grp.add(grp.neg(x.vec()), y.vec()));
    } else if (const auto* p = dynamic_cast<const ProductAlgebra*>(&a)) {
        std::vector<Elem> parts;
        for (std::size_t i = 0; i < p->factors().size(); ++i)
            parts.push_back(subtract(*p->factors()[i], x.parts()[i], y.parts()[i], side));
        z = Elem::tuple(std::move(parts));
    } else {
        bool found = false;
        for (const Elem& cand : a.carrier()) {
            const auto sum = side == Side::right ? partial_add(a, cand, x) : partial_add(a, x, cand);
            if (sum && *sum == y) {
                z = cand;
                found = true;
                break;
            }
        }
        if (!found) throw std::runtime_error(a.describe() + ": subtraction witness missing");
    }
    const auto back = side == Side::right ? partial_add(a, z, x) : partial_add(a, x, z);
    if (!back || *back != y) throw std::logic_error(a.describe() + ": subtract re-add check failed");
    return z;
}

std::optional<Elem> iterate(const Algebra& a, const Elem& x, int n, IterateMode mode) {
    if (n < 0) throw std::invalid_argument("iterate: n must be >= 0");
    switch (mode) {
        case IterateMode::nat_mul: {
            Elem acc = a.zero();
            for (int i = 0; i < n; ++i) {
                const auto next = partial_add(a, acc, x);
                if (!next) return std::nullopt;
                acc = *next;
            }
            return acc;
        }
        case IterateMode::odot_pow: {
            Elem acc = a.one();
            for (int i = 0; i < n; ++i) acc = a.odot(acc, x);
            return acc;
        }
        case IterateMode::oplus_mul: {
            Elem acc = a.zero();
            for (int i = 0; i < n; ++i) acc = a.oplus(acc, x);
            return acc;
        }
    }
    return std::nullopt;
}

namespace {

void verify_rdp2(const Algebra& a, const Elem& a1, const Elem& a2, const Elem& b1, const Elem& b2,
                 const Rdp2Witness& w) {
    const auto ok = [&](const Elem& p, const Elem& q, const Elem& expect) {
        const auto s = partial_add(a, p, q);
        return s && *s == expect;
    };
    if (!ok(w.c11, w.c12, a1) || !ok(w.c21, w.c22, a2) || !ok(w.c11, w.c21, b1) ||
        !ok(w.c12, w.c22, b2) || a.meet(w.c12, w.c21) != a.zero())
        throw std::logic_error(a.describe() + ": riesz decomposition witness invalid");
}

}  // namespace

Rdp2Witness rdp2_decompose(const Algebra& a, const Elem& a1, const Elem& a2, const Elem& b1,
                           const Elem& b2, std::size_t table_cap) {
    const auto lhs = partial_add(a, a1, a2);
    const auto rhs = partial_add(a, b1, b2);
    if (!lhs || !rhs || *lhs != *rhs)
        throw std::invalid_argument(a.describe() + ": rdp2 requires a1+a2 = b1+b2, both defined");

    Rdp2Witness w;
    if (const auto* p = dynamic_cast<const ProductAlgebra*>(&a)) {
        std::vector<Elem> c11, c12, c21, c22;
        for (std::size_t i = 0; i < p->factors().size(); ++i) {
            const Rdp2Witness part =
                rdp2_decompose(*p->factors()[i], a1.parts()[i], a2.parts()[i], b1.parts()[i],
                               b2.parts()[i], table_cap);
            c11.push_back(part.c11);
            c12.push_back(part.c12);
            c21.push_back(part.c21);
            c22.push_back(part.c22);
        }
        w = {Elem::tuple(c11), Elem::tuple(c12), Elem::tuple(c21), Elem::tuple(c22)};
    } else if (dynamic_cast<const GammaAlgebra*>(&a) != nullptr) {
        // Group construction: c11 = a1 ^ b1, the rest by sided subtraction.
        w.c11 = a.meet(a1, b1);
        w.c12 = subtract(a, w.c11, a1, Side::left);
        w.c21 = subtract(a, w.c11, b1, Side::left);
        w.c22 = subtract(a, w.c21, a2, Side::left);
    } else {
        if (a.size() > table_cap)
            throw CapExceeded(a.describe() + ": rdp2 brute force over " +
                              std::to_string(a.size()) + " elements exceeds cap " +
                              std::to_string(table_cap));
        const DenseTables& t = a.dense();
        const auto& carrier = a.carrier();
        const int ia1 = a.index_of(a1), ia2 = a.index_of(a2);
        const int ib1 = a.index_of(b1), ib2 = a.index_of(b2);
        for (int c11 = 0; c11 < t.n; ++c11) {
            for (int c12 = 0; c12 < t.n; ++c12) {
                if (t.op(t.padd, c11, c12) != ia1) continue;
                for (int c21 = 0; c21 < t.n; ++c21) {
                    if (t.op(t.padd, c11, c21) != ib1) continue;
                    if (t.op(t.meet, c12, c21) != t.zero) continue;
                    for (int c22 = 0; c22 < t.n; ++c22) {
                        if (t.op(t.padd, c21, c22) != ia2) continue;
                        if (t.op(t.padd, c12, c22) != ib2) continue;
                        w = {carrier[c11], carrier[c12], carrier[c21], carrier[c22]};
                        verify_rdp2(a, a1, a2, b1, b2, w);
                        return w;
                    }
                }
            }
        }
        throw std::runtime_error(a.describe() +
                                 ": no riesz decomposition witness (table is not a pseudo "
                                 "MV-algebra)");
    }
    verify_rdp2(a, a1, a2, b1, b2, w);
    return w;
}

std::vector<Elem> boolean_elements(const Algebra& a) {
    const DenseTables& t = a.dense();
    const auto& carrier = a.carrier();
    std::vector<Elem> out;
    for (int i = 0; i < t.n; ++i)
        if (t.op(t.meet, i, t.negm[i]) == t.zero) out.push_back(carrier[i]);
    return out;
}

std::vector<std::vector<Elem>> boolean_partitions(const Algebra& a, int n) {
    if (n < 1) throw std::invalid_argument("boolean_partitions: n must be >= 1");
    const DenseTables& t = a.dense();
    const auto& carrier = a.carrier();
    std::vector<int> booleans;
    for (int i = 0; i < t.n; ++i)
        if (t.op(t.meet, i, t.negm[i]) == t.zero) booleans.push_back(i);

    std::vector<std::vector<Elem>> out;
    std::vector<int> chosen;
    const auto rec = [&](const auto& self, int depth, int acc) -> void {
        if (depth == n) {
            if (acc != t.one) return;
            std::vector<Elem> tuple;
            for (int i : chosen) tuple.push_back(carrier[i]);
            out.push_back(std::move(tuple));
            return;
        }
        for (int b : booleans) {
            bool disjoint = true;
            for (int prev : chosen)
                if (t.op(t.meet, prev, b) != t.zero) { disjoint = false; break; }
            if (!disjoint) continue;
            const int sum = t.op(t.padd, acc, b);
            if (sum < 0) continue;
            chosen.push_back(b);
            self(self, depth + 1, sum);
            chosen.pop_back();
        }
    };
    rec(rec, 0, t.zero);
    return out;
}

// ---- axiom checking --------------------------------------------------------

const AxiomReport::Entry* AxiomReport::find(const std::string& axiom) const {
    for (const auto& e : entries)
        if (e.axiom == axiom) return &e;
    return nullptr;
}

namespace {

struct AxiomScan {
    const Algebra& alg;
    AxiomReport& report;

    void record(const std::string& axiom, bool passed, std::vector<Elem> witness) {
        AxiomReport::Entry e;
        e.axiom = axiom;
        e.passed = passed;
        if (!passed) {
            std::ostringstream names;
            for (std::size_t i = 0; i < witness.size(); ++i) {
                if (i) names << ", ";
                names << alg.elem_name(witness[i]);
            }
            e.witness_names = names.str();
            e.witness = std::move(witness);
            report.all_passed = false;
        }
        report.entries.push_back(std::move(e));
    }
};

}  // namespace

AxiomReport check_axioms(const Algebra& a) {
    const DenseTables& t = a.dense();
    const auto& c = a.carrier();
    AxiomReport report;
    AxiomScan scan{a, report};
    const int n = t.n;
    const auto op = [&](int i, int j) { return t.oplus[i * n + j]; };
    const auto od = [&](int i, int j) { return t.odot[i * n + j]; };

    scan.record("0!=1", t.zero != t.one, {});

    {
        bool ok = true;
        std::vector<Elem> w;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                for (int z = 0; z < n && ok; ++z)
                    if (op(x, op(y, z)) != op(op(x, y), z)) {
                        ok = false;
                        w = {c[x], c[y], c[z]};
                    }
        scan.record("A1", ok, std::move(w));
    }
    {
        bool ok = true;
        std::vector<Elem> w;
        for (int x = 0; x < n && ok; ++x)
            if (op(x, t.zero) != x || op(t.zero, x) != x) {
                ok = false;
                w = {c[x]};
            }
        scan.record("A2", ok, std::move(w));
    }
    {
        bool ok = true;
        std::vector<Elem> w;
        for (int x = 0; x < n && ok; ++x)
            if (op(x, t.one) != t.one || op(t.one, x) != t.one) {
                ok = false;
                w = {c[x]};
            }
        scan.record("A3", ok, std::move(w));
    }
    scan.record("A4", t.negt[t.one] == t.zero && t.negm[t.one] == t.zero, {});
    {
        bool ok = true;
        std::vector<Elem> w;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                if (t.negt[op(t.negm[x], t.negm[y])] != t.negm[op(t.negt[x], t.negt[y])]) {
                    ok = false;
                    w = {c[x], c[y]};
                }
        scan.record("A5", ok, std::move(w));
    }
    {
        bool ok = true;
        std::vector<Elem> w;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y) {
                const int e1 = op(x, od(t.negt[x], y));
                const int e2 = op(y, od(t.negt[y], x));
                const int e3 = op(od(x, t.negm[y]), y);
                const int e4 = op(od(y, t.negm[x]), x);
                if (e1 != e2 || e1 != e3 || e1 != e4) {
                    ok = false;
                    w = {c[x], c[y]};
                    break;
                }
            }
        scan.record("A6", ok, std::move(w));
    }
    {
        bool ok = true;
        std::vector<Elem> w;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                if (od(x, op(t.negm[x], y)) != od(op(x, t.negt[y]), y)) {
                    ok = false;
                    w = {c[x], c[y]};
                    break;
                }
        scan.record("A7", ok, std::move(w));
    }
    {
        bool ok = true;
        std::vector<Elem> w;
        for (int x = 0; x < n && ok; ++x)
            if (t.negt[t.negm[x]] != x) {
                ok = false;
                w = {c[x]};
            }
        scan.record("A8", ok, std::move(w));
    }
    return report;
}

AxiomReport sampled_axiom_check(const Algebra& a, const std::vector<Elem>& sample) {
    if (a.finite()) return check_axioms(a);
    for (const Elem& e : sample) a.require_member(e);

    AxiomReport report;
    report.sampled = true;
    AxiomScan scan{a, report};
    const Elem zero = a.zero(), one = a.one();
    const auto od = [&](const Elem& x, const Elem& y) { return a.odot(x, y); };

    scan.record("0!=1", zero != one, {});
    {
        bool ok = true;
        std::vector<Elem> w;
        for (const Elem& x : sample) {
            for (const Elem& y : sample) {
                for (const Elem& z : sample)
                    if (a.oplus(x, a.oplus(y, z)) != a.oplus(a.oplus(x, y), z)) {
                        ok = false;
                        w = {x, y, z};
                        break;
                    }
                if (!ok) break;
            }
            if (!ok) break;
        }
        scan.record("A1", ok, std::move(w));
    }
    {
        bool ok = true;
        std::vector<Elem> w;
        for (const Elem& x : sample)
            if (a.oplus(x, zero) != x || a.oplus(zero, x) != x) {
                ok = false;
                w = {x};
                break;
            }
        scan.record("A2", ok, std::move(w));
    }
    {
        bool ok = true;
        std::vector<Elem> w;
        for (const Elem& x : sample)
            if (a.oplus(x, one) != one || a.oplus(one, x) != one) {
                ok = false;
                w = {x};
                break;
            }
        scan.record("A3", ok, std::move(w));
    }
    scan.record("A4", a.neg_tilde(one) == zero && a.neg_minus(one) == zero, {});
    {
        bool ok = true;
        std::vector<Elem> w;
        for (const Elem& x : sample) {
            for (const Elem& y : sample)
                if (a.neg_tilde(a.oplus(a.neg_minus(x), a.neg_minus(y))) !=
                    a.neg_minus(a.oplus(a.neg_tilde(x), a.neg_tilde(y)))) {
                    ok = false;
                    w = {x, y};
                    break;
                }
            if (!ok) break;
        }
        scan.record("A5", ok, std::move(w));
    }
    {
        bool ok = true;
        std::vector<Elem> w;
        for (const Elem& x : sample) {
            for (const Elem& y : sample) {
                const Elem e1 = a.oplus(x, od(a.neg_tilde(x), y));
                const Elem e2 = a.oplus(y, od(a.neg_tilde(y), x));
                const Elem e3 = a.oplus(od(x, a.neg_minus(y)), y);
                const Elem e4 = a.oplus(od(y, a.neg_minus(x)), x);
                if (e1 != e2 || e1 != e3 || e1 != e4) {
                    ok = false;
                    w = {x, y};
                    break;
                }
            }
            if (!ok) break;
        }
        scan.record("A6", ok, std::move(w));
    }
    {
        bool ok = true;
        std::vector<Elem> w;
        for (const Elem& x : sample) {
            for (const Elem& y : sample)
                if (od(x, a.oplus(a.neg_minus(x), y)) != od(a.oplus(x, a.neg_tilde(y)), y)) {
                    ok = false;
                    w = {x, y};
                    break;
                }
            if (!ok) break;
        }
        scan.record("A7", ok, std::move(w));
    }
    {
        bool ok = true;
        std::vector<Elem> w;
        for (const Elem& x : sample)
            if (a.neg_tilde(a.neg_minus(x)) != x) {
                ok = false;
                w = {x};
                break;
            }
        scan.record("A8", ok, std::move(w));
    }
    return report;
}

std::vector<Elem> lex_sample(const GammaAlgebra& a, int bound) {
    if (a.group().kind() != GroupKind::z2_lex)
        throw std::invalid_argument("lex_sample: backend is not Z lex Z");
    if (bound < 0) throw std::invalid_argument("lex_sample: bound must be >= 0");
    const Vec& u = a.group().unit();
    std::vector<Elem> out;
    for (int m = 0; m <= bound; ++m) out.push_back(Elem::coords(Vec{Rat(0), Rat(m)}));
    for (int x = 1; u[0] > x; ++x) out.push_back(Elem::coords(Vec{Rat(x), Rat(0)}));
    for (int m = bound; m >= 0; --m)
        out.push_back(Elem::coords(Vec{u[0], u[1] - Rat(m)}));
    return out;
}

}  // namespace pmv

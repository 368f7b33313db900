#pragma once

#include "pmv/errors.hpp"
#include "pmv/ordered_group.hpp"
#include "pmv/rational.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pmv {

/// Handle for a pseudo MV-algebra element: a table index, the coordinates of
/// an interval element of a unital group, or a tuple of factor elements.
class Elem {
  public:
    Elem() : rep_(0) {}

    static Elem index(int i) { return Elem(Rep(std::in_place_index<0>, i)); }
    static Elem coords(Vec v) { return Elem(Rep(std::in_place_index<1>, std::move(v))); }
    static Elem tuple(std::vector<Elem> parts) {
        return Elem(Rep(std::in_place_index<2>, std::move(parts)));
    }

    bool is_index() const { return rep_.index() == 0; }
    bool is_coords() const { return rep_.index() == 1; }
    bool is_tuple() const { return rep_.index() == 2; }
    int idx() const { return std::get<0>(rep_); }
    const Vec& vec() const { return std::get<1>(rep_); }
    const std::vector<Elem>& parts() const { return std::get<2>(rep_); }

    bool operator==(const Elem& other) const { return rep_ == other.rep_; }
    bool operator!=(const Elem& other) const { return !(*this == other); }
    bool operator<(const Elem& other) const;

  private:
    using Rep = std::variant<int, Vec, std::vector<Elem>>;
    explicit Elem(Rep rep) : rep_(std::move(rep)) {}
    Rep rep_;
};

/// Index-level operation tables of a finite algebra, derived once from the
/// primitive operations and shared by every exhaustive computation. The
/// derived operations (odot, order, lattice) are recomputed from oplus and
/// the two negations via the defining identities, so mutated tables are
/// exercised through the same single source of truth.
struct DenseTables {
    int n = 0;
    int zero = -1, one = -1;
    std::vector<int> oplus, odot, join, meet;  // n*n, row-major
    std::vector<int> negm, negt;               // n
    std::vector<char> leq;                     // n*n
    std::vector<int> padd;                     // n*n; -1 when x+y undefined

    int op(const std::vector<int>& t, int i, int j) const { return t[i * n + j]; }
    bool le(int i, int j) const { return leq[i * n + j] != 0; }
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Immutable pseudo MV-algebra (M; oplus, ^-, ^~, 0, 1). Backends supply the
/// primitive operations; odot, the order and the lattice operations default
/// to the defining identities
///   x (.) y = (y^- (+) x^-)^~,   x <= y iff x^- (+) y = 1,
///   x v y = x (+) (x^~ (.) y),   x ^ y = x (.) (x^- (+) y)
/// and may be overridden where a backend has direct formulas.
class Algebra {
  public:
    virtual ~Algebra() = default;

    virtual std::string describe() const = 0;
    virtual bool finite() const = 0;
    virtual bool contains(const Elem& x) const = 0;
    virtual Elem zero() const = 0;
    virtual Elem one() const = 0;
    virtual Elem oplus(const Elem& x, const Elem& y) const = 0;
    virtual Elem neg_minus(const Elem& x) const = 0;  // x^-
    virtual Elem neg_tilde(const Elem& x) const = 0;  // x^~

    virtual Elem odot(const Elem& x, const Elem& y) const;
    virtual bool leq(const Elem& x, const Elem& y) const;
    virtual Elem join(const Elem& x, const Elem& y) const;
    virtual Elem meet(const Elem& x, const Elem& y) const;

    virtual std::string elem_name(const Elem& x) const = 0;

    /// Finite carrier in canonical order (table order; lexicographic on
    /// coordinates for interval and product backends). Throws on infinite
    /// backends.
    const std::vector<Elem>& carrier() const;
    std::size_t size() const { return carrier().size(); }
    int index_of(const Elem& x) const;
    const DenseTables& dense() const;

    void require_member(const Elem& x) const;

  protected:
    virtual std::vector<Elem> build_carrier() const = 0;

  private:
    mutable std::once_flag cache_once_;
    mutable std::vector<Elem> carrier_;
    mutable std::map<Elem, int> index_;
    mutable DenseTables dense_;
    void ensure_cache() const;
};

/// Finite algebra given by explicit Cayley tables.
class TableAlgebra final : public Algebra {
  public:
    TableAlgebra(std::vector<std::string> names, std::vector<std::vector<int>> oplus,
                 std::vector<int> neg_minus, std::vector<int> neg_tilde, int zero, int one);

    std::string describe() const override;
    bool finite() const override { return true; }
    bool contains(const Elem& x) const override;
    Elem zero() const override { return Elem::index(zero_); }
    Elem one() const override { return Elem::index(one_); }
    Elem oplus(const Elem& x, const Elem& y) const override;
    Elem neg_minus(const Elem& x) const override;
    Elem neg_tilde(const Elem& x) const override;
    std::string elem_name(const Elem& x) const override;

    const std::vector<std::string>& names() const { return names_; }

  protected:
    std::vector<Elem> build_carrier() const override;

  private:
    int at(const Elem& x) const;
    std::vector<std::string> names_;
    std::vector<std::vector<int>> oplus_;
    std::vector<int> negm_, negt_;
    int zero_, one_;
};

/// Unit interval [0, u] of a unital lattice-ordered group, with
///   x (+) y = (x+y) ^ u,  x^- = u-x,  x^~ = -x+u,  x (.) y = (x-u+y) v 0.
/// Finite exactly when the group is Z^n (the lexicographic backend has an
/// infinite interval).
class GammaAlgebra final : public Algebra {
  public:
    explicit GammaAlgebra(UnitalGroup group);

    std::string describe() const override;
    bool finite() const override { return group_.kind() == GroupKind::zn_componentwise; }
    bool contains(const Elem& x) const override;
    Elem zero() const override { return Elem::coords(group_.zero()); }
    Elem one() const override { return Elem::coords(group_.unit()); }
    Elem oplus(const Elem& x, const Elem& y) const override;
    Elem neg_minus(const Elem& x) const override;
    Elem neg_tilde(const Elem& x) const override;
    Elem odot(const Elem& x, const Elem& y) const override;
    bool leq(const Elem& x, const Elem& y) const override;
    Elem join(const Elem& x, const Elem& y) const override;
    Elem meet(const Elem& x, const Elem& y) const override;
    std::string elem_name(const Elem& x) const override;

    const UnitalGroup& group() const { return group_; }

  protected:
    std::vector<Elem> build_carrier() const override;

  private:
    const Vec& at(const Elem& x) const;
    UnitalGroup group_;
};

/// Direct product of pseudo MV-algebras with componentwise operations.
class ProductAlgebra final : public Algebra {
  public:
    explicit ProductAlgebra(std::vector<AlgebraPtr> factors);

    std::string describe() const override;
    bool finite() const override;
    bool contains(const Elem& x) const override;
    Elem zero() const override;
    Elem one() const override;
    Elem oplus(const Elem& x, const Elem& y) const override;
    Elem neg_minus(const Elem& x) const override;
    Elem neg_tilde(const Elem& x) const override;
    Elem odot(const Elem& x, const Elem& y) const override;
    bool leq(const Elem& x, const Elem& y) const override;
    Elem join(const Elem& x, const Elem& y) const override;
    Elem meet(const Elem& x, const Elem& y) const override;
    std::string elem_name(const Elem& x) const override;

    const std::vector<AlgebraPtr>& factors() const { return factors_; }

  protected:
    std::vector<Elem> build_carrier() const override;

  private:
    std::vector<AlgebraPtr> factors_;
};

/// The (k+1)-element chain, i.e. the interval of (Z, k). Carrier 0..k; the
/// Lukasiewicz value of j is j/k, a display concern only.
AlgebraPtr make_chain(int k);
AlgebraPtr make_gamma(UnitalGroup group);
AlgebraPtr make_product(std::vector<AlgebraPtr> factors);
AlgebraPtr make_table(std::vector<std::string> names, std::vector<std::vector<int>> oplus,
                      std::vector<int> neg_minus, std::vector<int> neg_tilde, int zero, int one);

/// Table copy of a finite algebra (used for backend-agreement checks and for
/// quotients).
std::shared_ptr<const TableAlgebra> materialize(const Algebra& a);

// ---- partial addition and derived arithmetic ------------------------------

/// x + y when x (.) y = 0, otherwise nullopt (undefined is a value here, not
/// an error). On interval backends this is the group sum restricted to M.
std::optional<Elem> partial_add(const Algebra& a, const Elem& x, const Elem& y);

enum class Side { left, right };

/// For x <= y the unique z with z + x = y (right: z = y - x) or x + z = y
/// (left: z = -x + y); the result is verified by re-adding.
Elem subtract(const Algebra& a, const Elem& x, const Elem& y, Side side);

enum class IterateMode { nat_mul, odot_pow, oplus_mul };

/// nat_mul: 0x = 0, (n+1)x = nx + x, undefined as soon as one partial sum is;
/// odot_pow: x^0 = 1, x^(n+1) = x^n (.) x;
/// oplus_mul: 0 (*) x = 0, (n+1) (*) x = (n (*) x) (+) x.
std::optional<Elem> iterate(const Algebra& a, const Elem& x, int n, IterateMode mode);

struct Rdp2Witness {
    Elem c11, c12, c21, c22;
};

/// Strong Riesz decomposition: for a1+a2 = b1+b2 produces c_ij with
/// a_i = c_i1 + c_i2, b_j = c_1j + c_2j and c12 ^ c21 = 0. Interval backends
/// use the group construction c11 = a1 ^ b1; table backends brute-force
/// quadruples (capped; exceeding the cap throws CapExceeded, an exhausted
/// search throws std::runtime_error since it refutes RDP2).
Rdp2Witness rdp2_decompose(const Algebra& a, const Elem& a1, const Elem& a2, const Elem& b1,
                           const Elem& b2, std::size_t table_cap = 64);

/// Elements e with e ^ e^- = 0, in canonical order.
std::vector<Elem> boolean_elements(const Algebra& a);

/// All ordered n-tuples of (possibly zero) Boolean elements with pairwise
/// meet zero summing to 1.
std::vector<std::vector<Elem>> boolean_partitions(const Algebra& a, int n);

// ---- axiom verification ----------------------------------------------------

struct AxiomReport {
    struct Entry {
        std::string axiom;
        bool passed = true;
        std::vector<Elem> witness;   // first counterexample, if any
        std::string witness_names;   // rendered for reports
    };
    std::vector<Entry> entries;
    bool all_passed = true;
    bool sampled = false;

    const Entry* find(const std::string& axiom) const;
};

/// Exhaustive check of axioms A1..A8 plus 0 != 1 over a finite carrier,
/// recording the first counterexample per failed axiom in canonical scan
/// order.
AxiomReport check_axioms(const Algebra& a);

/// Bounded check of the same axioms over a sample of the carrier (for lazy
/// interval backends); finite backends delegate to check_axioms.
AxiomReport sampled_axiom_check(const Algebra& a, const std::vector<Elem>& sample);

/// Canonical sample of the infinite interval of (Z lex Z, u): the elements
/// (0,m) and u-(0,m) for 0 <= m <= bound.
std::vector<Elem> lex_sample(const GammaAlgebra& a, int bound);

}  // namespace pmv

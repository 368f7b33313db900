#pragma once

#include "pmv/rational.hpp"

namespace pmv {

enum class GroupKind { zn_componentwise, z2_lex };

/// A concrete unital lattice-ordered abelian group with integer coordinates:
/// either Z^n under the componentwise order or Z^2 under the lexicographic
/// (total) order. Elements are plain coordinate vectors; every operation
/// validates that its operands belong to the group.
///
/// The interface does not rely on commutativity in its contract, but both
/// bundled backends are abelian.
class UnitalGroup {
  public:
    /// Z^n with componentwise order; the unit must have every coordinate >= 1
    /// so that it is a strong unit.
    static UnitalGroup zn(int dim, Vec unit);

    /// Z lex Z; the unit's first coordinate must be >= 1 (any such element is
    /// a strong unit for the lexicographic order).
    static UnitalGroup z2lex(Vec unit = Vec{Rat(1), Rat(0)});

    GroupKind kind() const { return kind_; }
    int dim() const { return dim_; }
    const Vec& unit() const { return unit_; }
    Vec zero() const { return Vec(dim_, Rat(0)); }

    Vec add(const Vec& x, const Vec& y) const;
    Vec neg(const Vec& x) const;
    Vec sub(const Vec& x, const Vec& y) const;  // x + (-y)
    bool leq(const Vec& x, const Vec& y) const;
    Vec join(const Vec& x, const Vec& y) const;
    Vec meet(const Vec& x, const Vec& y) const;

    /// Throws std::invalid_argument unless x has the right dimension and
    /// integer coordinates.
    void require_element(const Vec& x) const;

    bool operator==(const UnitalGroup& other) const;

  private:
    UnitalGroup(GroupKind kind, int dim, Vec unit);

    GroupKind kind_;
    int dim_;
    Vec unit_;
};

enum class RieszKind { qn, lexq2 };

/// A concrete unital Riesz-space representation over the rationals: Q^n with
/// componentwise order and unit (1,...,1), or Q^2 with the lexicographic
/// order and unit (1,0). Q^n plays the role of C(T) over the finite
/// coordinate set T = {1,...,n} (point evaluations as the coordinate states);
/// lex Q^2 is the standard non-Archimedean example.
class RieszRep {
  public:
    static RieszRep qn(int n);
    static RieszRep lexq2();

    RieszKind kind() const { return kind_; }
    int dim() const { return dim_; }
    const Vec& unit() const { return unit_; }
    Vec zero() const { return Vec(dim_, Rat(0)); }
    bool archimedean() const { return kind_ == RieszKind::qn; }
    bool dedekind_complete() const { return kind_ == RieszKind::qn; }

    Vec add(const Vec& x, const Vec& y) const;
    Vec sub(const Vec& x, const Vec& y) const;
    Vec neg(const Vec& x) const;
    /// Scalar multiple; preserves the positive cone exactly when a >= 0.
    Vec scale(const Rat& a, const Vec& x) const;
    Vec abs(const Vec& x) const;  // x v 0 + (-x) v 0
    bool leq(const Vec& x, const Vec& y) const;
    Vec join(const Vec& x, const Vec& y) const;
    Vec meet(const Vec& x, const Vec& y) const;

    /// 0 <= x <= 1_R in the representation's order.
    bool in_unit_interval(const Vec& x) const;

    /// Addition of Gamma(R, 1_R): (x + y) ^ 1_R, for unit-interval operands.
    Vec oplus_unit(const Vec& x, const Vec& y) const;

    /// ||x||_{1_R} = inf{ a >= 0 : |x| <= a 1_R }. For Q^n this is the max
    /// absolute coordinate (the sup-norm over T). For lex Q^2 it equals the
    /// absolute first coordinate; the infimum need not be attained there
    /// (|(2,5)| <= (a,0) fails at a = 2 but holds for every a > 2).
    Rat norm_unit(const Vec& x) const;

    void require_element(const Vec& x) const;

    bool operator==(const RieszRep& other) const;

  private:
    RieszRep(RieszKind kind, int dim, Vec unit);

    RieszKind kind_;
    int dim_;
    Vec unit_;
};

/// Lexicographic comparison of equal-length vectors.
int lex_compare(const Vec& x, const Vec& y);

}  // namespace pmv

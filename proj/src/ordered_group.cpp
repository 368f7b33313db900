#include "pmv/ordered_group.hpp"

namespace pmv {

int lex_compare(const Vec& x, const Vec& y) {
    require_same_dim(x, y, "lex_compare");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < y[i]) return -1;
        if (x[i] > y[i]) return 1;
    }
    return 0;
}

UnitalGroup::UnitalGroup(GroupKind kind, int dim, Vec unit)
    : kind_(kind), dim_(dim), unit_(std::move(unit)) {}

UnitalGroup UnitalGroup::zn(int dim, Vec unit) {
    if (dim < 1) throw std::invalid_argument("UnitalGroup::zn: dimension must be positive");
    if (static_cast<int>(unit.size()) != dim)
        throw std::invalid_argument("UnitalGroup::zn: unit dimension mismatch");
    for (const Rat& c : unit)
        if (!is_integer(c) || c < 1)
            throw std::invalid_argument("UnitalGroup::zn: unit coordinates must be integers >= 1");
    return UnitalGroup(GroupKind::zn_componentwise, dim, std::move(unit));
}

UnitalGroup UnitalGroup::z2lex(Vec unit) {
    if (unit.size() != 2) throw std::invalid_argument("UnitalGroup::z2lex: unit must be 2-dimensional");
    for (const Rat& c : unit)
        if (!is_integer(c)) throw std::invalid_argument("UnitalGroup::z2lex: unit must be integral");
    if (unit[0] < 1)
        throw std::invalid_argument("UnitalGroup::z2lex: first unit coordinate must be >= 1");
    return UnitalGroup(GroupKind::z2_lex, 2, std::move(unit));
}

void UnitalGroup::require_element(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("UnitalGroup: dimension mismatch");
    for (const Rat& c : x)
        if (!is_integer(c)) throw std::invalid_argument("UnitalGroup: coordinates must be integers");
}

Vec UnitalGroup::add(const Vec& x, const Vec& y) const {
    require_element(x);
    require_element(y);
    return vec_add(x, y);
}

Vec UnitalGroup::neg(const Vec& x) const {
    require_element(x);
    return vec_neg(x);
}

Vec UnitalGroup::sub(const Vec& x, const Vec& y) const {
    require_element(x);
    require_element(y);
    return vec_sub(x, y);
}

bool UnitalGroup::leq(const Vec& x, const Vec& y) const {
    require_element(x);
    require_element(y);
    if (kind_ == GroupKind::z2_lex) return lex_compare(x, y) <= 0;
    for (int i = 0; i < dim_; ++i)
        if (x[i] > y[i]) return false;
    return true;
}

Vec UnitalGroup::join(const Vec& x, const Vec& y) const {
    require_element(x);
    require_element(y);
    if (kind_ == GroupKind::z2_lex) return lex_compare(x, y) >= 0 ? x : y;
    Vec r(dim_);
    for (int i = 0; i < dim_; ++i) r[i] = rmax(x[i], y[i]);
    return r;
}

Vec UnitalGroup::meet(const Vec& x, const Vec& y) const {
    require_element(x);
    require_element(y);
    if (kind_ == GroupKind::z2_lex) return lex_compare(x, y) <= 0 ? x : y;
    Vec r(dim_);
    for (int i = 0; i < dim_; ++i) r[i] = rmin(x[i], y[i]);
    return r;
}

bool UnitalGroup::operator==(const UnitalGroup& other) const {
    return kind_ == other.kind_ && dim_ == other.dim_ && unit_ == other.unit_;
}

RieszRep::RieszRep(RieszKind kind, int dim, Vec unit)
    : kind_(kind), dim_(dim), unit_(std::move(unit)) {}

RieszRep RieszRep::qn(int n) {
    if (n < 1) throw std::invalid_argument("RieszRep::qn: dimension must be positive");
    return RieszRep(RieszKind::qn, n, Vec(n, Rat(1)));
}

RieszRep RieszRep::lexq2() { return RieszRep(RieszKind::lexq2, 2, Vec{Rat(1), Rat(0)}); }

void RieszRep::require_element(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("RieszRep: dimension mismatch");
}

Vec RieszRep::add(const Vec& x, const Vec& y) const {
    require_element(x);
    require_element(y);
    return vec_add(x, y);
}

Vec RieszRep::sub(const Vec& x, const Vec& y) const {
    require_element(x);
    require_element(y);
    return vec_sub(x, y);
}

Vec RieszRep::neg(const Vec& x) const {
    require_element(x);
    return vec_neg(x);
}

Vec RieszRep::scale(const Rat& a, const Vec& x) const {
    require_element(x);
    return vec_scale(a, x);
}

bool RieszRep::leq(const Vec& x, const Vec& y) const {
    require_element(x);
    require_element(y);
    if (kind_ == RieszKind::lexq2) return lex_compare(x, y) <= 0;
    for (int i = 0; i < dim_; ++i)
        if (x[i] > y[i]) return false;
    return true;
}

Vec RieszRep::join(const Vec& x, const Vec& y) const {
    require_element(x);
    require_element(y);
    if (kind_ == RieszKind::lexq2) return lex_compare(x, y) >= 0 ? x : y;
    Vec r(dim_);
    for (int i = 0; i < dim_; ++i) r[i] = rmax(x[i], y[i]);
    return r;
}

Vec RieszRep::meet(const Vec& x, const Vec& y) const {
    require_element(x);
    require_element(y);
    if (kind_ == RieszKind::lexq2) return lex_compare(x, y) <= 0 ? x : y;
    Vec r(dim_);
    for (int i = 0; i < dim_; ++i) r[i] = rmin(x[i], y[i]);
    return r;
}

Vec RieszRep::abs(const Vec& x) const {
    const Vec z = zero();
    return add(join(x, z), join(neg(x), z));
}

bool RieszRep::in_unit_interval(const Vec& x) const {
    return leq(zero(), x) && leq(x, unit_);
}

Vec RieszRep::oplus_unit(const Vec& x, const Vec& y) const {
    return meet(add(x, y), unit_);
}

Rat RieszRep::norm_unit(const Vec& x) const {
    require_element(x);
    if (kind_ == RieszKind::lexq2) return rabs(x[0]);
    Rat best(0);
    for (const Rat& c : x) best = rmax(best, rabs(c));
    return best;
}

bool RieszRep::operator==(const RieszRep& other) const {
    return kind_ == other.kind_ && dim_ == other.dim_ && unit_ == other.unit_;
}

}  // namespace pmv

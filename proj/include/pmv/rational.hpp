#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmv {

/// Exact rational scalar. All numeric work in the library is done with these;
/// floating point never appears.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

/// Exact integer, used for lattice/Hermite computations.
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;

/// Rational coordinate vector.
using Vec = std::vector<Rat>;

inline const Rat& rmax(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline const Rat& rmin(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline Rat rabs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

inline bool is_integer(const Rat& a) { return denominator(a) == 1; }

/// Parses "p", "-p" or "p/q" with q > 0 after normalization. Throws
/// std::invalid_argument on anything else (including q = 0).
Rat parse_rat(const std::string& text);

/// Canonical form: "p" when the denominator is 1, else "p/q" with q > 1
/// and the sign on the numerator.
std::string rat_str(const Rat& value);

/// "(a, b, c)" display form for coordinate vectors.
std::string vec_str(const Vec& value);

// Componentwise vector helpers shared by the group and Riesz backends.
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Rat& a, const Vec& v);
bool vec_is_zero(const Vec& a);

inline void require_same_dim(const Vec& a, const Vec& b, const char* where) {
    if (a.size() != b.size())
        throw std::invalid_argument(std::string(where) + ": dimension mismatch");
}

}  // namespace pmv

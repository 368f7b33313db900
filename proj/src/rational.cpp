#include "pmv/rational.hpp"

#include <sstream>

namespace pmv {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rat: empty string");
    const auto slash = text.find('/');
    const auto parse_int = [](const std::string& part) -> Int {
        if (part.empty()) throw std::invalid_argument("parse_rat: empty integer part");
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw std::invalid_argument("parse_rat: sign without digits");
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw std::invalid_argument("parse_rat: invalid character in '" + part + "'");
        return Int(part);
    };
    if (slash == std::string::npos) return Rat(parse_int(text));
    const Int num = parse_int(text.substr(0, slash));
    const Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rat: zero denominator");
    return Rat(num) / Rat(den);
}

std::string rat_str(const Rat& value) {
    return value.str();  // mpq canonical form: "p" or "p/q"
}

std::string vec_str(const Vec& value) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < value.size(); ++i) {
        if (i) out << ", ";
        out << rat_str(value[i]);
    }
    out << ')';
    return out.str();
}

Vec vec_add(const Vec& a, const Vec& b) {
    require_same_dim(a, b, "vec_add");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    require_same_dim(a, b, "vec_sub");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_neg(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Vec vec_scale(const Rat& a, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = a * v[i];
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const Rat& x : a)
        if (x != 0) return false;
    return true;
}

}  // namespace pmv

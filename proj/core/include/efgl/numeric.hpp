#ifndef EFGL_NUMERIC_HPP
#define EFGL_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <sstream>
#include <string>

namespace efgl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

// The exact integers form a ring whose only units are +-1; the rationals
// invert everything nonzero. Both are used as series coefficients.
struct IntRing {
    using Elem = Int;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem from_int(long n) const { return n; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::optional<Elem> try_invert(const Elem& a) const {
        if (a == 1 || a == -1) return a;
        return std::nullopt;
    }
    std::string str(const Elem& a) const { return a.str(); }
    std::string name() const { return "Z"; }
};

struct RatRing {
    using Elem = Rat;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem from_int(long n) const { return n; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::optional<Elem> try_invert(const Elem& a) const {
        if (a == 0) return std::nullopt;
        return Elem(1) / a;
    }
    std::string str(const Elem& a) const {
        std::ostringstream os;
        os << a;
        return os.str();
    }
    std::string name() const { return "Q"; }
};

} // namespace efgl

#endif

#ifndef PROJRIG_RATIONAL_HPP
#define PROJRIG_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace projrig {

// Exact scalar type. All rank/kernel/cokernel verdicts are computed over
// these; doubles are reserved for constructions involving square roots.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "3", "-7/2". Throws on malformed input or zero denominator.
inline Rational parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("cannot parse rational: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

// Uniform helpers so templated code can treat Rational and double alike.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static std::string str(const Rational& x) { return x.get_str(); }
    static double as_double(const Rational& x) { return x.get_d(); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    // Context-free zero test; rank decisions never rely on this (they go
    // through the SVD threshold), it only guards normalization choices.
    static bool is_zero(double x) { return x == 0.0; }
    static std::string str(double x) { return std::to_string(x); }
    static double as_double(double x) { return x; }
};

}  // namespace projrig

#endif

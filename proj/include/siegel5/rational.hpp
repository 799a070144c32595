#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace siegel5 {

// Plain value semantics (no expression templates) so the types compose with
// Eigen and std containers.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Reduce q into the interval [0, 1), exactly (value mod Z).
inline Rational mod1(const Rational& q) {
    Integer n = numerator(q), d = denominator(q);
    Integer r = n % d;
    if (r < 0) r += d;
    return Rational(r, d);
}

// Error hierarchy shared by all modules.  The CLI maps these to exit code 2;
// verification failures are results, not exceptions.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct weight_mismatch_error : error {
    using error::error;
};
struct precision_error : error {
    using error::error;
};
struct support_cone_error : error {
    using error::error;
};
struct data_error : error {
    using error::error;
};
struct domain_error : error {
    using error::error;
};

} // namespace siegel5

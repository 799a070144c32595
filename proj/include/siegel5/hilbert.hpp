#pragma once

#include "siegel5/rational.hpp"

#include <vector>

namespace siegel5 {

/// Dense integer polynomial in t, coefficient i of t^i.
using IntPoly = std::vector<Integer>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_one_minus_t_pow(int e); // 1 - t^e

/// Numerator / denominator pair of integer polynomials in t.
struct RationalFunction {
    IntPoly numerator;
    IntPoly denominator;
};

/// True when t^deg * P(1/t) = P(t).
bool is_palindromic(const IntPoly& p);

/// Power-series coefficients c_0..c_K of f at t = 0 by exact long division.
/// The denominator's constant term must be nonzero.  K is capped at 200.
std::vector<Rational> expand_rational(const RationalFunction& f, int upto);

/// The palindromic degree-14 numerator factor P(t) of the dimension series.
IntPoly dimension_series_palindrome();

/// The generating function sum_k dim M_k t^k with numerator
/// (1-t)^2 (1+t^7) P(t) and denominator (1-t^2)^2 (1-t^3)(1-t^4)^2 (1-t^5).
RationalFunction siegel_dimension_series();

/// dim M_k for the degree-2 level-5 group, k >= 0.
Integer siegel_dim(int k);

/// dim S_k(Gamma_0(5)) for elliptic cusp forms: genus 0, two elliptic
/// points of order 2, no order-3 points, two cusps, index 6:
///     (k-1)(g-1) + 2 floor(k/4) + 2 (k/2 - 1),   k even, k >= 4.
Integer classical_cusp_dim(int k);

struct BiConsistencyRow {
    int k = 0;
    Integer siegel;     // dim M_k
    Integer classical;  // dim S_k(Gamma_0(5))
    Integer implied;    // dim M_k - 2 dim S_k(Gamma_0(5)) - 3
    bool ok = false;    // implied >= 0, and == 1 at k = 4
};

/// The dimension relation dim M_k = dim S_k + 2 dim S_k(Gamma_0(5)) + 3 for
/// even k > 2, used one-sidedly: the implied Siegel cusp dimension must be
/// nonnegative, and equal 1 at k = 4.
std::vector<BiConsistencyRow> bi_consistency(int upto);

} // namespace siegel5

#pragma once

#include "siegel5/rational.hpp"

#include <compare>
#include <map>
#include <vector>

namespace siegel5 {

/// Exponent triple (a, b, c) of q^a r^b s^c.  Ordered by (a+c, c, b), the
/// row order used for all printed tables, so that map iteration and
/// "first nonzero coefficient" are canonical.
struct ExpIndex {
    int a = 0;
    int b = 0;
    int c = 0;

    int order() const { return a + c; }

    friend bool operator==(const ExpIndex&, const ExpIndex&) = default;
    friend std::strong_ordering operator<=>(const ExpIndex& x, const ExpIndex& y) {
        if (auto c0 = (x.a + x.c) <=> (y.a + y.c); c0 != 0) return c0;
        if (auto c1 = x.c <=> y.c; c1 != 0) return c1;
        return x.b <=> y.b;
    }
};

/// Truncated Fourier expansion sum c(a,b,c) q^a r^b s^c with exact rational
/// coefficients.  Coefficients are complete for all a + c <= trunc; queries
/// beyond that are precision errors, never silent zeros.  Stored keys satisfy
/// the support cone b^2 <= 4ac and never map to zero.
class FourierSeries {
public:
    using CoeffMap = std::map<ExpIndex, Rational>;

    FourierSeries(int weight, int trunc) : weight_(weight), trunc_(trunc) {
        if (trunc < 0) throw precision_error("truncation order must be >= 0");
    }

    int weight() const { return weight_; }
    int trunc() const { return trunc_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Least total order a+c with a nonzero coefficient; trunc+1 when the
    /// series vanishes identically within truncation.  This is a proven
    /// vanishing order: coefficients below it are exact zeros.
    int vanishing_order() const {
        return coeffs_.empty() ? trunc_ + 1 : coeffs_.begin()->first.order();
    }

    const Rational& coefficient(int a, int b, int c) const;

    /// Insert a coefficient, enforcing the truncation and support-cone
    /// invariants.  Zero values clear the slot.
    void set(int a, int b, int c, Rational v);

    static FourierSeries zero(int weight, int trunc) { return {weight, trunc}; }
    static FourierSeries one(int trunc);

    friend bool operator==(const FourierSeries&, const FourierSeries&) = default;

private:
    int weight_;
    int trunc_;
    CoeffMap coeffs_;

    friend FourierSeries series_add(const FourierSeries&, const FourierSeries&);
    friend FourierSeries series_mul(const FourierSeries&, const FourierSeries&);
    friend FourierSeries series_scale(const FourierSeries&, const Rational&);
    friend FourierSeries derive(const FourierSeries&, char);
    friend FourierSeries swap_qs(const FourierSeries&);
    friend FourierSeries truncate_to(const FourierSeries&, int);
};

/// Coefficient-wise sum.  Weights must agree; trunc = min of truncs.
FourierSeries series_add(const FourierSeries& x, const FourierSeries& y);

/// Convolution product.  Weight adds.  The result is complete through
///     trunc = min(x.trunc + v(y), y.trunc + v(x))
/// where v is the vanishing order: a splitting of total order n has one
/// factor of order <= n - v(other side), so all contributing terms with
/// n <= trunc lie inside the factors' truncations.
FourierSeries series_mul(const FourierSeries& x, const FourierSeries& y);

FourierSeries series_scale(const FourierSeries& x, const Rational& c);
FourierSeries operator+(const FourierSeries& x, const FourierSeries& y);
FourierSeries operator-(const FourierSeries& x, const FourierSeries& y);
FourierSeries operator*(const FourierSeries& x, const FourierSeries& y);
FourierSeries operator*(const Rational& c, const FourierSeries& x);
FourierSeries operator-(const FourierSeries& x);

/// Normalized derivative D = (2 pi i)^{-1} d/dvar: scales c(a,b,c) by a, b
/// or c for var = 'tau', 'z', 'w'.  Keeps all coefficients rational.  The
/// weight field carries over; derivatives are quasi-modular building blocks
/// consumed only by the Jacobian.
FourierSeries derive(const FourierSeries& x, char var); // var in {'t','z','w'}

/// The involution q <-> s: moves c(a,b,c) to (c,b,a).
FourierSeries swap_qs(const FourierSeries& x);

/// Restriction to a smaller truncation order (drops higher coefficients).
FourierSeries truncate_to(const FourierSeries& x, int trunc);

/// Exact n-th power (n >= 0).
FourierSeries series_pow(const FourierSeries& x, int n);

/// True when x and y have identical coefficients for all a + c <= upto.
/// Both series must be valid through upto.
bool same_coefficients(const FourierSeries& x, const FourierSeries& y, int upto);

} // namespace siegel5

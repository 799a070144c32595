#include "siegel5/hilbert.hpp"

#include <algorithm>

namespace siegel5 {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

IntPoly poly_one_minus_t_pow(int e) {
    IntPoly p(e + 1, Integer(0));
    p[0] = 1;
    p[e] = -1;
    return p;
}

bool is_palindromic(const IntPoly& p) {
    if (p.empty()) return false;
    size_t deg = p.size() - 1;
    while (deg > 0 && p[deg] == 0) --deg;
    for (size_t i = 0; i <= deg; ++i)
        if (p[i] != p[deg - i]) return false;
    return true;
}

std::vector<Rational> expand_rational(const RationalFunction& f, int upto) {
    if (upto < 0 || upto > 200)
        throw domain_error("expansion order must be between 0 and 200");
    if (f.denominator.empty() || f.denominator[0] == 0)
        throw domain_error("rational function is not expandable at t = 0");
    std::vector<Rational> c(upto + 1);
    for (int n = 0; n <= upto; ++n) {
        Rational s = n < static_cast<int>(f.numerator.size()) ? Rational(f.numerator[n]) : Rational(0);
        for (int j = 1; j <= n && j < static_cast<int>(f.denominator.size()); ++j)
            s -= Rational(f.denominator[j]) * c[n - j];
        c[n] = s / Rational(f.denominator[0]);
    }
    return c;
}

IntPoly dimension_series_palindrome() {
    return {1, 2, 2, 1, 3, 5, 8, 8, 8, 5, 3, 1, 2, 2, 1};
}

RationalFunction siegel_dimension_series() {
    IntPoly num = poly_mul(poly_one_minus_t_pow(1), poly_one_minus_t_pow(1));
    IntPoly one_plus_t7(8, Integer(0));
    one_plus_t7[0] = 1;
    one_plus_t7[7] = 1;
    num = poly_mul(num, one_plus_t7);
    num = poly_mul(num, dimension_series_palindrome());

    IntPoly den = poly_mul(poly_one_minus_t_pow(2), poly_one_minus_t_pow(2));
    den = poly_mul(den, poly_one_minus_t_pow(3));
    den = poly_mul(den, poly_one_minus_t_pow(4));
    den = poly_mul(den, poly_one_minus_t_pow(4));
    den = poly_mul(den, poly_one_minus_t_pow(5));
    return {num, den};
}

Integer siegel_dim(int k) {
    if (k < 0) throw domain_error("siegel_dim: weight must be nonnegative");
    static const std::vector<Rational> cache = expand_rational(siegel_dimension_series(), 200);
    if (k >= static_cast<int>(cache.size())) throw domain_error("siegel_dim: weight above cap 200");
    if (!is_integer(cache[k])) throw error("dimension series coefficient is not integral");
    return numerator(cache[k]);
}

Integer classical_cusp_dim(int k) {
    if (k % 2 != 0 || k < 4)
        throw domain_error("classical_cusp_dim requires even k >= 4");
    return Integer(-(k - 1) + 2 * (k / 4) + 2 * (k / 2 - 1));
}

std::vector<BiConsistencyRow> bi_consistency(int upto) {
    if (upto < 4) throw domain_error("bi_consistency requires upto >= 4");
    std::vector<BiConsistencyRow> rows;
    for (int k = 4; k <= upto; k += 2) {
        BiConsistencyRow row;
        row.k = k;
        row.siegel = siegel_dim(k);
        row.classical = classical_cusp_dim(k);
        row.implied = row.siegel - 2 * row.classical - 3;
        row.ok = row.implied >= 0 && (k != 4 || row.implied == 1);
        rows.push_back(row);
    }
    return rows;
}

} // namespace siegel5

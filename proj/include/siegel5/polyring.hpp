#pragma once

#include "siegel5/fourier.hpp"
#include "siegel5/gendata.hpp"

#include <array>
#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <vector>

namespace siegel5 {

/// Monomial F1^e1 F2^e2 G1^e3 G2^e4 XJ^eJ.  Term order is lexicographic on
/// (eJ, e1, e2, e3, e4), the canonical order for reports and division.
struct Monomial {
    std::array<int, 5> e{0, 0, 0, 0, 0}; // e1, e2, e3, e4, eJ

    int weight() const { return e[0] + e[1] + 2 * e[2] + 2 * e[3] + 9 * e[4]; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
        if (auto c = x.e[4] <=> y.e[4]; c != 0) return c;
        for (int i = 0; i < 4; ++i)
            if (auto c = x.e[i] <=> y.e[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
};

/// Weighted polynomial in F1, F2 (weight 1), G1, G2 (weight 2) and XJ
/// (weight 9) with exact rational coefficients.
class GradedPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    GradedPoly() = default;

    static GradedPoly variable(int index); // 0..3 -> F1,F2,G1,G2 ; 4 -> XJ
    static GradedPoly constant(const Rational& c);
    static GradedPoly term(const Monomial& m, const Rational& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Rational& c);

    bool is_homogeneous() const;
    /// Grading weight; requires a homogeneous nonzero polynomial.
    int weight() const;

    friend bool operator==(const GradedPoly&, const GradedPoly&) = default;

private:
    TermMap terms_;
};

GradedPoly operator+(const GradedPoly& p, const GradedPoly& q);
GradedPoly operator-(const GradedPoly& p, const GradedPoly& q);
GradedPoly operator*(const GradedPoly& p, const GradedPoly& q);
GradedPoly operator*(const Rational& c, const GradedPoly& p);
GradedPoly operator-(const GradedPoly& p);
GradedPoly poly_pow(const GradedPoly& p, int n);

/// The automorphism eps2: F1 -> F2, F2 -> -F1, G1 -> G2, G2 -> G1,
/// XJ -> -XJ.  A graded ring automorphism of order 4.
GradedPoly apply_eps2(const GradedPoly& p);

/// Reynolds operator of <eps2>: p -> (1/4) sum_i eps2^i(p).  Idempotent
/// projection onto the invariant ring.
GradedPoly reynolds(const GradedPoly& p);

struct DivisionResult {
    GradedPoly quotient;
    bool exact = false;
};

/// Multivariate division testing exact divisibility: exact is true iff
/// p = quotient * d.  Inexactness is a result, not an error.
DivisionResult poly_divide(const GradedPoly& p, const GradedPoly& d);

/// Substitute F1 -> f1, ..., XJ -> J and expand.  p must be homogeneous;
/// the result weight is the grading weight of p.
FourierSeries poly_eval(const GradedPoly& p, const GeneratorSet& gens);

/// The embedded weight-18 polynomial P with J^2 = lambda * P(f1,f2,g1,g2).
GradedPoly load_jsquare_poly(const std::filesystem::path& file);
std::string jsquare_table_checksum(const std::filesystem::path& file);

/// The eighteen generators of the ring of holomorphic forms, of weights
/// 2, 4,4,4,4,4, 6,6,6,6, 10, 11,11,11, 13,13,13, 15.
std::vector<GradedPoly> holomorphic_generators();

} // namespace siegel5

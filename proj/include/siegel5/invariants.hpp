#pragma once

#include "siegel5/linalg.hpp"
#include "siegel5/polyring.hpp"

#include <map>
#include <vector>

namespace siegel5 {

/// One group element acting on the graded ring: a block for the weight-1
/// variables (F1, F2), a block for the weight-2 variables (G1, G2), and a
/// sign character on XJ.
struct ActionElement {
    Eigen::Matrix<Rational, 2, 2> f_block; // columns give the images of F1, F2
    Eigen::Matrix<Rational, 2, 2> g_block; // columns give the images of G1, G2
    int xj_sign = 1;
};

/// A finite matrix group respecting the weight split.  Closure under
/// multiplication is validated on construction.
struct GroupAction {
    std::vector<ActionElement> elements; // element 0 is the identity

    static GroupAction eps2();    // order 4, XJ -> -XJ
    static GroupAction eps4();    // order 2 (= eps2^2), XJ fixed
    static GroupAction trivial();
};

enum class Character { trivial, det_j };

/// Substitution action of one element on a polynomial (XJ picks up the sign).
GradedPoly apply_action(const ActionElement& g, const GradedPoly& p);

/// Verdicts for check_invariance.
std::vector<bool> check_invariance(const std::vector<GradedPoly>& polys, const GroupAction& action);

/// Graded dimensions of the character-isotypic component of C[F1,F2,G1,G2]
/// in weights 0..upto, by the Molien averaging formula: the chi-isotypic
/// dimension in weight k is the t^k coefficient of
///     (1/|G|) sum_g conj(chi(g)) / (det(1 - t B_g) det(1 - t^2 C_g)).
std::vector<Integer> molien_series(const GroupAction& action, Character chi, int upto);

/// The same dimensions by explicit Reynolds projection and exact rank on
/// monomial coordinates; the independent cross-check of molien_series.
std::vector<Integer> molien_series_by_rank(const GroupAction& action, Character chi, int upto);

/// Isotypic dimensions for all four characters of a cyclic action (values
/// of chi at the generator are the fourth roots of unity), via traces on
/// the monomial basis.  Used for the character sum rule.
std::vector<Integer> isotypic_dims_cyclic4(const GroupAction& action, int weight);

/// Monomials of C[F1,F2,G1,G2] of the given weight, canonical order.
std::vector<Monomial> weight_monomials(int weight);

/// Count of new minimal invariant-ring generators per weight <= upto, for
/// the module C[F1,F2,G1,G2] + XJ * C[F1,F2,G1,G2] (XJ of weight 9 carrying
/// the sign character).  Returns the multiset of degrees.
std::vector<int> minimal_generator_degrees(const GroupAction& action, int upto);

} // namespace siegel5

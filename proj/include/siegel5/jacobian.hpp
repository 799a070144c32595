#pragma once

#include "siegel5/fourier.hpp"
#include "siegel5/gendata.hpp"

#include <array>
#include <optional>
#include <string>

namespace siegel5 {

class GradedPoly;

/// Modular Jacobian of four forms: the 4x4 determinant with first row
/// (k1 psi1, ..., k4 psi4) and the D_tau, D_z, D_w rows below, expanded by
/// cofactors along the first row.  Result weight is k1+k2+k3+k4+3.
/// Each psi_i must have weight k_i.
FourierSeries jacobian(const std::array<const FourierSeries*, 4>& psi,
                       const std::array<int, 4>& k);

FourierSeries jacobian(const FourierSeries& p1, const FourierSeries& p2, const FourierSeries& p3,
                       const FourierSeries& p4);

/// Compute J = jacobian(f1, f2, g1, g2) and attach it to the set.
void attach_jacobian(GeneratorSet& gens);

struct JacobianSquareResult {
    bool identity_holds = false;          // J^2 == lambda * eval(P) on the common region
    std::optional<Rational> lambda;       // absent when both sides vanish identically
    int compared_order = 0;               // identity checked for all a + c <= compared_order
    std::string witness;                  // offending triple on failure
};

/// Verify J^2 = lambda * P(f1, f2, g1, g2) with a single rational lambda,
/// determined from the first nonzero coefficient (canonical order) and then
/// enforced on every coefficient of the common valid region.  When both
/// sides vanish identically within truncation the verdict reports the
/// degenerate match with lambda absent.
JacobianSquareResult jacobian_square_check(const FourierSeries& J, const GradedPoly& P,
                                           const GeneratorSet& gens);

} // namespace siegel5

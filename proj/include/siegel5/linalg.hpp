#pragma once

#include "siegel5/rational.hpp"

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <vector>

namespace siegel5 {

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using MatrixZ = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Rank over Q by fraction-free (Bareiss) elimination after clearing row
/// denominators.  Integer pivots avoid rational blowup.
int exact_rank(const MatrixQ& m);
int exact_rank(MatrixZ m);

/// Basis of the left kernel { u : u^T m = 0 }, row-reduced, deterministic.
std::vector<VectorQ> left_kernel(const MatrixQ& m);

/// Signature (positives, negatives, zeros) of a symmetric rational matrix
/// by congruence reduction (Jacobi / law of inertia).
struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};
Signature symmetric_signature(MatrixQ m);

/// Exact determinant by Bareiss elimination.
Rational exact_determinant(const MatrixQ& m);

} // namespace siegel5

#pragma once

#include "siegel5/linalg.hpp"

#include <array>
#include <string>

namespace siegel5 {

using Matrix4Q = Eigen::Matrix<Rational, 4, 4>;
using Matrix2Q = Eigen::Matrix<Rational, 2, 2>;
using Matrix5Q = Eigen::Matrix<Rational, 5, 5>;

/// Antisymmetric 4x4 matrix in the entry labelling
///   [[ 0,  a,  b,  c],
///    [-a,  0,  d,  e],
///    [-b, -d,  0,  f],
///    [-c, -e, -f,  0]].
/// Membership in the lattice L additionally requires integer entries with
/// a = 0 mod 5 and b + e = 0.
struct AntisymMatrix {
    Rational a, b, c, d, e, f;

    Matrix4Q to_matrix() const;
    bool in_jperp() const { return b + e == 0; }
    bool in_lattice() const;
    bool in_dual_lattice() const;
};

AntisymMatrix operator+(const AntisymMatrix& x, const AntisymMatrix& y);
AntisymMatrix operator*(const Rational& c, const AntisymMatrix& x);

/// pf(M) = af - be + cd; the quadratic form Q of the model.
Rational pfaffian(const AntisymMatrix& m);

/// Pfaffian of an arbitrary antisymmetric 4x4 matrix (entries read off the
/// upper triangle); antisymmetry is validated.
Rational pfaffian(const Matrix4Q& m);

/// <x, y> = pf(x+y) - pf(x) - pf(y).
Rational bilinear(const AntisymMatrix& x, const AntisymMatrix& y);

/// The symplectic form matrix the group preserves under conjugation.
Matrix4Q symplectic_form();
bool is_symplectic(const Matrix4Q& m);

/// Rational sample point Z = [[tau, z], [z, w]]; the algebraic identities
/// are polynomial, so exact rational points certify them.
struct SiegelPoint {
    Rational tau, z, w;
    Rational det() const { return tau * w - z * z; }
};

/// The embedding Z -> phi(Z) with entries (1, z, w, -tau, -z, tau w - z^2).
AntisymMatrix phi_embed(const SiegelPoint& z);

/// Moebius action (aZ + b)(cZ + d)^{-1} and the automorphy factor
/// j(M; Z) = det(cZ + d).  Throws when cZ + d is singular.
struct MoebiusImage {
    SiegelPoint image;
    Rational automorphy;
};
MoebiusImage moebius_act(const Matrix4Q& m, const SiegelPoint& z);

struct TransformVerdict {
    bool equal = false;
    std::string witness;
};

/// Exact verification of M^T phi(Z) M = j(M; Z) phi(M Z) at a rational
/// point.  M must be symplectic and cZ + d invertible.
TransformVerdict check_transform(const Matrix4Q& m, const SiegelPoint& z);

/// The level-raising elements: eps_u = [[u,0,b,0],[0,1,0,0],[5,0,u*,0],[0,0,0,1]]
/// for integer solutions of u u* - 5 b = 1.  Requires gcd(u, 5) = 1.
Matrix4Q epsilon_u(int u);

/// Fixed basis of L: a = 5, d = 1, c = 1, f = 1, (b, e) = (1, -1).
std::array<AntisymMatrix, 5> lattice_basis();

struct GramInfo {
    Matrix5Q gram;
    Integer det_abs;
    Signature signature;
};

/// Gram matrix of the fixed basis under <.,.>, its |det| and signature.
GramInfo gram_of_L();

/// Primitive dual vector of norm 1/20 in the coset of gamma_1 whose
/// orthogonal complement is the Humbert surface 5 det(Z) = 1 - 5z.
AntisymMatrix humbert_vector();

/// Coefficients (A, B, C, D, E) of the Humbert equation
///   A det(Z) - C tau + 2 B z + D w + E = 0 for <phi(Z), lambda> = 0.
std::array<Rational, 5> humbert_equation(const AntisymMatrix& lambda);

} // namespace siegel5

#include "siegel5/lattice.hpp"

namespace siegel5 {

Matrix4Q AntisymMatrix::to_matrix() const {
    Matrix4Q m;
    m << 0, a, b, c, //
        -a, 0, d, e, //
        -b, -d, 0, f, //
        -c, -e, -f, 0;
    return m;
}

bool AntisymMatrix::in_lattice() const {
    for (const Rational* v : {&a, &b, &c, &d, &e, &f})
        if (!is_integer(*v)) return false;
    return b + e == 0 && numerator(a) % 5 == 0;
}

bool AntisymMatrix::in_dual_lattice() const {
    // Pairings against the fixed basis: 5f, c, d, a, 2b must be integers.
    if (b + e != 0) return false;
    return is_integer(5 * f) && is_integer(c) && is_integer(d) && is_integer(a) &&
           is_integer(2 * b);
}

AntisymMatrix operator+(const AntisymMatrix& x, const AntisymMatrix& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d, x.e + y.e, x.f + y.f};
}

AntisymMatrix operator*(const Rational& c, const AntisymMatrix& x) {
    return {c * x.a, c * x.b, c * x.c, c * x.d, c * x.e, c * x.f};
}

Rational pfaffian(const AntisymMatrix& m) { return m.a * m.f - m.b * m.e + m.c * m.d; }

Rational pfaffian(const Matrix4Q& m) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (m(i, j) != -m(j, i)) throw domain_error("pfaffian of a non-antisymmetric matrix");
    AntisymMatrix a{m(0, 1), m(0, 2), m(0, 3), m(1, 2), m(1, 3), m(2, 3)};
    return pfaffian(a);
}

Rational bilinear(const AntisymMatrix& x, const AntisymMatrix& y) {
    return pfaffian(x + y) - pfaffian(x) - pfaffian(y);
}

Matrix4Q symplectic_form() {
    Matrix4Q j;
    j << 0, 0, -1, 0, //
        0, 0, 0, -1,  //
        1, 0, 0, 0,   //
        0, 1, 0, 0;
    return j;
}

bool is_symplectic(const Matrix4Q& m) {
    const Matrix4Q j = symplectic_form();
    return Matrix4Q(m.transpose() * j * m) == j;
}

AntisymMatrix phi_embed(const SiegelPoint& p) {
    return {1, p.z, p.w, -p.tau, -p.z, p.det()};
}

MoebiusImage moebius_act(const Matrix4Q& m, const SiegelPoint& p) {
    Matrix2Q z;
    z << p.tau, p.z, p.z, p.w;
    const Matrix2Q a = m.block<2, 2>(0, 0), b = m.block<2, 2>(0, 2);
    const Matrix2Q c = m.block<2, 2>(2, 0), d = m.block<2, 2>(2, 2);
    const Matrix2Q czd = c * z + d;
    const Rational det = czd(0, 0) * czd(1, 1) - czd(0, 1) * czd(1, 0);
    if (det == 0) throw domain_error("moebius_act: cZ + d is singular at the sample point");
    Matrix2Q inv;
    inv << czd(1, 1), -czd(0, 1), -czd(1, 0), czd(0, 0);
    inv /= det;
    const Matrix2Q img = (a * z + b) * inv;
    if (img(0, 1) != img(1, 0)) throw error("moebius image is not symmetric");
    return {SiegelPoint{img(0, 0), img(0, 1), img(1, 1)}, det};
}

TransformVerdict check_transform(const Matrix4Q& m, const SiegelPoint& p) {
    if (!is_symplectic(m)) throw domain_error("check_transform: matrix is not symplectic");
    const auto mi = moebius_act(m, p);
    const Matrix4Q lhs = m.transpose() * phi_embed(p).to_matrix() * m;
    const Matrix4Q rhs = mi.automorphy * phi_embed(mi.image).to_matrix();
    if (lhs == rhs) return {true, ""};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (lhs(i, j) != rhs(i, j))
                return {false, "entry (" + std::to_string(i) + "," + std::to_string(j) + ")"};
    return {false, "unreachable"};
}

Matrix4Q epsilon_u(int u) {
    const int um = ((u % 5) + 5) % 5;
    if (um == 0) throw domain_error("epsilon_u requires gcd(u, 5) = 1");
    int ustar = 0;
    for (int v = 1; v < 5; ++v)
        if ((um * v) % 5 == 1) ustar = v;
    const int b = (u * ustar - 1) / 5;
    Matrix4Q m;
    m << u, 0, b, 0, //
        0, 1, 0, 0,  //
        5, 0, ustar, 0, //
        0, 0, 0, 1;
    if (!is_symplectic(m)) throw error("epsilon_u is not symplectic");
    return m;
}

std::array<AntisymMatrix, 5> lattice_basis() {
    // (a, b, c, d, e, f) coordinates; spans L exactly.
    return {AntisymMatrix{5, 0, 0, 0, 0, 0}, AntisymMatrix{0, 1, 0, 0, -1, 0},
            AntisymMatrix{0, 0, 1, 0, 0, 0}, AntisymMatrix{0, 0, 0, 1, 0, 0},
            AntisymMatrix{0, 0, 0, 0, 0, 1}};
}

GramInfo gram_of_L() {
    const auto basis = lattice_basis();
    Matrix5Q g;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) g(i, j) = bilinear(basis[i], basis[j]);
    GramInfo info{g, 0, symmetric_signature(g)};
    const Rational det = exact_determinant(g);
    if (!is_integer(det)) throw error("Gram determinant is not integral");
    info.det_abs = boost::multiprecision::abs(numerator(det));
    return info;
}

AntisymMatrix humbert_vector() {
    // lambda_0 = (1, 1/2, 0, 0, -1/2, -1/5): Q = -1/5 + 1/4 = 1/20.
    return {1, Rational(1, 2), 0, 0, Rational(-1, 2), Rational(-1, 5)};
}

std::array<Rational, 5> humbert_equation(const AntisymMatrix& lambda) {
    if (lambda.b + lambda.e != 0)
        throw domain_error("humbert_equation: vector is not in the orthogonal complement of J");
    // <phi(Z), lambda> = A det Z - C tau + 2 B z + D w + E.
    return {lambda.a, lambda.b, lambda.c, lambda.d, lambda.f};
}

} // namespace siegel5

#include "siegel5/linalg.hpp"

namespace siegel5 {

namespace {

MatrixZ clear_denominators(const MatrixQ& m) {
    MatrixZ z(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Integer lcm = 1;
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            lcm = boost::multiprecision::lcm(lcm, denominator(m(i, j)));
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const Rational v = m(i, j) * lcm;
            z(i, j) = numerator(v);
        }
    }
    return z;
}

} // namespace

int exact_rank(MatrixZ m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Integer prev = 1;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (m(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) m.row(piv).swap(m.row(r));
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            for (Eigen::Index j = c + 1; j < cols; ++j)
                m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return static_cast<int>(r);
}

int exact_rank(const MatrixQ& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return exact_rank(clear_denominators(m));
}

std::vector<VectorQ> left_kernel(const MatrixQ& m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    // Gauss-Jordan on [m | I]; kernel rows are those whose m-part vanishes.
    MatrixQ aug(rows, cols + rows);
    aug.leftCols(cols) = m;
    aug.rightCols(rows) = MatrixQ::Identity(rows, rows);
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (aug(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) aug.row(piv).swap(aug.row(r));
        const Rational p = aug(r, c);
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || aug(i, c) == 0) continue;
            const Rational f = aug(i, c) / p;
            aug.row(i) -= f * aug.row(r);
        }
        ++r;
    }
    std::vector<VectorQ> kernel;
    for (Eigen::Index i = r; i < rows; ++i) kernel.push_back(aug.row(i).tail(rows).transpose());
    return kernel;
}

Signature symmetric_signature(MatrixQ m) {
    if (m.rows() != m.cols()) throw domain_error("symmetric_signature requires a square matrix");
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i))
                throw domain_error("symmetric_signature requires a symmetric matrix");
    const Eigen::Index n = m.rows();
    Signature sig;
    for (Eigen::Index k = 0; k < n; ++k) {
        if (m(k, k) == 0) {
            // Find j > k with m(j,j) != 0 or an off-diagonal to fold in.
            Eigen::Index j = -1;
            for (Eigen::Index i = k + 1; i < n; ++i)
                if (m(i, i) != 0) {
                    j = i;
                    break;
                }
            if (j >= 0) {
                m.row(k).swap(m.row(j));
                m.col(k).swap(m.col(j));
            } else {
                for (Eigen::Index i = k + 1; i < n && j < 0; ++i)
                    if (m(k, i) != 0) j = i;
                if (j < 0) {
                    ++sig.zero;
                    continue;
                }
                // congruence: add row/col j into k to expose a nonzero diagonal
                m.row(k) += m.row(j);
                m.col(k) += m.col(j);
            }
        }
        const Rational d = m(k, k);
        if (d > 0)
            ++sig.positive;
        else
            ++sig.negative;
        for (Eigen::Index i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            const Rational f = m(i, k) / d;
            m.row(i) -= f * m.row(k);
            m.col(i) -= f * m.col(k);
        }
    }
    return sig;
}

Rational exact_determinant(const MatrixQ& m) {
    if (m.rows() != m.cols()) throw domain_error("determinant of a non-square matrix");
    const Eigen::Index n = m.rows();
    MatrixQ a = m;
    Rational det = 1;
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = c; i < n; ++i)
            if (a(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            a.row(piv).swap(a.row(c));
            det = -det;
        }
        det *= a(c, c);
        for (Eigen::Index i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            const Rational f = a(i, c) / a(c, c);
            a.row(i) -= f * a.row(c);
        }
    }
    return det;
}

} // namespace siegel5

#include "siegel5/jacobian.hpp"

#include "siegel5/polyring.hpp"

#include <algorithm>

namespace siegel5 {

FourierSeries jacobian(const std::array<const FourierSeries*, 4>& psi,
                       const std::array<int, 4>& k) {
    for (int i = 0; i < 4; ++i)
        if (psi[i]->weight() != k[i])
            throw weight_mismatch_error("jacobian: psi_" + std::to_string(i + 1) +
                                        " has weight " + std::to_string(psi[i]->weight()) +
                                        ", expected " + std::to_string(k[i]));

    // Rows: (k_i psi_i), D_tau psi_i, D_z psi_i, D_w psi_i.
    std::array<std::array<FourierSeries, 4>, 4> m{{
        {series_scale(*psi[0], k[0]), series_scale(*psi[1], k[1]), series_scale(*psi[2], k[2]),
         series_scale(*psi[3], k[3])},
        {derive(*psi[0], 't'), derive(*psi[1], 't'), derive(*psi[2], 't'), derive(*psi[3], 't')},
        {derive(*psi[0], 'z'), derive(*psi[1], 'z'), derive(*psi[2], 'z'), derive(*psi[3], 'z')},
        {derive(*psi[0], 'w'), derive(*psi[1], 'w'), derive(*psi[2], 'w'), derive(*psi[3], 'w')},
    }};

    // Cofactor expansion along the first row; the 3x3 minors by Sarrus.
    auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
               m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
               m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
    };
    const FourierSeries det = m[0][0] * det3(1, 2, 3, 1, 2, 3) - m[0][1] * det3(1, 2, 3, 0, 2, 3) +
                              m[0][2] * det3(1, 2, 3, 0, 1, 3) - m[0][3] * det3(1, 2, 3, 0, 1, 2);

    // The stored weight of the determinant is the plain sum k1+..+k4 (the
    // derivative rows keep their input labels); the modular weight of the
    // Jacobian is three higher.  Relabel.
    FourierSeries result(k[0] + k[1] + k[2] + k[3] + 3, det.trunc());
    for (const auto& [key, v] : det.coeffs()) result.set(key.a, key.b, key.c, v);
    return result;
}

FourierSeries jacobian(const FourierSeries& p1, const FourierSeries& p2, const FourierSeries& p3,
                       const FourierSeries& p4) {
    return jacobian({&p1, &p2, &p3, &p4},
                    {p1.weight(), p2.weight(), p3.weight(), p4.weight()});
}

void attach_jacobian(GeneratorSet& gens) {
    gens.J = jacobian(gens.f1, gens.f2, gens.g1, gens.g2);
}

JacobianSquareResult jacobian_square_check(const FourierSeries& J, const GradedPoly& P,
                                           const GeneratorSet& gens) {
    const FourierSeries J2 = J * J;
    const FourierSeries PV = poly_eval(P, gens);
    const int upto = std::min(J2.trunc(), PV.trunc());

    JacobianSquareResult res;
    res.compared_order = upto;

    auto clip = [upto](const FourierSeries& s) {
        FourierSeries::CoeffMap out;
        for (const auto& [k, v] : s.coeffs())
            if (k.order() <= upto) out.emplace(k, v);
        return out;
    };
    const auto lhs = clip(J2), rhs = clip(PV);
    auto triple = [](const ExpIndex& k) {
        return "(" + std::to_string(k.a) + "," + std::to_string(k.b) + "," + std::to_string(k.c) +
               ")";
    };

    if (lhs.empty() && rhs.empty()) {
        res.identity_holds = true; // both sides vanish identically in the valid region
        return res;
    }
    if (rhs.empty()) {
        res.witness = "eval(P) vanishes through order " + std::to_string(upto) + " but J^2 does not";
        return res;
    }
    const auto& [k0, p0] = *rhs.begin();
    auto it0 = lhs.find(k0);
    const Rational lambda = (it0 == lhs.end() ? Rational(0) : it0->second) / p0;
    res.lambda = lambda;

    for (const auto& [k, v] : rhs) {
        auto jt = lhs.find(k);
        const Rational lv = jt == lhs.end() ? Rational(0) : jt->second;
        if (lv != lambda * v) {
            res.witness = triple(k);
            return res;
        }
    }
    for (const auto& [k, v] : lhs)
        if (!rhs.contains(k)) {
            res.witness = triple(k);
            return res;
        }
    res.identity_holds = true;
    return res;
}

} // namespace siegel5

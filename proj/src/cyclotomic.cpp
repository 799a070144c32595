#include "siegel5/cyclotomic.hpp"

#include <sstream>

namespace siegel5 {

namespace {

// Coordinates of zeta^m for m = 0..39, built once from the reduction
// zeta^16 = zeta^12 - zeta^8 + zeta^4 - 1 (zeta^40 = 1 closes the table).
const std::array<std::array<Rational, Cyclo::kDegree>, Cyclo::kConductor>& power_table() {
    static const auto table = [] {
        std::array<std::array<Rational, Cyclo::kDegree>, Cyclo::kConductor> t{};
        for (int m = 0; m < Cyclo::kDegree; ++m) t[m][m] = 1;
        for (int m = Cyclo::kDegree; m < Cyclo::kConductor; ++m) {
            // zeta^m = zeta^{m-16} * (zeta^12 - zeta^8 + zeta^4 - 1)
            static constexpr std::array<std::pair<int, int>, 4> rule{
                {{12, 1}, {8, -1}, {4, 1}, {0, -1}}};
            for (auto [off, sign] : rule) {
                const int src = m - Cyclo::kDegree + off;
                for (int i = 0; i < Cyclo::kDegree; ++i) t[m][i] += sign * t[src][i];
            }
        }
        return t;
    }();
    return table;
}

} // namespace

Cyclo Cyclo::root_of_unity_pow(int m) {
    m %= kConductor;
    if (m < 0) m += kConductor;
    Cyclo r;
    r.c_ = power_table()[m];
    return r;
}

Cyclo Cyclo::unit_e(const Rational& x) {
    const Rational r = mod1(x);
    const Integer den = denominator(r);
    if (Integer(kConductor) % den != 0)
        throw domain_error("root of unity e(" + r.str() + ") is outside the conductor-40 field");
    const Integer m = numerator(r) * (Integer(kConductor) / den);
    return root_of_unity_pow(m.convert_to<int>());
}

Cyclo Cyclo::sqrt2() {
    // zeta_8 + zeta_8^{-1} = zeta^5 - zeta^15 (zeta^35 = -zeta^15).
    return root_of_unity_pow(5) - root_of_unity_pow(15);
}

Cyclo Cyclo::sqrt5() {
    // Gauss sum: 1 + 2(zeta_5 + zeta_5^4) = 1 + 2 zeta^8 - 2 zeta^12.
    Cyclo r(1);
    r += Rational(2) * root_of_unity_pow(8);
    r += Rational(2) * root_of_unity_pow(32);
    return r;
}

bool Cyclo::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (int i = 1; i < kDegree; ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclo::rational_value() const {
    if (!is_rational()) throw domain_error("cyclotomic number is not rational: " + str());
    return c_[0];
}

Cyclo Cyclo::conj() const {
    Cyclo r;
    const auto& table = power_table();
    for (int i = 0; i < kDegree; ++i) {
        if (c_[i] == 0) continue;
        const int m = (kConductor - i) % kConductor;
        for (int j = 0; j < kDegree; ++j) r.c_[j] += c_[i] * table[m][j];
    }
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    for (int i = 0; i < kDegree; ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    for (int i = 0; i < kDegree; ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclo operator*(const Cyclo& x, const Cyclo& y) {
    const auto& table = power_table();
    Cyclo r;
    for (int i = 0; i < Cyclo::kDegree; ++i) {
        if (x.c_[i] == 0) continue;
        for (int j = 0; j < Cyclo::kDegree; ++j) {
            if (y.c_[j] == 0) continue;
            const Rational p = x.c_[i] * y.c_[j];
            const int m = i + j;
            if (m < Cyclo::kDegree)
                r.c_[m] += p;
            else
                for (int t = 0; t < Cyclo::kDegree; ++t) r.c_[t] += p * table[m][t];
        }
    }
    return r;
}

Cyclo operator-(const Cyclo& x) {
    Cyclo r;
    for (int i = 0; i < Cyclo::kDegree; ++i) r.c_[i] = -x.c_[i];
    return r;
}

Cyclo operator*(const Rational& s, const Cyclo& x) {
    Cyclo r;
    if (s == 0) return r;
    for (int i = 0; i < Cyclo::kDegree; ++i) r.c_[i] = s * x.c_[i];
    return r;
}

std::string Cyclo::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < kDegree; ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i].str();
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace siegel5

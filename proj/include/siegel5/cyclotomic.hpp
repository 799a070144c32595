#pragma once

#include "siegel5/rational.hpp"

#include <array>
#include <string>

namespace siegel5 {

/// Exact element of the cyclotomic field of conductor 40 (degree 16),
/// coordinates in the power basis 1, z, ..., z^15 of z = e^{2 pi i / 40},
/// reduced modulo the cyclotomic polynomial z^16 - z^12 + z^8 - z^4 + 1.
/// The smallest field containing zeta_8, zeta_20, sqrt(2) and sqrt(5), so
/// every Weil-representation entry is exact here.
class Cyclo {
public:
    static constexpr int kDegree = 16;
    static constexpr int kConductor = 40;

    Cyclo() = default;
    Cyclo(int v) { c_[0] = v; }                 // NOLINT(google-explicit-constructor)
    Cyclo(const Rational& v) { c_[0] = v; }     // NOLINT(google-explicit-constructor)

    /// zeta_40^m for any integer m.
    static Cyclo root_of_unity_pow(int m);

    /// e^{2 pi i x} for rational x with denominator dividing 40.
    static Cyclo unit_e(const Rational& x);

    static Cyclo sqrt2();
    static Cyclo sqrt5();

    const std::array<Rational, kDegree>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// The rational value; throws unless is_rational().
    Rational rational_value() const;

    /// Complex conjugation (inverts every root of unity).
    Cyclo conj() const;

    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);

    friend Cyclo operator+(Cyclo x, const Cyclo& y) { return x += y; }
    friend Cyclo operator-(Cyclo x, const Cyclo& y) { return x -= y; }
    friend Cyclo operator*(const Cyclo& x, const Cyclo& y);
    friend Cyclo operator-(const Cyclo& x);
    friend Cyclo operator*(const Rational& s, const Cyclo& x);
    friend bool operator==(const Cyclo& x, const Cyclo& y) { return x.c_ == y.c_; }
    friend bool operator!=(const Cyclo& x, const Cyclo& y) { return !(x == y); }

    std::string str() const;

private:
    std::array<Rational, kDegree> c_{}; // value-initialized to zeros
};

} // namespace siegel5

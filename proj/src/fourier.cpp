#include "siegel5/fourier.hpp"

#include <algorithm>
#include <string>

namespace siegel5 {

namespace {
const Rational kZero{0};

bool in_cone(int a, int b, int c) { return static_cast<long>(b) * b <= 4L * a * c; }
} // namespace

const Rational& FourierSeries::coefficient(int a, int b, int c) const {
    if (a + c > trunc_)
        throw precision_error("coefficient (" + std::to_string(a) + "," + std::to_string(b) + "," +
                              std::to_string(c) + ") is beyond truncation order " +
                              std::to_string(trunc_));
    auto it = coeffs_.find(ExpIndex{a, b, c});
    return it == coeffs_.end() ? kZero : it->second;
}

void FourierSeries::set(int a, int b, int c, Rational v) {
    if (a < 0 || c < 0)
        throw data_error("exponents a, c must be nonnegative");
    if (a + c > trunc_)
        throw precision_error("coefficient (" + std::to_string(a) + "," + std::to_string(b) + "," +
                              std::to_string(c) + ") exceeds truncation " + std::to_string(trunc_));
    if (!in_cone(a, b, c))
        throw support_cone_error("coefficient (" + std::to_string(a) + "," + std::to_string(b) +
                                 "," + std::to_string(c) + ") violates b^2 <= 4ac");
    if (v == 0)
        coeffs_.erase(ExpIndex{a, b, c});
    else
        coeffs_[ExpIndex{a, b, c}] = std::move(v);
}

FourierSeries FourierSeries::one(int trunc) {
    FourierSeries r(0, trunc);
    r.set(0, 0, 0, 1);
    return r;
}

FourierSeries series_add(const FourierSeries& x, const FourierSeries& y) {
    if (x.weight_ != y.weight_)
        throw weight_mismatch_error("series_add: weights " + std::to_string(x.weight_) + " and " +
                                    std::to_string(y.weight_) + " differ");
    FourierSeries r(x.weight_, std::min(x.trunc_, y.trunc_));
    for (const auto& [k, v] : x.coeffs_)
        if (k.order() <= r.trunc_) r.coeffs_[k] = v;
    for (const auto& [k, v] : y.coeffs_) {
        if (k.order() > r.trunc_) continue;
        auto [it, inserted] = r.coeffs_.try_emplace(k, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) r.coeffs_.erase(it);
        }
    }
    return r;
}

FourierSeries series_mul(const FourierSeries& x, const FourierSeries& y) {
    const int vx = x.vanishing_order(), vy = y.vanishing_order();
    const int trunc = std::min(x.trunc_ + vy, y.trunc_ + vx);
    FourierSeries r(x.weight_ + y.weight_, std::max(trunc, 0));
    for (const auto& [kx, cx] : x.coeffs_) {
        for (const auto& [ky, cy] : y.coeffs_) {
            const int a = kx.a + ky.a, b = kx.b + ky.b, c = kx.c + ky.c;
            if (a + c > trunc) continue;
            auto [it, inserted] = r.coeffs_.try_emplace(ExpIndex{a, b, c}, cx * cy);
            if (!inserted) {
                it->second += cx * cy;
                if (it->second == 0) r.coeffs_.erase(it);
            }
        }
    }
    // Cone preservation: |b1+b2| <= 2(sqrt(a1 c1) + sqrt(a2 c2)) <= 2 sqrt((a1+a2)(c1+c2)).
    for (const auto& [k, v] : r.coeffs_)
        if (!in_cone(k.a, k.b, k.c))
            throw support_cone_error("product escaped the support cone at (" +
                                     std::to_string(k.a) + "," + std::to_string(k.b) + "," +
                                     std::to_string(k.c) + ")");
    return r;
}

FourierSeries series_scale(const FourierSeries& x, const Rational& c) {
    FourierSeries r(x.weight_, x.trunc_);
    if (c == 0) return r;
    for (const auto& [k, v] : x.coeffs_) r.coeffs_[k] = v * c;
    return r;
}

FourierSeries operator+(const FourierSeries& x, const FourierSeries& y) { return series_add(x, y); }
FourierSeries operator-(const FourierSeries& x, const FourierSeries& y) {
    return series_add(x, series_scale(y, -1));
}
FourierSeries operator*(const FourierSeries& x, const FourierSeries& y) { return series_mul(x, y); }
FourierSeries operator*(const Rational& c, const FourierSeries& x) { return series_scale(x, c); }
FourierSeries operator-(const FourierSeries& x) { return series_scale(x, -1); }

FourierSeries derive(const FourierSeries& x, char var) {
    FourierSeries r(x.weight_, x.trunc_);
    for (const auto& [k, v] : x.coeffs_) {
        int m = 0;
        switch (var) {
            case 't': m = k.a; break;
            case 'z': m = k.b; break;
            case 'w': m = k.c; break;
            default: throw domain_error("derive: variable must be one of tau, z, w");
        }
        if (m != 0) r.coeffs_[k] = v * m;
    }
    return r;
}

FourierSeries swap_qs(const FourierSeries& x) {
    FourierSeries r(x.weight_, x.trunc_);
    for (const auto& [k, v] : x.coeffs_) r.coeffs_[ExpIndex{k.c, k.b, k.a}] = v;
    return r;
}

FourierSeries truncate_to(const FourierSeries& x, int trunc) {
    if (trunc > x.trunc_)
        throw precision_error("cannot extend truncation from " + std::to_string(x.trunc_) +
                              " to " + std::to_string(trunc));
    FourierSeries r(x.weight_, trunc);
    for (const auto& [k, v] : x.coeffs_)
        if (k.order() <= trunc) r.coeffs_[k] = v;
    return r;
}

FourierSeries series_pow(const FourierSeries& x, int n) {
    if (n < 0) throw domain_error("series_pow: negative exponent");
    FourierSeries r = FourierSeries::one(x.trunc());
    for (int i = 0; i < n; ++i) r = series_mul(r, x);
    return r;
}

bool same_coefficients(const FourierSeries& x, const FourierSeries& y, int upto) {
    if (x.trunc() < upto || y.trunc() < upto)
        throw precision_error("same_coefficients: series not valid through order " +
                              std::to_string(upto));
    auto within = [upto](const FourierSeries& s) {
        std::vector<std::pair<ExpIndex, Rational>> out;
        for (const auto& [k, v] : s.coeffs())
            if (k.order() <= upto) out.emplace_back(k, v);
        return out;
    };
    return within(x) == within(y);
}

} // namespace siegel5

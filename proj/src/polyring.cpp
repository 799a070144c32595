#include "siegel5/polyring.hpp"

#include "siegel5/dataio.hpp"

#include <algorithm>
#include <map>

namespace siegel5 {

GradedPoly GradedPoly::variable(int index) {
    Monomial m;
    m.e.at(index) = 1;
    return term(m, 1);
}

GradedPoly GradedPoly::constant(const Rational& c) { return term(Monomial{}, c); }

GradedPoly GradedPoly::term(const Monomial& m, const Rational& c) {
    GradedPoly p;
    p.add_term(m, c);
    return p;
}

void GradedPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    for (int e : m.e)
        if (e < 0) throw domain_error("monomial exponents must be nonnegative");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool GradedPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int w = terms_.begin()->first.weight();
    return std::all_of(terms_.begin(), terms_.end(),
                       [w](const auto& t) { return t.first.weight() == w; });
}

int GradedPoly::weight() const {
    if (terms_.empty()) throw domain_error("the zero polynomial has no weight");
    if (!is_homogeneous()) throw domain_error("polynomial is not homogeneous");
    return terms_.begin()->first.weight();
}

GradedPoly operator+(const GradedPoly& p, const GradedPoly& q) {
    GradedPoly r = p;
    for (const auto& [m, c] : q.terms()) r.add_term(m, c);
    return r;
}

GradedPoly operator-(const GradedPoly& p, const GradedPoly& q) {
    GradedPoly r = p;
    for (const auto& [m, c] : q.terms()) r.add_term(m, -c);
    return r;
}

GradedPoly operator*(const GradedPoly& p, const GradedPoly& q) {
    GradedPoly r;
    for (const auto& [mp, cp] : p.terms())
        for (const auto& [mq, cq] : q.terms()) {
            Monomial m;
            for (int i = 0; i < 5; ++i) m.e[i] = mp.e[i] + mq.e[i];
            r.add_term(m, cp * cq);
        }
    return r;
}

GradedPoly operator*(const Rational& c, const GradedPoly& p) {
    GradedPoly r;
    for (const auto& [m, v] : p.terms()) r.add_term(m, c * v);
    return r;
}

GradedPoly operator-(const GradedPoly& p) { return Rational(-1) * p; }

GradedPoly poly_pow(const GradedPoly& p, int n) {
    if (n < 0) throw domain_error("poly_pow: negative exponent");
    GradedPoly r = GradedPoly::constant(1);
    for (int i = 0; i < n; ++i) r = r * p;
    return r;
}

GradedPoly apply_eps2(const GradedPoly& p) {
    GradedPoly r;
    for (const auto& [m, c] : p.terms()) {
        // F1^e1 F2^e2 G1^e3 G2^e4 XJ^eJ -> (-1)^(e2+eJ) F1^e2 F2^e1 G1^e4 G2^e3 XJ^eJ
        Monomial im;
        im.e = {m.e[1], m.e[0], m.e[3], m.e[2], m.e[4]};
        const int sign = ((m.e[1] + m.e[4]) % 2 == 0) ? 1 : -1;
        r.add_term(im, sign * c);
    }
    return r;
}

GradedPoly reynolds(const GradedPoly& p) {
    GradedPoly acc;
    GradedPoly cur = p;
    for (int i = 0; i < 4; ++i) {
        acc = acc + cur;
        cur = apply_eps2(cur);
    }
    return Rational(1, 4) * acc;
}

DivisionResult poly_divide(const GradedPoly& p, const GradedPoly& d) {
    if (d.is_zero()) throw domain_error("poly_divide: division by the zero polynomial");
    const auto lead = std::prev(d.terms().end()); // largest monomial in term order
    GradedPoly rem = p, quo;
    while (!rem.is_zero()) {
        const auto rl = std::prev(rem.terms().end());
        Monomial q;
        bool divisible = true;
        for (int i = 0; i < 5; ++i) {
            q.e[i] = rl->first.e[i] - lead->first.e[i];
            if (q.e[i] < 0) divisible = false;
        }
        if (!divisible) return {GradedPoly{}, false};
        const Rational coef = rl->second / lead->second;
        const GradedPoly qt = GradedPoly::term(q, coef);
        quo = quo + qt;
        rem = rem - qt * d;
    }
    return {quo, true};
}

FourierSeries poly_eval(const GradedPoly& p, const GeneratorSet& gens) {
    if (!p.is_homogeneous()) throw domain_error("poly_eval requires a homogeneous polynomial");
    const int trunc = gens.f1.trunc();
    if (p.is_zero()) return FourierSeries::zero(0, trunc);

    const std::array<const FourierSeries*, 4> base{&gens.f1, &gens.f2, &gens.g1, &gens.g2};
    // Power cache; exponents stay small (weight <= ~20).
    std::map<std::pair<int, int>, FourierSeries> powers;
    auto power = [&](int var, int n) -> const FourierSeries& {
        auto key = std::make_pair(var, n);
        auto it = powers.find(key);
        if (it == powers.end()) {
            const FourierSeries& b = var < 4 ? *base[var] : gens.jacobian_form();
            it = powers.emplace(key, series_pow(b, n)).first;
        }
        return it->second;
    };

    std::optional<FourierSeries> acc;
    for (const auto& [m, c] : p.terms()) {
        FourierSeries t = FourierSeries::one(trunc);
        for (int i = 0; i < 5; ++i)
            if (m.e[i] > 0) t = t * power(i, m.e[i]);
        t = series_scale(t, c);
        acc = acc ? *acc + t : t;
    }
    if (acc->weight() != p.weight() && !acc->is_zero())
        throw error("poly_eval: weight bookkeeping mismatch");
    return *acc;
}

GradedPoly load_jsquare_poly(const std::filesystem::path& file) {
    GradedPoly p;
    for (const auto& r : read_int_table(file, 5)) {
        Monomial m;
        m.e = {static_cast<int>(r[1]), static_cast<int>(r[2]), static_cast<int>(r[3]),
               static_cast<int>(r[4]), 0};
        p.add_term(m, r[0]);
    }
    if (p.is_zero()) throw data_error("polynomial table " + file.string() + " is empty");
    if (!p.is_homogeneous() || p.weight() != 18)
        throw data_error("embedded J^2 polynomial is not homogeneous of weight 18");
    return p;
}

std::string jsquare_table_checksum(const std::filesystem::path& file) {
    return checksum_hex(fnv1a64(read_file(file)));
}

std::vector<GradedPoly> holomorphic_generators() {
    const GradedPoly F1 = GradedPoly::variable(0), F2 = GradedPoly::variable(1);
    const GradedPoly G1 = GradedPoly::variable(2), G2 = GradedPoly::variable(3);
    const GradedPoly XJ = GradedPoly::variable(4);
    const GradedPoly F1s = F1 * F1, F2s = F2 * F2, FF = F1 * F2;
    const GradedPoly Ssum = F1s + F2s, Sdif = F1s - F2s, Gdif = G1 - G2;

    std::vector<GradedPoly> gens;
    gens.push_back(Ssum - Rational(4) * (G1 + G2));                    // e2, weight 2
    gens.push_back(F1s * G1 + F2s * G2);                               // weight 4
    gens.push_back(FF * Gdif);                                         // weight 4
    gens.push_back(FF * Sdif);                                         // weight 4
    gens.push_back(F1s * F2s);                                         // weight 4
    gens.push_back(G1 * G2);                                           // weight 4
    gens.push_back(F1s * F2s * (G1 + G2));                             // weight 6
    gens.push_back(F1s * F1 * F2 * G1 - F2s * F2 * F1 * G2);           // weight 6
    gens.push_back(F1s * G1 * G1 + F2s * G2 * G2);                     // weight 6
    gens.push_back(G1 * G2 * Ssum);                                    // weight 6
    gens.push_back(F1s * F2s * Ssum * Ssum * Ssum);                    // weight 10
    gens.push_back(FF * XJ);                                           // weight 11
    gens.push_back(Sdif * XJ);                                         // weight 11
    gens.push_back(Gdif * XJ);                                         // weight 11
    gens.push_back(Ssum * FF * XJ);                                    // weight 13
    gens.push_back((F1s * F1s - F2s * F2s) * XJ);                      // weight 13
    gens.push_back(Ssum * Gdif * XJ);                                  // weight 13
    gens.push_back(Sdif * Sdif * Sdif * XJ);                           // weight 15
    return gens;
}

} // namespace siegel5

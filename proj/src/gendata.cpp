#include "siegel5/gendata.hpp"

#include "siegel5/dataio.hpp"

#include <map>
#include <string>
#include <tuple>

namespace siegel5 {

namespace {

std::string triple_str(int a, int b, int c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

} // namespace

GeneratorSet load_generators(const std::vector<GeneratorRow>& rows) {
    std::map<std::tuple<int, int, int>, std::array<long, 4>> table;
    for (const auto& r : rows) {
        if (r.a < 0 || r.c < 0 || r.a + r.c > kTableTrunc)
            throw precision_error("table row " + triple_str(r.a, r.b, r.c) +
                                  " outside a + c <= " + std::to_string(kTableTrunc));
        if (static_cast<long>(r.b) * r.b > 4L * r.a * r.c)
            throw support_cone_error("table row " + triple_str(r.a, r.b, r.c) +
                                     " violates b^2 <= 4ac");
        std::array<long, 4> vals{r.f1, r.f2, r.g1, r.g2};
        auto [it, inserted] = table.try_emplace({r.a, r.b, r.c}, vals);
        if (!inserted && it->second != vals)
            throw data_error("conflicting duplicate rows at " + triple_str(r.a, r.b, r.c));
    }
    // b-symmetry: mirror single-sign rows, reject inconsistent pairs.
    for (const auto& [key, vals] : std::map(table)) {
        auto [a, b, c] = key;
        auto mirror = std::make_tuple(a, -b, c);
        auto [it, inserted] = table.try_emplace(mirror, vals);
        if (!inserted && it->second != vals)
            throw data_error("rows at " + triple_str(a, b, c) + " and " + triple_str(a, -b, c) +
                             " disagree");
    }

    FourierSeries f1(1, kTableTrunc), f2(1, kTableTrunc);
    FourierSeries g1(2, kTableTrunc), g2(2, kTableTrunc);
    for (const auto& [key, vals] : table) {
        auto [a, b, c] = key;
        f1.set(a, b, c, vals[0]);
        f2.set(a, b, c, vals[1]);
        g1.set(a, b, c, vals[2]);
        g2.set(a, b, c, vals[3]);
    }
    GeneratorSet gens{f1, f2, g1, g2, f1, f1, f1, f1, f1, f1, f1, std::nullopt};
    derived_forms(gens);
    return gens;
}

GeneratorSet load_generators(const std::filesystem::path& file) {
    std::vector<GeneratorRow> rows;
    for (const auto& r : read_int_table(file, 7))
        rows.push_back(GeneratorRow{static_cast<int>(r[0]), static_cast<int>(r[1]),
                                    static_cast<int>(r[2]), r[3], r[4], r[5], r[6]});
    if (rows.empty()) throw data_error("generator table " + file.string() + " is empty");
    return load_generators(rows);
}

std::string generator_table_checksum(const std::filesystem::path& file) {
    return checksum_hex(fnv1a64(read_file(file)));
}

void derived_forms(GeneratorSet& g) {
    const FourierSeries ff = g.f1 * g.f2;
    const FourierSeries f1s = g.f1 * g.f1, f2s = g.f2 * g.f2;
    g.h1 = g.g1 - ff;
    g.h2 = g.g2 + ff;
    g.e2 = f1s + f2s - Rational(4) * (g.g1 + g.g2);
    g.phi1 = g.e2 * g.e2 + f1s * f2s;
    g.phi2 = f1s * g.g1 + f2s * g.g2 - Rational(2) * (g.g1 * g.g2);
    g.phi3 = ff * (f1s - Rational(2) * ff - f2s + Rational(2) * (g.g1 - g.g2));
    g.phi4 = Rational(2) * (g.g1 * g.g2) + ff * (g.g1 - g.g2);
}

} // namespace siegel5

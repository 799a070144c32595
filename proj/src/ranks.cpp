#include "siegel5/ranks.hpp"

#include <algorithm>
#include <climits>
#include <map>

namespace siegel5 {

std::vector<std::vector<int>> monomials_of_weight(const std::vector<int>& generator_weights,
                                                  int k) {
    if (k < 0) throw domain_error("monomials_of_weight: negative weight");
    std::vector<std::vector<int>> out;
    std::vector<int> exp(generator_weights.size(), 0);
    auto rec = [&](auto&& self, size_t i, int left) -> void {
        if (left == 0) {
            out.push_back(exp);
            return;
        }
        if (i >= generator_weights.size()) return;
        self(self, i + 1, left);
        if (generator_weights[i] <= left) {
            ++exp[i];
            self(self, i, left - generator_weights[i]);
            --exp[i];
        }
    };
    rec(rec, 0, k);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<ExpIndex> column_keys(const std::vector<FourierSeries>& forms, int lo, int hi) {
    std::vector<ExpIndex> keys;
    for (const auto& f : forms)
        for (const auto& [k, v] : f.coeffs())
            if (k.order() > lo && k.order() <= hi) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

MatrixQ coefficient_matrix(const std::vector<FourierSeries>& forms,
                           const std::vector<ExpIndex>& keys) {
    MatrixQ m(static_cast<Eigen::Index>(forms.size()), static_cast<Eigen::Index>(keys.size()));
    for (size_t i = 0; i < forms.size(); ++i)
        for (size_t j = 0; j < keys.size(); ++j) {
            auto it = forms[i].coeffs().find(keys[j]);
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                it == forms[i].coeffs().end() ? Rational(0) : it->second;
        }
    return m;
}

} // namespace

int span_rank(const std::vector<FourierSeries>& forms) {
    if (forms.empty()) return 0;
    int common = forms[0].trunc();
    for (const auto& f : forms) common = std::min(common, f.trunc());
    const auto keys = column_keys(forms, -1, common);
    return exact_rank(coefficient_matrix(forms, keys));
}

CertifiedRank certified_span_rank(const std::vector<FourierSeries>& forms) {
    CertifiedRank res;
    if (forms.empty()) return res;
    int common = forms[0].trunc();
    for (const auto& f : forms) common = std::min(common, f.trunc());
    res.common_order = common;

    const auto keys = column_keys(forms, -1, common);
    const MatrixQ m = coefficient_matrix(forms, keys);
    res.base_rank = exact_rank(m);
    const auto kernel = left_kernel(m);

    // A kernel vector whose supporting rows remain valid past the common
    // order, and whose combination has a nonzero coefficient there, is not
    // a relation among the forms.  Independent such refutations each raise
    // the true rank by one.
    std::vector<FourierSeries> extensions;
    int ext_order = common;
    for (const auto& u : kernel) {
        int valid = INT_MAX;
        for (Eigen::Index i = 0; i < u.size(); ++i)
            if (u(i) != 0) valid = std::min(valid, forms[static_cast<size_t>(i)].trunc());
        if (valid <= common) continue;
        std::map<ExpIndex, Rational> comb;
        for (Eigen::Index i = 0; i < u.size(); ++i) {
            if (u(i) == 0) continue;
            for (const auto& [k, v] : forms[static_cast<size_t>(i)].coeffs())
                if (k.order() > common && k.order() <= valid) comb[k] += u(i) * v;
        }
        FourierSeries ext(0, valid);
        bool nonzero = false;
        for (const auto& [k, v] : comb)
            if (v != 0) {
                ext.set(k.a, k.b, k.c, v);
                nonzero = true;
            }
        if (nonzero) {
            extensions.push_back(ext);
            ext_order = std::max(ext_order, valid);
        }
    }
    if (!extensions.empty()) {
        // Count independent refutations over the extension window.
        int window = extensions[0].trunc();
        for (const auto& e : extensions) window = std::min(window, e.trunc());
        const auto ekeys = column_keys(extensions, common, window);
        res.refutations = exact_rank(coefficient_matrix(extensions, ekeys));
        res.note = "rank certified with " + std::to_string(res.refutations) +
                   " higher-order refutation(s) through order " + std::to_string(window);
    }
    res.rank = res.base_rank + res.refutations;
    return res;
}

std::vector<FourierSeries> weight_monomial_forms(const GeneratorSet& gens, int k) {
    const auto polys = holomorphic_generators();
    std::vector<int> weights;
    weights.reserve(polys.size());
    for (const auto& p : polys) weights.push_back(p.weight());

    std::vector<FourierSeries> forms;
    for (const auto& exp : monomials_of_weight(weights, k)) {
        GradedPoly mono = GradedPoly::constant(1);
        for (size_t i = 0; i < exp.size(); ++i)
            if (exp[i] > 0) mono = mono * poly_pow(polys[i], exp[i]);
        forms.push_back(poly_eval(mono, gens));
    }
    return forms;
}

RankDiagnostics rank_diagnostics(const GeneratorSet& gens, int k) {
    RankDiagnostics diag;
    diag.weight = k;
    const auto forms = weight_monomial_forms(gens, k);
    diag.certified = certified_span_rank(forms).rank;
    for (int t = kTableTrunc; t >= 5; --t) {
        std::vector<FourierSeries> cut;
        cut.reserve(forms.size());
        for (const auto& f : forms) cut.push_back(truncate_to(f, t));
        diag.rank_by_trunc.emplace_back(t, span_rank(cut));
    }
    return diag;
}

} // namespace siegel5

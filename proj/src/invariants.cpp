#include "siegel5/invariants.hpp"

#include <algorithm>

namespace siegel5 {

namespace {

using Mat2 = Eigen::Matrix<Rational, 2, 2>;

ActionElement compose(const ActionElement& a, const ActionElement& b) {
    return ActionElement{a.f_block * b.f_block, a.g_block * b.g_block, a.xj_sign * b.xj_sign};
}

bool same_element(const ActionElement& a, const ActionElement& b) {
    return a.f_block == b.f_block && a.g_block == b.g_block && a.xj_sign == b.xj_sign;
}

void validate_group(const GroupAction& act) {
    const auto& els = act.elements;
    if (els.empty()) throw domain_error("group action has no elements");
    for (const auto& a : els)
        for (const auto& b : els) {
            const ActionElement c = compose(a, b);
            if (std::none_of(els.begin(), els.end(),
                             [&](const ActionElement& e) { return same_element(e, c); }))
                throw domain_error("group action is not closed under composition");
        }
}

/// chi(g) for the two real characters.
int char_value(const ActionElement& g, Character chi) {
    return chi == Character::trivial ? 1 : g.xj_sign;
}

/// Linear polynomial image of variable index v (0..3) under g.
GradedPoly variable_image(const ActionElement& g, int v) {
    GradedPoly img;
    if (v < 2) {
        for (int i = 0; i < 2; ++i)
            if (g.f_block(i, v) != 0)
                img = img + g.f_block(i, v) * GradedPoly::variable(i);
    } else {
        for (int i = 0; i < 2; ++i)
            if (g.g_block(i, v - 2) != 0)
                img = img + g.g_block(i, v - 2) * GradedPoly::variable(2 + i);
    }
    return img;
}

/// Series expansion of 1/den to order `upto`, den(0) = 1.
std::vector<Rational> invert_series(const std::vector<Rational>& den, int upto) {
    std::vector<Rational> c(upto + 1);
    c[0] = 1;
    for (int n = 1; n <= upto; ++n) {
        Rational s = 0;
        for (int j = 1; j <= n && j < static_cast<int>(den.size()); ++j) s += den[j] * c[n - j];
        c[n] = -s;
    }
    return c;
}

/// Incremental row reduction over graded-poly coordinates; deterministic
/// (leading term = largest monomial in the canonical order).
class RowReducer {
public:
    /// Returns true (and absorbs p) when p is independent of current rows.
    bool add(GradedPoly p) {
        reduce(p);
        if (p.is_zero()) return false;
        rows_.push_back(std::move(p));
        return true;
    }
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    void reduce(GradedPoly& p) const {
        bool changed = true;
        while (changed && !p.is_zero()) {
            changed = false;
            const Monomial lead = std::prev(p.terms().end())->first;
            for (const auto& r : rows_) {
                const auto& rl = *std::prev(r.terms().end());
                if (rl.first == lead) {
                    p = p - (std::prev(p.terms().end())->second / rl.second) * r;
                    changed = true;
                    break;
                }
            }
        }
    }
    std::vector<GradedPoly> rows_;
};

} // namespace

GroupAction GroupAction::eps2() {
    Mat2 f, g, id;
    f << 0, -1, 1, 0; // F1 -> F2, F2 -> -F1 (columns are images)
    g << 0, 1, 1, 0;  // G1 <-> G2
    id << 1, 0, 0, 1;
    ActionElement e{id, id, 1};
    ActionElement s{f, g, -1};
    GroupAction act{{e, s, compose(s, s), compose(s, compose(s, s))}};
    validate_group(act);
    return act;
}

GroupAction GroupAction::eps4() {
    const GroupAction e2 = eps2();
    GroupAction act{{e2.elements[0], e2.elements[2]}};
    validate_group(act);
    return act;
}

GroupAction GroupAction::trivial() {
    Mat2 id;
    id << 1, 0, 0, 1;
    return GroupAction{{ActionElement{id, id, 1}}};
}

GradedPoly apply_action(const ActionElement& g, const GradedPoly& p) {
    GradedPoly out;
    for (const auto& [m, c] : p.terms()) {
        GradedPoly t = GradedPoly::constant(c);
        for (int v = 0; v < 4; ++v)
            if (m.e[v] > 0) t = t * poly_pow(variable_image(g, v), m.e[v]);
        if (m.e[4] > 0) {
            Monomial xj;
            xj.e[4] = m.e[4];
            const int sign = (m.e[4] % 2 == 0) ? 1 : g.xj_sign;
            t = t * GradedPoly::term(xj, sign);
        }
        out = out + t;
    }
    return out;
}

std::vector<bool> check_invariance(const std::vector<GradedPoly>& polys,
                                   const GroupAction& action) {
    std::vector<bool> verdicts;
    verdicts.reserve(polys.size());
    for (const auto& p : polys) {
        bool fixed = true;
        for (const auto& g : action.elements)
            if (apply_action(g, p) != p) {
                fixed = false;
                break;
            }
        verdicts.push_back(fixed);
    }
    return verdicts;
}

std::vector<Integer> molien_series(const GroupAction& action, Character chi, int upto) {
    validate_group(action);
    const int n = static_cast<int>(action.elements.size());
    std::vector<Rational> acc(upto + 1, Rational(0));
    for (const auto& g : action.elements) {
        // det(I - t B) = 1 - tr(B) t + det(B) t^2 ; det(I - t^2 C) likewise in t^2.
        const Rational trB = g.f_block(0, 0) + g.f_block(1, 1);
        const Rational detB = g.f_block(0, 0) * g.f_block(1, 1) - g.f_block(0, 1) * g.f_block(1, 0);
        const Rational trC = g.g_block(0, 0) + g.g_block(1, 1);
        const Rational detC = g.g_block(0, 0) * g.g_block(1, 1) - g.g_block(0, 1) * g.g_block(1, 0);
        std::vector<Rational> den{1, -trB, detB};
        std::vector<Rational> den2{1, 0, -trC, 0, detC};
        // multiply den * den2
        std::vector<Rational> d(den.size() + den2.size() - 1, Rational(0));
        for (size_t i = 0; i < den.size(); ++i)
            for (size_t j = 0; j < den2.size(); ++j) d[i + j] += den[i] * den2[j];
        const auto series = invert_series(d, upto);
        const int cv = char_value(g, chi);
        for (int k = 0; k <= upto; ++k) acc[k] += cv * series[k];
    }
    std::vector<Integer> out(upto + 1);
    for (int k = 0; k <= upto; ++k) {
        const Rational v = acc[k] / n;
        if (!is_integer(v)) throw error("Molien average is not an integer");
        out[k] = numerator(v);
    }
    return out;
}

std::vector<Monomial> weight_monomials(int weight) {
    std::vector<Monomial> out;
    for (int e3 = 0; 2 * e3 <= weight; ++e3)
        for (int e4 = 0; 2 * (e3 + e4) <= weight; ++e4) {
            const int rem = weight - 2 * e3 - 2 * e4;
            for (int e1 = 0; e1 <= rem; ++e1) {
                Monomial m;
                m.e = {e1, rem - e1, e3, e4, 0};
                out.push_back(m);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Integer> molien_series_by_rank(const GroupAction& action, Character chi, int upto) {
    validate_group(action);
    const int n = static_cast<int>(action.elements.size());
    std::vector<Integer> dims(upto + 1);
    for (int w = 0; w <= upto; ++w) {
        RowReducer rows;
        for (const Monomial& m : weight_monomials(w)) {
            GradedPoly proj;
            for (const auto& g : action.elements)
                proj = proj + Rational(char_value(g, chi), n) * apply_action(g, GradedPoly::term(m, 1));
            if (!proj.is_zero()) rows.add(std::move(proj));
        }
        dims[w] = rows.rank();
    }
    return dims;
}

std::vector<Integer> isotypic_dims_cyclic4(const GroupAction& action, int weight) {
    if (action.elements.size() != 4)
        throw domain_error("isotypic_dims_cyclic4 requires a cyclic group of order 4");
    // Traces of g^j on the weight-w monomial basis.
    std::array<Integer, 4> tr{0, 0, 0, 0};
    const auto monos = weight_monomials(weight);
    for (int j = 0; j < 4; ++j) {
        Rational t = 0;
        for (const Monomial& m : monos) {
            const GradedPoly img = apply_action(action.elements[j], GradedPoly::term(m, 1));
            auto it = img.terms().find(m);
            if (it != img.terms().end()) t += it->second;
        }
        if (!is_integer(t)) throw error("non-integral trace");
        tr[j] = numerator(t);
    }
    // Character values at the generator: 1, i, -1, -i.
    if (tr[1] != tr[3]) throw error("cyclic-4 traces violate conjugation symmetry");
    const Integer m0 = tr[0] + tr[1] + tr[2] + tr[3];
    const Integer m2 = tr[0] - tr[1] + tr[2] - tr[3];
    const Integer m1 = tr[0] - tr[2];
    if (m0 % 4 != 0 || m2 % 4 != 0 || m1 % 4 != 0) throw error("isotypic dimensions not integral");
    return {m0 / 4, m1 / 4, m2 / 4, m1 / 4};
}

std::vector<int> minimal_generator_degrees(const GroupAction& action, int upto) {
    validate_group(action);
    if (upto >= 18)
        throw domain_error("minimal_generator_degrees caps at weight 17: beyond that the "
                           "relation XJ^2 = lambda P would be needed");
    const int n = static_cast<int>(action.elements.size());

    auto invariant_basis = [&](int w) {
        std::vector<GradedPoly> basis;
        RowReducer rows;
        std::vector<Monomial> monos = weight_monomials(w);
        if (w >= 9)
            for (Monomial m : weight_monomials(w - 9)) {
                m.e[4] = 1;
                monos.push_back(m);
            }
        std::sort(monos.begin(), monos.end());
        for (const Monomial& m : monos) {
            GradedPoly proj;
            for (const auto& g : action.elements)
                proj = proj + Rational(1, n) * apply_action(g, GradedPoly::term(m, 1));
            if (proj.is_zero()) continue;
            GradedPoly keep = proj;
            if (rows.add(std::move(proj))) basis.push_back(std::move(keep));
        }
        return basis;
    };

    std::vector<std::pair<int, GradedPoly>> gens; // (weight, polynomial)
    std::vector<int> degrees;
    for (int w = 1; w <= upto; ++w) {
        const auto target = invariant_basis(w);
        if (target.empty()) continue;

        RowReducer span;
        int rank = 0;
        // All products of the chosen generators of total weight w; a product
        // is enumerated once, from its minimal generator index.
        auto rec = [&](auto&& self, size_t i, int left, const GradedPoly& cur) -> void {
            if (left == 0) {
                if (cur.terms().begin()->first.e[4] <= 1) { // XJ^2 never needed below weight 18
                    if (span.add(cur)) ++rank;
                }
                return;
            }
            if (i >= gens.size()) return;
            self(self, i + 1, left, cur);
            if (gens[i].first <= left) self(self, i, left - gens[i].first, cur * gens[i].second);
        };
        for (size_t i = 0; i < gens.size(); ++i)
            if (gens[i].first <= w) rec(rec, i, w - gens[i].first, gens[i].second);

        const int nnew = static_cast<int>(target.size()) - rank;
        if (nnew < 0) throw error("generator span exceeds the invariant space");
        int added = 0;
        for (const auto& p : target) {
            if (added == nnew) break;
            if (span.add(p)) {
                gens.emplace_back(w, p);
                ++added;
            }
        }
        if (added != nnew) throw error("could not complete generator basis");
        for (int i = 0; i < nnew; ++i) degrees.push_back(w);
    }
    return degrees;
}

} // namespace siegel5

#include "siegel5/weilrep.hpp"

#include <algorithm>
#include <map>

namespace siegel5 {

namespace {

std::vector<Rational> normalize_mod1(std::vector<Rational> v) {
    for (auto& x : v) x = mod1(x);
    return v;
}

} // namespace

DiscriminantForm::DiscriminantForm(const MatrixQ& gram) : gram_(gram) {
    const int n = static_cast<int>(gram.rows());
    if (gram.cols() != n) throw domain_error("Gram matrix must be square");
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!is_integer(gram(i, j))) throw domain_error("Gram matrix must be integral");
            if (gram(i, j) != gram(j, i)) throw domain_error("Gram matrix must be symmetric");
        }
        if (numerator(gram(i, i)) % 2 != 0) throw domain_error("lattice must be even");
    }

    if (n == 0) {
        elements_.push_back({});
        q_.push_back(0);
        neg_.push_back(0);
        return;
    }

    const Rational det = exact_determinant(gram);
    if (det == 0) throw domain_error("Gram matrix must be nondegenerate");
    const Integer d = boost::multiprecision::abs(numerator(det));
    const long dl = d.convert_to<long>();

    // Elements lie in S^{-1}Z^n / Z^n, so all coordinates have denominator
    // dividing |det|; enumerate the grid and keep x with S x integral.
    std::vector<long> v(n, 0);
    while (true) {
        std::vector<Rational> x(n);
        for (int i = 0; i < n; ++i) x[i] = Rational(v[i], dl);
        bool integral = true;
        for (int i = 0; i < n && integral; ++i) {
            Rational s = 0;
            for (int j = 0; j < n; ++j) s += gram_(i, j) * x[j];
            integral = is_integer(s);
        }
        if (integral) elements_.push_back(x);
        int k = n - 1;
        while (k >= 0 && ++v[k] == dl) v[k--] = 0;
        if (k < 0) break;
    }
    if (static_cast<Integer>(elements_.size()) != d)
        throw error("discriminant form enumeration does not match |det|");

    q_.reserve(elements_.size());
    for (const auto& x : elements_) {
        Rational q = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) q += gram_(i, j) * x[i] * x[j];
        q_.push_back(mod1(q / 2));
    }
    neg_.reserve(elements_.size());
    for (const auto& x : elements_) {
        std::vector<Rational> m(n);
        for (int i = 0; i < n; ++i) m[i] = mod1(-x[i]);
        neg_.push_back(index_of(m));
    }
}

int DiscriminantForm::index_of(const std::vector<Rational>& coords) const {
    const auto v = normalize_mod1(coords);
    auto it = std::find(elements_.begin(), elements_.end(), v);
    if (it == elements_.end()) throw domain_error("coordinates are not in the discriminant form");
    return static_cast<int>(it - elements_.begin());
}

Rational DiscriminantForm::pairing(int i, int j) const {
    const auto& x = elements_[i];
    const auto& y = elements_[j];
    Rational s = 0;
    for (int a = 0; a < rank(); ++a)
        for (int b = 0; b < rank(); ++b) s += gram_(a, b) * x[a] * y[b];
    return mod1(s);
}

int DiscriminantForm::add(int i, int j) const {
    std::vector<Rational> s(rank());
    for (int a = 0; a < rank(); ++a) s[a] = mod1(elements_[i][a] + elements_[j][a]);
    return index_of(s);
}

Cyclo DiscriminantForm::sqrt_order() const {
    long d = order(), sq = 1;
    for (long p = 2; p * p <= d; ++p)
        while (d % (p * p) == 0) {
            d /= p * p;
            sq *= p;
        }
    Cyclo root(1);
    if (d % 2 == 0) root = root * Cyclo::sqrt2();
    if (d % 5 == 0) root = root * Cyclo::sqrt5();
    if (d != 1 && d != 2 && d != 5 && d != 10)
        throw domain_error("sqrt(|D|) is outside the conductor-40 field");
    return Rational(sq) * root;
}

int DiscriminantForm::milgram_signature() const {
    Cyclo gauss;
    for (int i = 0; i < order(); ++i) gauss += Cyclo::unit_e(q_value(i));
    // |G|^2 = |D|
    const Cyclo norm = gauss * gauss.conj();
    if (!norm.is_rational() || norm.rational_value() != order())
        throw error("Gauss sum magnitude is not sqrt(|D|)");
    const Cyclo root = sqrt_order();
    for (int s = 0; s < 8; ++s)
        if (gauss == Cyclo::unit_e(Rational(s, 8)) * root) return s;
    throw error("Gauss sum is not sqrt(|D|) times an eighth root of unity");
}

WeilMatrix DiscriminantForm::weil_T() const {
    const int n = order();
    WeilMatrix t = WeilMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) t(i, i) = Cyclo::unit_e(-q_value(i));
    return t;
}

WeilMatrix DiscriminantForm::weil_S_scaled() const {
    const int n = order();
    const int sig = milgram_signature();
    WeilMatrix s(n, n);
    for (int gamma = 0; gamma < n; ++gamma)
        for (int beta = 0; beta < n; ++beta)
            s(beta, gamma) = Cyclo::unit_e(Rational(sig, 8) + pairing(gamma, beta));
    return s;
}

WeilMatrix DiscriminantForm::weil_S() const {
    // 1/sqrt(d) = sqrt(d)/d.
    WeilMatrix s = weil_S_scaled();
    const Cyclo inv = Rational(1, order()) * sqrt_order();
    for (int i = 0; i < s.rows(); ++i)
        for (int j = 0; j < s.cols(); ++j) s(i, j) = inv * s(i, j);
    return s;
}

Mp2Verdict verify_mp2_relations(const DiscriminantForm& d) {
    const int n = d.order();
    const WeilMatrix u = d.weil_S_scaled(); // sqrt(|D|) rho(S)
    const WeilMatrix t = d.weil_T();

    Mp2Verdict v;
    // (UT)^3 = |D|^{3/2} (ST)^3 and sqrt(|D|) U^2 = |D|^{3/2} S^2.
    WeilMatrix ut = u;
    for (int j = 0; j < n; ++j) {
        const Cyclo tj = t(j, j);
        for (int i = 0; i < n; ++i) ut(i, j) = ut(i, j) * tj;
    }
    const WeilMatrix u2 = u * u;
    const WeilMatrix ut3 = WeilMatrix(ut * ut) * ut;
    const Cyclo root = d.sqrt_order();
    WeilMatrix lhs = u2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) lhs(i, j) = root * lhs(i, j);
    v.s_squared_is_st_cubed = (lhs == ut3);
    if (!v.s_squared_is_st_cubed) v.witness = "S^2 != (ST)^3";

    // U^8 = |D|^4 I.
    const WeilMatrix u4 = u2 * u2;
    const WeilMatrix u8 = u4 * u4;
    const Rational d4 = boost::multiprecision::pow(Rational(n), 4);
    bool ok8 = true;
    for (int i = 0; i < n && ok8; ++i)
        for (int j = 0; j < n && ok8; ++j) {
            const Cyclo expect = i == j ? Cyclo(d4) : Cyclo(0);
            ok8 = (u8(i, j) == expect);
        }
    v.s_order_eight = ok8;
    if (!ok8 && v.witness.empty()) v.witness = "S^8 != I";

    // U bar(U)^T = |D| I.
    WeilMatrix uh(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) uh(i, j) = u(j, i).conj();
    const WeilMatrix gram = u * uh;
    bool oku = true;
    for (int i = 0; i < n && oku; ++i)
        for (int j = 0; j < n && oku; ++j) {
            const Cyclo expect = i == j ? Cyclo(Rational(n)) : Cyclo(0);
            oku = (gram(i, j) == expect);
        }
    v.s_unitary = oku;
    if (!oku && v.witness.empty()) v.witness = "S is not unitary";
    return v;
}

const DiscriminantForm& level5_form() {
    static const DiscriminantForm d = [] {
        MatrixQ s(3, 3);
        s << 0, 0, 5, 0, 2, 0, 5, 0, 0;
        return DiscriminantForm(s);
    }();
    return d;
}

namespace {

int coset_index(const Rational& x1, const Rational& x2, const Rational& x3) {
    return level5_form().index_of({x1, x2, x3});
}

void check_unit(int n) {
    if (((n % 5) + 5) % 5 == 0) throw domain_error("unit must be coprime to 5");
}

} // namespace

int gamma_coset(int n) {
    check_unit(n);
    return eps_action(n, coset_index(Rational(1, 5), Rational(1, 2), Rational(4, 5)));
}

int alpha_coset(int n) {
    check_unit(n);
    return coset_index(Rational(n, 5), Rational(1, 2), 0);
}

int beta_coset(int n) {
    check_unit(n);
    return coset_index(0, Rational(1, 2), Rational(n, 5));
}

int delta_coset(int n) {
    const int g = gamma_coset(n);
    return level5_form().add(g, g);
}

int eps_action(int u, int element_index) {
    check_unit(u);
    const int um = ((u % 5) + 5) % 5;
    int uinv = 0;
    for (int v = 1; v < 5; ++v)
        if ((um * v) % 5 == 1) uinv = v;
    const auto& x = level5_form().elements()[element_index];
    return level5_form().index_of({mod1(um * x[0]), x[1], mod1(uinv * x[2])});
}

std::vector<int> eps_permutation(int u) {
    std::vector<int> p(level5_form().order());
    for (int i = 0; i < level5_form().order(); ++i) p[i] = eps_action(u, i);
    return p;
}

bool eps_intertwines(int u) {
    const auto& d = level5_form();
    const auto p = eps_permutation(u);
    // T: diagonal, so P T P^{-1} = T iff Q is preserved.
    for (int i = 0; i < d.order(); ++i)
        if (d.q_value(p[i]) != d.q_value(i)) return false;
    // S: (P S P^{-1})_{beta gamma} = S_{p^{-1} beta, p^{-1} gamma}; equality
    // with S amounts to pairing preservation.
    for (int i = 0; i < d.order(); ++i)
        for (int j = 0; j < d.order(); ++j)
            if (d.pairing(p[i], p[j]) != d.pairing(i, j)) return false;
    return true;
}

namespace {

// zeta_12^k in the power basis 1, z, z^2, z^3 of Q(zeta_12).
std::array<int, 4> zeta12_coords(int k) {
    k = ((k % 12) + 12) % 12;
    static constexpr std::array<std::array<int, 4>, 12> table{{
        {1, 0, 0, 0},
        {0, 1, 0, 0},
        {0, 0, 1, 0},
        {0, 0, 0, 1},
        {-1, 0, 1, 0},
        {0, -1, 0, 1},
        {-1, 0, 0, 0},
        {0, -1, 0, 0},
        {0, 0, -1, 0},
        {0, 0, 0, -1},
        {1, 0, -1, 0},
        {0, 1, 0, -1},
    }};
    return table[k];
}

Integer as_integer(const Rational& q, const char* what) {
    if (!is_integer(q)) throw error(std::string("expected an integer ") + what);
    return numerator(q);
}

} // namespace

Integer vvmf_dimension(const DiscriminantForm& d, int twice_kappa, bool cuspidal,
                       const VvmfSubspace& sub) {
    if (twice_kappa < 5)
        throw domain_error("vvmf_dimension supports only weights kappa >= 5/2");
    const Rational kappa(twice_kappa, 2);
    const int n = d.order();
    const int sig = d.milgram_signature();

    // rho(Z) = e(sig/4) N; forms of weight kappa live where rho(Z) acts by
    // e(-pi i kappa).  The matching negation parity eps solves
    // e(sig/4) eps = e(-kappa/2).
    const Rational parity_exp = mod1(-kappa / 2 - Rational(sig, 4));
    int eps;
    if (parity_exp == 0)
        eps = 1;
    else if (parity_exp == Rational(1, 2))
        eps = -1;
    else
        throw domain_error("weight parity is incompatible with the representation");

    // Projector onto the parity subspace, composed with the chi-trivial
    // average of the optional commuting permutation.
    MatrixQ proj = MatrixQ::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        proj(i, i) += Rational(1, 2);
        proj(d.neg(i), i) += Rational(eps, 2);
    }
    if (sub.fixed_by_perm) {
        const auto& p = *sub.fixed_by_perm;
        MatrixQ avg = MatrixQ::Zero(n, n);
        std::vector<int> cur(n);
        for (int i = 0; i < n; ++i) cur[i] = i;
        for (int j = 0; j < sub.perm_order; ++j) {
            for (int i = 0; i < n; ++i) avg(cur[i], i) += Rational(1, sub.perm_order);
            for (int i = 0; i < n; ++i) cur[i] = p[cur[i]];
        }
        proj = MatrixQ(avg * proj);
    }

    Rational np = 0;
    for (int i = 0; i < n; ++i) np += proj(i, i);
    const Integer subdim = as_integer(np, "subspace dimension");
    if (subdim == 0) return 0;

    // Cusp term: multiplicities of the rho(T)-exponents {-Q}.
    std::map<Rational, Rational> lam_mult;
    for (int i = 0; i < n; ++i) lam_mult[mod1(-d.q_value(i))] += proj(i, i);
    Rational cusp_term = 0;
    Integer eis_count = 0;
    Integer check_total = 0;
    for (const auto& [lam, mult] : lam_mult) {
        const Integer m = as_integer(mult, "T-eigenvalue multiplicity");
        if (m < 0) throw error("negative T multiplicity");
        check_total += m;
        cusp_term += lam * Rational(m);
        if (lam == 0) eis_count = m;
    }
    if (check_total != subdim) throw error("T multiplicities do not sum to the dimension");

    // Elliptic term at i: U = e(kappa/4) rho(S) restricted is an involution;
    // defect 1/2 per eigenvalue -1.
    const WeilMatrix s = d.weil_S();
    Cyclo tr_s;
    for (int b = 0; b < n; ++b)
        for (int g = 0; g < n; ++g)
            if (proj(g, b) != 0) tr_s += proj(g, b) * s(b, g);
    const Cyclo twisted = Cyclo::unit_e(Rational(twice_kappa, 8)) * tr_s;
    const Integer t2 = as_integer(twisted.rational_value(), "involution trace");
    if ((subdim - t2) % 2 != 0) throw error("involution trace parity");
    const Integer minus_count = (subdim - t2) / 2;
    const Rational term_i = Rational(minus_count) / 2;

    // Elliptic term at omega: rho(ST) restricted has eigenvalues
    // e(-kappa/6 + j/3); extract multiplicities from the exact trace.
    Cyclo tr_st;
    for (int b = 0; b < n; ++b)
        for (int g = 0; g < n; ++g)
            if (proj(g, b) != 0)
                tr_st += (proj(g, b) * Cyclo::unit_e(-d.q_value(g))) * s(b, g);
    // tr_st lies in Q(i) = Q(zeta_40^10); match coordinates against
    // sum_j m_j zeta_12^{e_j}.
    Rational A = tr_st.coords()[0], B = tr_st.coords()[10];
    for (int i = 0; i < Cyclo::kDegree; ++i)
        if (i != 0 && i != 10 && tr_st.coords()[i] != 0)
            throw error("rho(ST) trace escapes Q(i)");
    std::array<Rational, 4> rhs{A, 0, 0, B};
    std::array<std::array<Rational, 3>, 4> sys{};
    std::array<Rational, 3> defect{};
    for (int j = 0; j < 3; ++j) {
        const Rational t = mod1(-kappa / 6 + Rational(j, 3));
        const Rational e12 = t * 12;
        const auto coords = zeta12_coords(as_integer(e12, "zeta12 exponent").convert_to<int>());
        for (int r = 0; r < 4; ++r) sys[r][j] = coords[r];
        defect[j] = Rational((3 - j) % 3, 3);
    }
    // Solve the 4x3 system sys * m = rhs exactly.
    std::array<Rational, 3> m{};
    {
        std::array<std::array<Rational, 4>, 4> a{};
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 3; ++c) a[r][c] = sys[r][c];
            a[r][3] = rhs[r];
        }
        int row = 0;
        std::array<int, 3> pivot_row{-1, -1, -1};
        for (int c = 0; c < 3 && row < 4; ++c) {
            int piv = -1;
            for (int r = row; r < 4; ++r)
                if (a[r][c] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            std::swap(a[piv], a[row]);
            for (int r = 0; r < 4; ++r) {
                if (r == row || a[r][c] == 0) continue;
                const Rational f = a[r][c] / a[row][c];
                for (int cc = c; cc < 4; ++cc) a[r][cc] -= f * a[row][cc];
            }
            pivot_row[c] = row;
            ++row;
        }
        for (int c = 0; c < 3; ++c) {
            if (pivot_row[c] < 0) throw error("singular multiplicity system");
            m[c] = a[pivot_row[c]][3] / a[pivot_row[c]][c];
        }
        for (int r = 0; r < 4; ++r) {
            Rational s2 = 0;
            for (int c = 0; c < 3; ++c) s2 += sys[r][c] * m[c];
            if (s2 != rhs[r]) throw error("inconsistent multiplicity system");
        }
    }
    Rational term_omega = 0;
    Integer msum = 0;
    for (int j = 0; j < 3; ++j) {
        const Integer mj = as_integer(m[j], "rho(ST) eigenvalue multiplicity");
        if (mj < 0) throw error("negative rho(ST) multiplicity");
        msum += mj;
        term_omega += defect[j] * Rational(mj);
    }
    if (msum != subdim) throw error("rho(ST) multiplicities do not sum to the dimension");

    const Rational dim = Rational(subdim) * (1 + kappa / 12) - cusp_term - term_i - term_omega;
    Integer result = as_integer(dim, "modular-form dimension");
    if (cuspidal) result -= eis_count;
    if (result < 0) throw error("negative dimension computed");
    return result;
}

} // namespace siegel5

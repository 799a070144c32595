#pragma once

#include "siegel5/cyclotomic.hpp"
#include "siegel5/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace Eigen {
template <>
struct NumTraits<siegel5::Cyclo> {
    using Self = siegel5::Cyclo;
    using Real = Self;
    using NonInteger = Self;
    using Nested = Self;
    using Literal = Self;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 32,
        AddCost = 64,
        MulCost = 512,
    };
    static int digits10() { return 0; }
};
} // namespace Eigen

namespace siegel5 {

using WeilMatrix = Eigen::Matrix<Cyclo, Eigen::Dynamic, Eigen::Dynamic>;

/// Finite quadratic module L'/L of a nondegenerate even lattice, elements
/// enumerated as coordinate vectors in S^{-1}Z^n / Z^n (entries in [0,1)),
/// with Q(x) = x^T S x / 2 mod 1 and pairing <x,y> = x^T S y mod 1.
class DiscriminantForm {
public:
    explicit DiscriminantForm(const MatrixQ& gram);

    int order() const { return static_cast<int>(elements_.size()); }
    int rank() const { return static_cast<int>(gram_.rows()); }
    const MatrixQ& gram() const { return gram_; }
    const std::vector<std::vector<Rational>>& elements() const { return elements_; }

    int index_of(const std::vector<Rational>& coords) const;
    Rational q_value(int i) const { return q_[i]; }
    Rational pairing(int i, int j) const;
    int neg(int i) const { return neg_[i]; }
    int add(int i, int j) const;

    /// Signature mod 8 by Milgram's Gauss sum; throws when the sum does not
    /// land on sqrt(|D|) times an eighth root of unity.
    int milgram_signature() const;

    /// sqrt(|D|) as an exact field element (|D| must have squarefree part
    /// in {1, 2, 5, 10}).
    Cyclo sqrt_order() const;

    /// rho(T): diagonal with entries e(-Q(gamma)).
    WeilMatrix weil_T() const;
    /// rho(S): e(sig/8) |D|^{-1/2} [ e(<gamma, beta>) ]_{beta, gamma}.
    WeilMatrix weil_S() const;
    /// sqrt(|D|) * rho(S); all entries are single roots of unity, which
    /// keeps the metaplectic-relation products cheap.
    WeilMatrix weil_S_scaled() const;

private:
    MatrixQ gram_;
    std::vector<std::vector<Rational>> elements_;
    std::vector<Rational> q_;
    std::vector<int> neg_;
};

struct Mp2Verdict {
    bool s_squared_is_st_cubed = false;
    bool s_order_eight = false;
    bool s_unitary = false;
    std::string witness;
    bool all() const { return s_squared_is_st_cubed && s_order_eight && s_unitary; }
};

/// rho(S)^2 = (rho(S) rho(T))^3, rho(S)^8 = 1 and unitarity, verified as
/// exact matrix identities in the cyclotomic field.
Mp2Verdict verify_mp2_relations(const DiscriminantForm& d);

/// The canonical module of the toolkit: Gram [[0,0,5],[0,2,0],[5,0,0]]
/// (order 50, signature 1 mod 8).
const DiscriminantForm& level5_form();

/// Distinguished cosets: gamma_n = eps_n(gamma_1) of norm 1/20,
/// alpha_n = (n/5, 1/2, 0) and beta_n = (0, 1/2, n/5) of norm 1/4,
/// delta_n = 2 gamma_n of norm 1/5 (n = 1..4).  Indices into level5_form().
int gamma_coset(int n);
int alpha_coset(int n);
int beta_coset(int n);
int delta_coset(int n);

/// The action of eps_u on L'/L: (x, y, z) -> (u x, y, u^{-1} z); requires
/// gcd(u, 5) = 1.
int eps_action(int u, int element_index);
std::vector<int> eps_permutation(int u);

/// Exact check that the eps_u permutation commutes with rho(T) and rho(S).
bool eps_intertwines(int u);

/// Dimension of M_kappa(rho) (or the cusp subspace) for half-integral
/// kappa = twice_kappa / 2 >= 5/2, by the Riemann-Roch count
///     n (1 + kappa/12) - sum {lambda_j} - (defects at i) - (defects at omega)
/// evaluated on the parity subspace; when `fixed_by_perm` is given, on its
/// chi-trivial isotypic part (the permutation must commute with rho).
struct VvmfSubspace {
    std::optional<std::vector<int>> fixed_by_perm;
    int perm_order = 1;
};
Integer vvmf_dimension(const DiscriminantForm& d, int twice_kappa, bool cuspidal,
                       const VvmfSubspace& sub = {});

} // namespace siegel5

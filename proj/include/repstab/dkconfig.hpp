#ifndef REPSTAB_DKCONFIG_HPP
#define REPSTAB_DKCONFIG_HPP

#include "repstab/fimod.hpp"
#include "repstab/liecalc.hpp"

#include <string>
#include <utility>
#include <vector>

namespace repstab {

inline constexpr int max_dk_points = 7;
inline constexpr int max_dk_weight = 4;

/// The Lie algebra on B_ij (0 <= i < j < k) modulo the infinitesimal braid relations.
/// Generators have the parity of the ambient dimension n, and B_ji = (-1)^n B_ij.
struct DKAlgebra {
    int k = 0;
    Parity parity = Parity::even;

    int generator_count() const { return k * (k - 1) / 2; }
    /// Letter index of B_ij (i < j), lexicographic in (i, j).
    int letter(int i, int j) const;
    std::pair<int, int> points(int letter) const;
    /// Relators of weight 2 as tensor polynomials in the letters.
    std::vector<TensorPoly> relators() const;
};

struct DKGradedPiece {
    int k = 0;
    Parity parity = Parity::even;
    int weight = 0;
    std::vector<std::string> basis;  // normal-form words, e.g. "[B12,B13]"
    SymRep action;

    std::size_t dimension() const { return basis.size(); }
    friend bool operator==(const DKGradedPiece&, const DKGradedPiece&) = default;
};

/// Quotient component spanned by words whose indices cover exactly {0, ..., s-1}.
/// The whole weight piece at k points is the sum over s of C(k,s) relabelled copies.
struct SupportComponent {
    int s = 0;
    Parity parity = Parity::even;
    int weight = 0;
    std::vector<Word> basis;       // leading words (letters of DKAlgebra{s, parity})
    CharacterVector character;     // of S_s
    std::size_t ideal_rank = 0;    // rank of the relator ideal inside the component
    std::size_t free_dimension = 0;
};

const SupportComponent& dk_support_component(int s, Parity parity, int weight);

DKGradedPiece dk_graded_basis(int k, Parity parity, int weight);
SymRep dk_character(int k, Parity parity, int weight);
CharacterVector dk_character_vector(int k, Parity parity, int weight);
BigInt dk_dimension(int k, Parity parity, int weight);

/// The components E_s as S_s-representations: H_0 of the FI#-module of weight-m pieces.
GeneratorMultiset dk_generators(Parity parity, int weight);

/// Level k = dk_character(k, parity, m) for k <= k_max; i = m(n-2)+1 noted in metadata.
FIModuleTable homotopy_fi_module(Parity parity, int weight, int k_max);

/// Smallest ambient dimension of the given parity (n = 4 even, n = 3 odd).
int minimal_dimension(Parity parity);
/// Homotopy degree i = m(n-2)+1 of the weight-m piece.
int homotopy_degree(int n, int weight);

struct ArnoldPiece {
    int k = 0;
    Parity parity = Parity::even;
    int j = 0;  // number of omega factors; cohomological degree j(n-1)
    std::vector<std::vector<std::pair<int, int>>> basis;  // admissible monomials
    SymRep action;

    std::size_t dimension() const { return basis.size(); }
    friend bool operator==(const ArnoldPiece&, const ArnoldPiece&) = default;
};

inline constexpr int max_arnold_degree = 4;

ArnoldPiece arnold_character(int k, Parity parity, int j);
FIModuleTable cohomology_fi_module(Parity parity, int j, int k_max);

/// Weight-t piece of H_*(Omega F_k(R^n)) = U(L_k), assembled by PBW from graded
/// powers of the DK pieces (degree t(n-2)).
SymRep loop_homology_piece(int k, Parity parity, int t);
FIModuleTable loop_fi_module(Parity parity, int t, int k_max);

/// Coefficient of u^t in prod_{j=1}^{k-1} (1 - j u)^{-1}.
BigInt loop_series_coefficient(int k, int t);
/// Lie dimensions a_1..a_{t_max} whose PBW product matches the given series
/// (super convention: odd-parity weights enter through (1 + u^w) factors).
std::vector<BigInt> pbw_primitives(const std::vector<BigInt>& series, Parity parity);

struct RangeCheck {
    std::string side;  // homotopy | cohomology | loop
    int degree_index = 0;  // Lie weight m, Arnold degree j, or loop weight t
    int n = 0;
    int i = 0;  // degree of the homotopy / cohomology group
    int weight = 0;
    int weight_bound = 0;
    std::optional<int> onset;
    std::optional<int> onset_defined_labels;
    std::optional<int> onset_bound;
    std::optional<int> onset_bound_strong;
    bool passed = false;
    std::string detail;
};

struct ConfigRangeReport {
    Parity parity = Parity::even;
    int m_max = 0;
    int k_max = 0;
    std::vector<RangeCheck> checks;

    bool passed() const;
};

ConfigRangeReport verify_config_ranges(Parity parity, int m_max, int k_max);

}  // namespace repstab

#endif

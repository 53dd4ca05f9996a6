#ifndef REPSTAB_FIMOD_HPP
#define REPSTAB_FIMOD_HPP

#include "repstab/linalg.hpp"
#include "repstab/reps.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace repstab {

/// Bounds and provenance notes stored next to a table. Never recomputed in place.
struct TableMetadata {
    std::optional<int> weight_bound;
    std::optional<int> generation_bound;
    std::optional<int> stability_bound;
    std::map<std::string, std::string> notes;

    friend bool operator==(const TableMetadata&, const TableMetadata&) = default;
};

/// A finitely generated FI-Q-module given by its levels F_0, ..., F_N as
/// S_n-representations. Immutable once built.
class FIModuleTable {
public:
    FIModuleTable(std::string name, bool fi_sharp, std::vector<SymRep> levels, TableMetadata metadata = {});

    const std::string& name() const noexcept { return name_; }
    bool fi_sharp() const noexcept { return fi_sharp_; }
    int max_n() const noexcept { return static_cast<int>(levels_.size()) - 1; }
    const SymRep& level(int n) const;
    const std::vector<SymRep>& levels() const noexcept { return levels_; }
    const TableMetadata& metadata() const noexcept { return metadata_; }

    FIModuleTable with_metadata(TableMetadata metadata) const;
    FIModuleTable renamed(std::string name) const;

    /// c_{n,lambda}: multiplicity of V(lambda)_n in F_n (0 when the label is undefined at n).
    BigInt padded_multiplicity(int n, const Partition& lambda) const;

    friend bool operator==(const FIModuleTable&, const FIModuleTable&) = default;

private:
    std::string name_;
    bool fi_sharp_ = false;
    std::vector<SymRep> levels_;
    TableMetadata metadata_;
};

/// Generators of an FI#-module: a multiset of partitions of varying sizes.
using GeneratorMultiset = std::map<Partition, BigInt, CanonicalOrder>;

/// Levels 0..max_n of the free FI#-module M(+ V_lambda) on the given generators.
FIModuleTable free_module_table(const GeneratorMultiset& generators, int max_n, std::string name = "");
FIModuleTable free_module_table(const Partition& lambda, int max_n);

struct WeightReport {
    int weight = 0;
    std::optional<int> level;  // first level attaining the maximum; none for the zero module
};

WeightReport weight_of(const FIModuleTable& table);

/// dim Phi_q(F)_k for k = 0 .. max_n - q.
std::vector<BigInt> phi_dims(const FIModuleTable& table, int q);

struct StabilityBounds {
    int lower = 0;
    std::optional<int> upper;  // known only for FI# tables
    int q_max = 0;

    bool certified() const { return upper && *upper == lower; }
};

StabilityBounds stability_degree_bounds(const FIModuleTable& table, std::optional<int> q_max = std::nullopt);

/// Generators found by peeling M(mu)-expansions level by level from n = 0.
GeneratorMultiset h0_decompose(const FIModuleTable& table);

int generation_degree(const FIModuleTable& table);

/// Levelwise tensor product, with bound metadata attached.
FIModuleTable tensor_fimod(const FIModuleTable& f, const FIModuleTable& g);

/// Polynomial sum_j c_j binom(n, j), valid for n >= onset.
struct DimensionPolynomial {
    std::vector<Rational> coefficients;
    int onset = 0;

    Rational evaluate(long n) const;
    int degree() const;
    std::string to_string() const;
    /// Same polynomial in the monomial basis: a_0 + a_1 n + a_2 n^2 + ...
    std::vector<Rational> power_coefficients() const;
    /// e.g. "1/2*n^2 - 1/2*n"
    std::string to_power_string(const std::string& variable = "n") const;

    friend bool operator==(const DimensionPolynomial&, const DimensionPolynomial&) = default;
};

DimensionPolynomial dimension_polynomial(const FIModuleTable& table);

/// Explicit S_n-representations with adjacent-transposition matrices and
/// structure maps phi_n : V_n -> V_{n+1} (acting on column vectors).
struct ConsistentSequence {
    struct Level {
        std::vector<linalg::Matrix> generators;  // s_1 .. s_{n-1}
        linalg::Matrix phi;                      // d_{n+1} x d_n, absent on the last level
        std::size_t dimension = 0;
    };
    std::string name;
    std::vector<Level> levels;

    int max_n() const { return static_cast<int>(levels.size()) - 1; }
    /// Matrix of a permutation with the given cycle type built from the generators.
    linalg::Matrix class_representative(int n, const Partition& cycle_type) const;
    CharacterVector character(int n) const;
};

/// S_n acting on r-subsets of [n] (even) or on oriented r-subsets with the sign of
/// the sorting permutation (odd); phi is the inclusion of subsets.
ConsistentSequence subset_sequence(int r, Parity parity, int max_n);

struct RepStabReport {
    int claimed_range = 0;
    bool passed = false;
    /// Least N' with constant c_{n,lambda} for N' <= n <= observed_max_n, counting an
    /// undefined label V(lambda)_n as multiplicity 0.
    int onset = 0;
    /// Same, but comparing c_{n,lambda} only at levels where V(lambda)_n is defined.
    int onset_defined_labels = 0;
    int observed_max_n = 0;
    bool extended_by_classification = false;
    GeneratorMultiset stable_multiplicities;  // unpadded labels at observed_max_n
    std::optional<int> injective_from;
    std::optional<int> spanning_from;
    bool coxeter_relations_hold = true;
    bool equivariant = true;
    std::vector<std::string> failures;
};

RepStabReport check_uniform_repstab(const FIModuleTable& table, int range);
RepStabReport check_uniform_repstab(const ConsistentSequence& sequence, int range);

/// Uniform representation stability range guaranteed by stability degree r and weight s.
int predicted_range(int stability_degree, int weight);

}  // namespace repstab

#endif

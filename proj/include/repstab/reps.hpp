#ifndef REPSTAB_REPS_HPP
#define REPSTAB_REPS_HPP

#include "repstab/symchar.hpp"

#include <map>
#include <string>

namespace repstab {

/// Representation of S_n as a multiplicity map over partitions of n. `Signed`
/// selects virtual representations (negative multiplicities allowed).
template <bool Signed>
class BasicRep {
public:
    using Map = std::map<Partition, BigInt, CanonicalOrder>;

    BasicRep() = default;
    explicit BasicRep(int n) : n_(n) {}
    BasicRep(int n, std::initializer_list<std::pair<Partition, long>> entries);

    int rank() const noexcept { return n_; }
    const Map& multiplicities() const noexcept { return mults_; }
    bool empty() const noexcept { return mults_.empty(); }

    BigInt multiplicity(const Partition& lambda) const;
    /// Adds `count` copies of V_lambda; zero entries are dropped.
    void add(const Partition& lambda, const BigInt& count);

    BigInt dimension() const;
    CharacterVector character() const;

    friend bool operator==(const BasicRep&, const BasicRep&) = default;

private:
    int n_ = 0;
    Map mults_;
};

using SymRep = BasicRep<false>;
using VirtualRep = BasicRep<true>;

SymRep operator+(const SymRep& a, const SymRep& b);
SymRep scaled(const SymRep& a, const BigInt& factor);
std::string to_string(const SymRep& rep);

SymRep trivial_rep(int n);
SymRep sign_rep(int n);
SymRep permutation_rep(int n);
SymRep regular_rep(int n);

/// mult(lambda) = <chi, chi^lambda>; throws NotACharacter unless every multiplicity
/// is a non-negative integer.
SymRep decompose_character(const CharacterVector& chi);
VirtualRep decompose_virtual(const CharacterVector& chi);

SymRep kronecker(const SymRep& a, const SymRep& b);
SymRep sign_twist(const SymRep& a);

/// Res^{S_n}_{S_m}, by iterated removal of one box.
SymRep restrict_to(const SymRep& a, int m);

/// Ind_{S_m x S_{n-m}}^{S_n}(V_lambda (x) trivial), from the induced-character formula.
SymRep induce_with_trivial(const Partition& lambda, int n);

/// Ind_{S_m x S_{n-m}}^{S_n}(A (x) trivial) for an arbitrary S_m-representation A.
SymRep induce_with_trivial(const SymRep& a, int n);

/// Symmetric (even) or exterior (odd) j-th power, by the cycle-index formula.
SymRep graded_power(const SymRep& a, int j, Parity parity);
CharacterVector graded_power_character(const CharacterVector& chi, int j, Parity parity);

/// chi(g^p) as a class function of g.
CharacterVector adams_operation(const CharacterVector& chi, int p);

}  // namespace repstab

#endif

#ifndef REPSTAB_SYMCHAR_HPP
#define REPSTAB_SYMCHAR_HPP

#include "repstab/partitions.hpp"

#include <memory>
#include <vector>

namespace repstab {

struct ConjugacyClass {
    Partition cycle_type;
    BigInt size;
};

/// Conjugacy classes of S_n, identity class first (lexicographic ascending cycle types).
struct ClassData {
    int n = 0;
    std::vector<ConjugacyClass> classes;

    std::size_t index_of(const Partition& cycle_type) const;
};

/// A class function on S_n with one exact value per class, in ClassData order.
struct CharacterVector {
    int n = 0;
    std::vector<Rational> values;

    static CharacterVector zero(int n);
    bool is_integral() const;
    friend bool operator==(const CharacterVector&, const CharacterVector&) = default;
};

CharacterVector operator+(const CharacterVector& a, const CharacterVector& b);
CharacterVector operator*(const CharacterVector& a, const CharacterVector& b);
CharacterVector operator*(const Rational& s, const CharacterVector& a);

struct CharacterTable {
    int n = 0;
    std::vector<Partition> labels;  // canonical order
    std::vector<CharacterVector> rows;

    const CharacterVector& row(const Partition& lambda) const;
};

/// Largest n accepted by conjugacy_classes / character_table (default 14).
int max_rank();
void set_max_rank(int n);

const ClassData& conjugacy_classes(int n);

/// chi^lambda(mu) by the Murnaghan-Nakayama rule, memoized on (lambda, mu).
BigInt character_value(const Partition& lambda, const Partition& mu);

Rational inner_product(const CharacterVector& chi, const CharacterVector& psi);

/// A permutation of {0..n-1} with the given cycle type (consecutive blocks, i -> i+1).
std::vector<int> permutation_of_type(int n, const Partition& cycle_type);

/// Cycle type of g^p for g of cycle type mu.
Partition power_map(const Partition& mu, int p);

/// Full table; served from the in-process cache, then the on-disk cache, else computed.
std::shared_ptr<const CharacterTable> character_table(int n);

/// Computes the table from scratch without touching any cache.
CharacterTable compute_character_table(int n);

}  // namespace repstab

#endif

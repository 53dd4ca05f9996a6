#ifndef REPSTAB_PARTITIONS_HPP
#define REPSTAB_PARTITIONS_HPP

#include "repstab/core.hpp"

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace repstab {

/// A weakly decreasing sequence of positive integers. The empty sequence is the
/// unique partition of 0. Used both as an irreducible label and as a cycle type.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    /// Largest part, 0 for the empty partition.
    int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    /// Number of parts equal to `value`.
    int multiplicity(int value) const;

    Partition conjugate() const;
    /// Removes the first row; the inverse of pad_label.
    Partition unpadded() const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Canonical order for labels: lexicographic descending, so (n) comes first.
struct CanonicalOrder {
    bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// All partitions of n, lexicographic descending.
std::vector<Partition> enumerate_partitions(int n);

/// Number of standard Young tableaux of shape lambda.
BigInt hook_dimension(const Partition& lambda);

/// (n - |lambda|, lambda_1, ..., lambda_l); requires n >= |lambda| + lambda_1.
Partition pad_label(const Partition& lambda, int n);
bool padding_defined(const Partition& lambda, int n);

/// All mu containing lambda with |mu| = |lambda| + r and mu/lambda a horizontal strip,
/// in canonical order.
std::vector<Partition> horizontal_strips(const Partition& lambda, int r);

/// z_mu = prod_i i^{m_i} m_i!, the centralizer order of a permutation of cycle type mu.
BigInt centralizer_order(const Partition& mu);

/// (-1)^{n - #cycles}.
int cycle_sign(const Partition& mu);

}  // namespace repstab

#endif

#ifndef REPSTAB_ORACLES_HPP
#define REPSTAB_ORACLES_HPP

#include "repstab/core.hpp"

#include <vector>

// Independent dimension formulas used to cross-check the constructive code paths.
namespace repstab::oracle {

int moebius(int n);

/// Free Lie (super)algebra on `generators` letters of one parity, weight w:
/// (1/w) sum_{e | w} mu(e) s(e) g^{w/e}, where s(e) = (-1)^{w + w/e} for odd letters.
BigInt super_witt_dimension(int generators, int weight, Parity parity);

/// Rank of the span of all bracket trees of weight w, expanded into words.
BigInt magma_quotient_dimension(int generators, int weight, Parity parity);

/// Graded dimension of the weight-w piece of L_k(n-2) from the iterated semidirect
/// product L_k = L_{k-1} x| Free(B_1k, ..., B_{k-1,k}).
BigInt dk_semidirect_dimension(int k, Parity parity, int weight);

}  // namespace repstab::oracle

#endif

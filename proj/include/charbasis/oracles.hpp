#pragma once

#include <vector>

#include "charbasis/combinatorics.hpp"
#include "charbasis/symfunc.hpp"

namespace charbasis {

/// g for the padded triple at n, from the character table.
/// Throws InvalidInput if some padded index is not a partition.
Integer finite_n_kronecker(const Partition& lambda, const Partition& mu, const Partition& nu, int n);

/// Coefficient of s̃_γ in h̃_μ s̃_λ as a sum of products of two
/// multiple Littlewood-Richardson coefficients at ambient size n.
Integer stable_coeff_lr_sum(const Partition& mu, const Partition& lambda, const Partition& gamma, int n);
/// n = 2(|μ| + |λ|).
Integer stable_coeff_lr_sum(const Partition& mu, const Partition& lambda, const Partition& gamma);

struct BsetCheck {
  Integer bset_count;
  Integer gamma_lr;
  Integer lambda_lr;
  bool holds() const { return bset_count == gamma_lr * lambda_lr; }
};

/// Compares |B| with the product of the two multiple LR coefficients.
/// The first overload takes full partitions, the second pads γ and λ to n.
BsetCheck check_bset_identity(const std::vector<Partition>& taus, const Partition& gamma_full,
                              const Partition& lambda_full);
bool verify_bset_identity(const std::vector<Partition>& taus, const Partition& gamma_full,
                          const Partition& lambda_full);
bool verify_bset_identity(const std::vector<Partition>& taus, const Partition& gamma, const Partition& lambda,
                          int n);

/// Coefficient of s̃_λ in (h̃₁)^r.
Integer partition_algebra_dim(const Partition& lambda, int r);
/// Coefficient of s̃_λ in (s̃₁)^r.
Integer quasi_partition_dim(const Partition& lambda, int r);

/// Single-row set-valued tableaux with at most 2d cells and content
/// 1^d … a^d (a+1)^{d-1} … k^{d-1}.
Integer entanglement_coeff(int d, int k, int a);
/// The same number as the s_{2d} coefficient of a Kronecker power of
/// h_{(d,d)} and h_{(d+1,d-1)}.
Integer entanglement_coeff_kronecker(int d, int k, int a);

/// Bell numbers by the triangle recurrence.
Integer bell_number(int n);

/// Orthonormalizes s_λ, |λ| ≤ max_size, under the character scalar product,
/// taking partitions in graded order. Results are in H.
std::map<Partition, SymExpr> gram_schmidt(int max_size);

}  // namespace charbasis

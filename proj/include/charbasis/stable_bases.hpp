#pragma once

#include "charbasis/combinatorics.hpp"
#include "charbasis/symfunc.hpp"

namespace charbasis {

/// h̃_μ in the s̃ basis.
SymExpr ht_in_st(const Partition& mu);
/// h_μ in the h̃ basis, one h̃_{m̃(π)} per multiset partition π.
SymExpr h_in_ht(const Partition& mu);
/// h_μ in the s̃ basis.
SymExpr h_in_st(const Partition& mu);
/// h̃_μ in the h basis.
SymExpr ht_in_h(const Partition& mu);
/// s̃_λ in the h basis by triangular inversion of h_in_st.
SymExpr st_in_h(const Partition& lambda);
/// s̃_λ in the h basis from the Pieri recursion on λ₁.
SymExpr st_in_h_pieri(const Partition& lambda);
/// Coordinates of f in the s̃ basis.
SymExpr expand_in_st(const SymExpr& f);

/// h_α s̃_λ from lattice multiset tableaux.
SymExpr product_h_st(const Composition& alpha, const Partition& lambda);
/// h̃_μ s̃_λ from lattice tableaux with at most one letter of each kind per cell.
SymExpr product_ht_st(const Composition& mu, const Partition& lambda);
/// h̃_{α₁}⋯h̃_{α_k} s̃_λ from lattice set-valued tableaux.
SymExpr product_ht_multi_st(const Composition& alpha, const Partition& lambda);
/// s̃_{α₁}⋯s̃_{α_k} s̃_λ; as above with no size-one label in the first row.
SymExpr product_st_multi_st(const Composition& alpha, const Partition& lambda);
/// h̃_{m̃(π)} s̃_λ from tableaux whose unbarred parts form π.
SymExpr product_ht_mpi_st(const MultisetPartition& pi, const Partition& lambda);

/// s̃_λ s̃_μ in the s̃ basis; coefficients are stable Kronecker coefficients.
SymExpr gbar(const Partition& lambda, const Partition& mu);
Integer gbar_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Coefficient of s̃_λ in s_ν; zero when |λ| > |ν|.
Integer restriction_mult(const Partition& nu, const Partition& lambda);

}  // namespace charbasis

#pragma once

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "charbasis/combinatorics.hpp"

namespace charbasis {

enum class Basis { kH, kP, kS, kHT, kST };

/// "h", "p", "s", "ht", "st".
std::string_view to_string(Basis b);
Basis parse_basis(std::string_view name);

/// Sparse exact linear combination of basis elements of one basis.
class SymExpr {
 public:
  using Terms = std::map<Partition, Rational>;

  explicit SymExpr(Basis basis = Basis::kH) : basis_(basis) {}
  /// Zero coefficients are dropped.
  SymExpr(Basis basis, Terms terms);
  static SymExpr atom(Basis basis, Partition index, const Rational& coeff = 1);
  /// c times the unit, which is the empty partition in every basis.
  static SymExpr constant(const Rational& c, Basis basis = Basis::kH);

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Partition& index) const;
  /// Largest index size; the unit and zero have degree 0.
  int degree() const;
  bool homogeneous() const;

  void add_term(const Partition& index, const Rational& c);

  SymExpr& operator+=(const SymExpr& other);
  friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
  friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a += b * Rational(-1); }
  friend SymExpr operator*(SymExpr a, const Rational& c);
  friend SymExpr operator*(const Rational& c, SymExpr a) { return std::move(a) * c; }
  friend bool operator==(const SymExpr&, const SymExpr&) = default;

  /// One "basis[index] coeff" line per term, in index order.
  std::string to_string() const;

 private:
  Basis basis_;
  Terms terms_;
};

nlohmann::json to_json(const SymExpr& f);
/// Throws InvalidInput on schema violations.
SymExpr symexpr_from_json(const nlohmann::json& j);

/// Throws InvalidInput on basis mismatch.
SymExpr add(const SymExpr& f, const SymExpr& g);
SymExpr scale(const Rational& c, const SymExpr& f);
/// H·H and P·P by index merging, S·S by Littlewood-Richardson, ST·ST and
/// HT·HT in their own basis; mixed bases multiply in H.
SymExpr multiply(const SymExpr& f, const SymExpr& g);
SymExpr change_basis(const SymExpr& f, Basis to);

/// χ^λ(μ). Throws InvalidInput when |λ| ≠ |μ|.
Integer mn_character(const Partition& lambda, const Partition& mu);

/// f at the eigenvalues of a permutation matrix of cycle type μ.
Rational eval_at_xi(const SymExpr& f, const Partition& mu);
Rational hall_inner(const SymExpr& f, const SymExpr& g);
/// Character scalar product at n = 2·max(deg f, deg g).
Rational at_inner(const SymExpr& f, const SymExpr& g);
Rational at_inner(const SymExpr& f, const SymExpr& g, int n);
/// Internal product, degree by degree; the result is in S.
SymExpr kronecker_product(const SymExpr& f, const SymExpr& g);
/// φ_n(f) in P.
SymExpr frobenius(const SymExpr& f, int n);

}  // namespace charbasis

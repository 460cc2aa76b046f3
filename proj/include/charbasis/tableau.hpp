#pragma once

#include <functional>
#include <map>
#include <vector>

#include "charbasis/combinatorics.hpp"

namespace charbasis {

/// outer/inner with inner ⊆ outer. Rows are numbered from the bottom
/// (French convention).
struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  SkewShape(Partition outer, Partition inner = {});

  int size() const { return outer.size() - inner.size(); }
  int rows() const { return outer.length(); }
  /// Cells in row i (zero-based).
  int row_cells(int i) const { return outer[i] - inner[i]; }
  bool straight() const { return inner.empty(); }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

/// Integer-filled (skew) tableau. `rows[i][k]` is the k-th filled cell of row i,
/// which sits in column inner[i] + k (zero-based).
class IntTableau {
 public:
  IntTableau() = default;
  IntTableau(SkewShape shape, std::vector<std::vector<int>> rows);
  /// Row i filled with the letter i+1.
  static IntTableau superstandard(const Partition& shape);

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  /// Zero-based (row, column); the cell must be filled.
  int at(int row, int col) const { return rows_[row][col - shape_.inner[row]]; }
  bool column_strict() const;
  /// Letter multiplicities indexed by letter-1.
  std::vector<int> content() const;

  friend bool operator==(const IntTableau&, const IntTableau&) = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

/// Bottom row to top row, right to left within each row.
Word reading_word(const IntTableau& t);

/// Column-strict fillings of `shape` using letter i exactly content[i-1] times,
/// visited in reading-order lexicographic order.
void for_each_cst(const SkewShape& shape, const std::vector<int>& content,
                  const std::function<void(const IntTableau&)>& visit);
std::vector<IntTableau> enumerate_cst(const SkewShape& shape, const std::vector<int>& content);

/// K_{λμ}. Throws InvalidInput when |λ| ≠ |μ|.
Integer kostka(const Partition& lambda, const Partition& mu);

enum class SlideOrder { kTopFirst, kBottomFirst };

/// Straight-shape rectification by jeu de taquin. The default slides inner
/// corners from the highest row down; the result does not depend on it.
IntTableau jdt_rectify(const IntTableau& t, SlideOrder order = SlideOrder::kTopFirst);

enum class LrMethod { kLatticePair, kJeuDeTaquin };

/// c^ν_{λμ}; zero when sizes do not add up.
Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu,
                       LrMethod method = LrMethod::kLatticePair);
/// s_λ s_μ as {ν: c^ν_{λμ}}, optionally restricted to ν ⊆ bound.
std::map<Partition, Integer> lr_expand(const Partition& lambda, const Partition& mu,
                                       const Partition* bound = nullptr);
/// Coefficient of s_target in s_{τ⁰} s_{τ¹} ⋯ via the chain sum.
Integer multi_lr(const std::vector<Partition>& taus, const Partition& target);

/// (T₀, …, T_ℓ) with T₀ superstandard and each Tᵢ sitting on top of T_{i-1}.
struct TableauSequence {
  std::vector<IntTableau> tableaux;
  /// Rectified shape of each member.
  std::vector<Partition> shapes() const;
  Word word() const;
};

/// Sequences (T₀,…,T_ℓ) where T₀ is superstandard of shape τ⁰, Tᵢ rectifies
/// to τⁱ, the concatenated reading word is lattice of content λ and the last
/// outer shape is γ. Throws InvalidInput unless |γ| = |λ| = Σ|τⁱ|.
void for_each_bset(const std::vector<Partition>& taus, const Partition& gamma, const Partition& lambda,
                   const std::function<void(const TableauSequence&)>& visit);
std::vector<TableauSequence> enumerate_bset(const std::vector<Partition>& taus, const Partition& gamma,
                                            const Partition& lambda);
Integer count_bset(const std::vector<Partition>& taus, const Partition& gamma, const Partition& lambda);

}  // namespace charbasis

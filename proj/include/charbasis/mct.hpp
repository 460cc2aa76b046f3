#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charbasis/combinatorics.hpp"
#include "charbasis/tableau.hpp"

namespace charbasis {

/// Which cell labels an enumeration admits.
enum class FillProfile {
  kMultiset,            ///< unbarred part is any multiset
  kSet,                 ///< unbarred part has no repeated letter
  kSetNoSingletonRow1,  ///< kSet, and no first-row label of total size 1
  kPair,                ///< at most one unbarred and one barred letter per cell
};

FillProfile parse_profile(std::string_view name);
std::string_view to_string(FillProfile profile);

/// Multiset-valued tableau of shape (r, γ)/(γ₁).
///
/// Row 0 (the bottom row) starts with γ₁ skew cells followed by the first-row
/// labels; rows 1.. hold the straight shape γ. Because the skew part covers
/// every column used above it, row 0 and the upper rows never share a column.
class MultisetTableau {
 public:
  MultisetTableau(Partition gamma, std::vector<CellLabel> first_row,
                  std::vector<std::vector<CellLabel>> upper_rows);

  const Partition& gamma() const { return gamma_; }
  int r() const { return gamma_.first() + static_cast<int>(first_row_.size()); }
  SkewShape shape() const;
  const std::vector<CellLabel>& first_row() const { return first_row_; }
  const std::vector<std::vector<CellLabel>>& upper_rows() const { return upper_; }
  /// Zero-based (row, column); nullptr for skew or absent cells.
  const CellLabel* at(int row, int col) const;

  /// Barred and unbarred contents, indexed by letter-1.
  std::vector<int> barred_content() const;
  std::vector<int> unbarred_content() const;

  /// Column-strict under the reverse-lex order and no purely barred first-row cell.
  bool well_formed() const;
  /// One row per line, bottom row last; skew cells as [.].
  std::string render() const;

  friend bool operator==(const MultisetTableau&, const MultisetTableau&) = default;

 private:
  Partition gamma_;
  std::vector<CellLabel> first_row_;
  std::vector<std::vector<CellLabel>> upper_;
};

/// Canonical order: by r, then labels row by row from the bottom.
bool canonical_less(const MultisetTableau& a, const MultisetTableau& b);

/// Barred letters in reading order (bottom to top, right to left), first
/// from purely barred cells, then grouped by unbarred multiset in reverse-lex order.
Word barred_group_word(const MultisetTableau& t);
bool is_lattice_tableau(const MultisetTableau& t);

/// Tableaux with barred content λ and unbarred content α under `profile`.
/// With no γ the shape is free and every admissible γ is visited.
void for_each_mct(const std::optional<Partition>& gamma, const Partition& lambda, const Composition& alpha,
                  FillProfile profile, bool lattice_only,
                  const std::function<void(const MultisetTableau&)>& visit);
/// Sorted canonically.
std::vector<MultisetTableau> enumerate_mct(const Partition& gamma, const Partition& lambda,
                                           const Composition& alpha, FillProfile profile, bool lattice_only);
/// Number of tableaux for every γ at once.
std::map<Partition, Integer> count_mct_by_shape(const Partition& lambda, const Composition& alpha,
                                                FillProfile profile, bool lattice_only);

/// Tableaux whose non-empty unbarred cell parts form exactly π.
void for_each_mct_prime(const std::optional<Partition>& gamma, const Partition& lambda,
                        const MultisetPartition& pi, bool lattice_only,
                        const std::function<void(const MultisetTableau&)>& visit);
std::vector<MultisetTableau> enumerate_mct_prime(const Partition& gamma, const Partition& lambda,
                                                 const MultisetPartition& pi, bool lattice_only);
std::map<Partition, Integer> count_mct_prime_by_shape(const Partition& lambda, const MultisetPartition& pi,
                                                      bool lattice_only);

}  // namespace charbasis

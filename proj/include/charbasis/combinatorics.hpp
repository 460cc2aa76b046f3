#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace charbasis {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for malformed arguments: non-partitions, size mismatches, bad literals.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// Integer partition: weakly decreasing positive parts.
///
/// Partitions compare by size first, then reverse lexicographically, so
/// that ordered containers list (3), (2,1), (1,1,1) in that order.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidInput unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts decreasingly and drops zero parts; negative parts are rejected.
  static Partition from_unsorted(std::vector<int> parts);
  /// Parses the literal form `[2,1]`; `[]` is the empty partition.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Zero-based access; returns 0 past the last part.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  /// The partition with its first part removed.
  Partition tail() const;
  /// (a, λ); requires a ≥ λ₁.
  Partition prepend(int a) const;
  /// m_i(λ).
  int multiplicity(int i) const;
  /// True when `inner` fits inside this diagram.
  bool contains(const Partition& inner) const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// The padded partition (n - |λ|, λ). Throws InvalidInput if it is not a partition.
Partition pad(const Partition& lambda, int n);

/// Partitions of n, largest first in reverse lexicographic order.
const std::vector<Partition>& partitions_of(int n);
/// All partitions of size 0..n in graded order.
std::vector<Partition> partitions_up_to(int n);

Partition conjugate(const Partition& lambda);
Integer z_of(const Partition& lambda);
/// ν/λ is a horizontal strip: λ ⊆ ν and ν_{i+1} ≤ λ_i.
bool is_horizontal_strip(const Partition& outer, const Partition& inner);

/// Sequence of positive integers; order matters.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  Partition sorted() const { return Partition::from_unsorted(parts_); }
  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

std::vector<Composition> compositions_of(int n);

/// Multiset of positive integer letters.
class Multiset {
 public:
  Multiset() = default;
  explicit Multiset(const std::vector<int>& letters);
  Multiset(std::initializer_list<int> letters) : Multiset(std::vector<int>(letters)) {}
  /// {1^{c₁}, 2^{c₂}, ...}; zero entries allowed.
  static Multiset from_counts(const std::vector<int>& counts);

  int count(int letter) const;
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  /// Every multiplicity is one.
  bool is_set() const;
  /// Letters with repetition, ascending.
  std::vector<int> letters() const;
  const std::map<int, int>& entries() const { return entries_; }

  Multiset operator+(const Multiset& other) const;
  std::string to_string() const;

  friend bool operator==(const Multiset&, const Multiset&) = default;

 private:
  std::map<int, int> entries_;
  int size_ = 0;
};

/// Label of a multiset-valued tableau cell: at most one barred letter plus a
/// multiset of unbarred letters. Barred letters precede unbarred ones.
class CellLabel {
 public:
  /// Throws InvalidInput for the empty label.
  CellLabel(std::optional<int> barred, Multiset unbarred);
  static CellLabel parse(std::string_view text);

  const std::optional<int>& barred() const { return barred_; }
  const Multiset& unbarred() const { return unbarred_; }
  int total_size() const { return unbarred_.size() + (barred_ ? 1 : 0); }
  bool pure_barred() const { return barred_.has_value() && unbarred_.empty(); }

  /// Letters in decreasing order, encoded so that integer comparison agrees
  /// with 1̄ < 2̄ < ... < 1 < 2 < ...
  const std::vector<int>& key() const { return key_; }

  /// ASCII form: barred letter suffixed with '~', e.g. `2~|11`, `1~`, `12`.
  std::string to_string() const;

  friend bool operator==(const CellLabel& a, const CellLabel& b) { return a.key_ == b.key_; }

 private:
  std::optional<int> barred_;
  Multiset unbarred_;
  std::vector<int> key_;
};

bool reverse_lex_less(const CellLabel& m, const CellLabel& n);
/// Unbarred multisets; the empty multiset is below everything else.
bool reverse_lex_less(const Multiset& m, const Multiset& n);

struct ReverseLexLess {
  bool operator()(const CellLabel& a, const CellLabel& b) const { return reverse_lex_less(a, b); }
  bool operator()(const Multiset& a, const Multiset& b) const { return reverse_lex_less(a, b); }
};

using Word = std::vector<int>;
bool is_lattice(std::span<const int> word);

/// Multiset of non-empty multisets. Blocks are kept in reverse-lex
/// decreasing order, which makes equality a multiset comparison.
class MultisetPartition {
 public:
  MultisetPartition() = default;
  explicit MultisetPartition(std::vector<Multiset> blocks);

  const std::vector<Multiset>& blocks() const { return blocks_; }
  int length() const { return static_cast<int>(blocks_.size()); }
  Multiset content() const;
  /// Distinct blocks in reverse-lex increasing order with their multiplicities.
  std::vector<std::pair<Multiset, int>> distinct_blocks() const;
  std::string to_string() const;

  friend bool operator==(const MultisetPartition&, const MultisetPartition&) = default;

 private:
  std::vector<Multiset> blocks_;
};

/// m̃(π): the block multiplicities as a partition of ℓ(π).
Partition m_tilde(const MultisetPartition& pi);
/// α(π): block multiplicities listed in reverse-lex block order.
Composition alpha_of(const MultisetPartition& pi);

/// Visits each multiset partition of `content` once, in a fixed order.
void for_each_multiset_partition(const Multiset& content, bool set_blocks_only,
                                 const std::function<void(const MultisetPartition&)>& visit);
std::vector<MultisetPartition> enumerate_multiset_partitions(const Multiset& content,
                                                             bool set_blocks_only);

namespace detail {

/// Core multiset-partition generator over letters 0..L-1 given by their
/// multiplicities. Blocks are multiplicity vectors and are produced in
/// non-increasing reverse-lex order. `accept` must accept every singleton.
using BlockVector = std::vector<int>;
void for_each_block_partition(const std::vector<int>& multiplicities,
                              const std::function<bool(const BlockVector&)>& accept,
                              const std::function<void(const std::vector<BlockVector>&)>& visit);

}  // namespace detail

}  // namespace charbasis

template <>
struct std::hash<charbasis::Partition> {
  std::size_t operator()(const charbasis::Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.parts()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

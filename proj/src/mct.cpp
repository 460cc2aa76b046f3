#include "charbasis/mct.hpp"

#include <algorithm>

namespace charbasis {

FillProfile parse_profile(std::string_view name) {
  if (name == "multiset") return FillProfile::kMultiset;
  if (name == "set") return FillProfile::kSet;
  if (name == "set-no-singleton-row1" || name == "set_no_singleton_row1") return FillProfile::kSetNoSingletonRow1;
  if (name == "pair") return FillProfile::kPair;
  throw InvalidInput("unknown profile '" + std::string(name) + "'");
}

std::string_view to_string(FillProfile profile) {
  switch (profile) {
    case FillProfile::kMultiset: return "multiset";
    case FillProfile::kSet: return "set";
    case FillProfile::kSetNoSingletonRow1: return "set-no-singleton-row1";
    case FillProfile::kPair: return "pair";
  }
  return "?";
}

MultisetTableau::MultisetTableau(Partition gamma, std::vector<CellLabel> first_row,
                                 std::vector<std::vector<CellLabel>> upper_rows)
    : gamma_(std::move(gamma)), first_row_(std::move(first_row)), upper_(std::move(upper_rows)) {
  if (static_cast<int>(upper_.size()) != gamma_.length()) throw InvalidInput("upper rows do not match gamma");
  for (int i = 0; i < gamma_.length(); ++i)
    if (static_cast<int>(upper_[i].size()) != gamma_[i]) throw InvalidInput("upper rows do not match gamma");
}

SkewShape MultisetTableau::shape() const {
  std::vector<int> outer;
  if (r() > 0) outer.push_back(r());
  outer.insert(outer.end(), gamma_.vec().begin(), gamma_.vec().end());
  return SkewShape(Partition(outer), gamma_.empty() ? Partition() : Partition{gamma_.first()});
}

const CellLabel* MultisetTableau::at(int row, int col) const {
  if (row < 0 || col < 0) return nullptr;
  if (row == 0) {
    int k = col - gamma_.first();
    return k >= 0 && k < static_cast<int>(first_row_.size()) ? &first_row_[k] : nullptr;
  }
  if (row > static_cast<int>(upper_.size())) return nullptr;
  const auto& cells = upper_[row - 1];
  return col < static_cast<int>(cells.size()) ? &cells[col] : nullptr;
}

namespace {

void bump(std::vector<int>& counts, int letter, int by) {
  if (static_cast<int>(counts.size()) < letter) counts.resize(letter, 0);
  counts[letter - 1] += by;
}

template <class F>
void for_each_label(const MultisetTableau& t, F&& f) {
  for (const auto& l : t.first_row()) f(l);
  for (const auto& row : t.upper_rows())
    for (const auto& l : row) f(l);
}

bool weakly_increasing(const std::vector<CellLabel>& row) {
  for (std::size_t i = 1; i < row.size(); ++i)
    if (reverse_lex_less(row[i], row[i - 1])) return false;
  return true;
}

}  // namespace

std::vector<int> MultisetTableau::barred_content() const {
  std::vector<int> counts;
  for_each_label(*this, [&](const CellLabel& l) {
    if (l.barred()) bump(counts, *l.barred(), 1);
  });
  return counts;
}

std::vector<int> MultisetTableau::unbarred_content() const {
  std::vector<int> counts;
  for_each_label(*this, [&](const CellLabel& l) {
    for (auto [letter, c] : l.unbarred().entries()) bump(counts, letter, c);
  });
  return counts;
}

bool MultisetTableau::well_formed() const {
  for (const auto& l : first_row_)
    if (l.pure_barred()) return false;
  if (!weakly_increasing(first_row_)) return false;
  for (std::size_t i = 0; i < upper_.size(); ++i) {
    if (!weakly_increasing(upper_[i])) return false;
    if (i == 0) continue;
    for (std::size_t c = 0; c < upper_[i].size(); ++c)
      if (!reverse_lex_less(upper_[i - 1][c], upper_[i][c])) return false;
  }
  return true;
}

std::string MultisetTableau::render() const {
  auto line = [](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? " [" : "[") + cells[i] + "]";
    return s + "\n";
  };
  std::string out;
  for (auto it = upper_.rbegin(); it != upper_.rend(); ++it) {
    std::vector<std::string> cells;
    for (const auto& l : *it) cells.push_back(l.to_string());
    out += line(cells);
  }
  if (r() > 0) {
    std::vector<std::string> cells(gamma_.first(), ".");
    for (const auto& l : first_row_) cells.push_back(l.to_string());
    out += line(cells);
  }
  return out;
}

bool canonical_less(const MultisetTableau& a, const MultisetTableau& b) {
  if (a.r() != b.r()) return a.r() < b.r();
  if (a.gamma() != b.gamma()) return a.gamma() < b.gamma();
  auto row_less = [](const std::vector<CellLabel>& x, const std::vector<CellLabel>& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), ReverseLexLess{});
  };
  if (row_less(a.first_row(), b.first_row())) return true;
  if (row_less(b.first_row(), a.first_row())) return false;
  return std::lexicographical_compare(a.upper_rows().begin(), a.upper_rows().end(), b.upper_rows().begin(),
                                      b.upper_rows().end(), row_less);
}

Word barred_group_word(const MultisetTableau& t) {
  std::map<Multiset, Word, ReverseLexLess> groups;
  auto scan = [&](const std::vector<CellLabel>& row) {
    for (auto it = row.rbegin(); it != row.rend(); ++it)
      if (it->barred()) groups[it->unbarred()].push_back(*it->barred());
  };
  scan(t.first_row());
  for (const auto& row : t.upper_rows()) scan(row);
  Word w;
  for (const auto& [s, part] : groups) w.insert(w.end(), part.begin(), part.end());
  return w;
}

bool is_lattice_tableau(const MultisetTableau& t) { return is_lattice(barred_group_word(t)); }

namespace {

struct LabelInfo {
  CellLabel label;
  int count;
  bool row1_ok;
  int barred = 0;  // 0 when the label has no barred letter
  int group = 0;   // rank of the unbarred part among the distinct ones
};

// A placement in terms of indices into the label table.
struct Filling {
  std::vector<int> first_row;
  std::vector<std::vector<int>> upper;
  std::vector<int> shape;
};

using LabelCounts = std::map<CellLabel, int, ReverseLexLess>;

std::vector<LabelInfo> make_table(const LabelCounts& labels, const std::function<bool(const CellLabel&)>& row1_ok) {
  std::map<Multiset, int, ReverseLexLess> groups;
  for (const auto& [l, c] : labels) groups.emplace(l.unbarred(), 0);
  int g = 0;
  for (auto& [s, rank] : groups) rank = g++;
  std::vector<LabelInfo> table;
  for (const auto& [l, c] : labels) {
    LabelInfo info{l, c, !l.pure_barred() && row1_ok(l)};
    info.barred = l.barred().value_or(0);
    info.group = groups.at(l.unbarred());
    table.push_back(std::move(info));
  }
  return table;
}

// Places labels (in increasing order) into the first row and into the upper
// straight shape as successive horizontal strips.
class Placer {
 public:
  Placer(const std::vector<LabelInfo>& table, const std::optional<Partition>& gamma, bool lattice_only,
         const std::function<void(const Filling&)>& emit)
      : table_(table), gamma_(gamma), lattice_only_(lattice_only), emit_(emit) {
    for (const auto& l : table_) remaining_ += l.count;
    for (const auto& l : table_) groups_ = std::max(groups_, l.group + 1);
  }

  void run() { label(0); }

 private:
  void label(std::size_t i) {
    if (i == table_.size()) {
      finish();
      return;
    }
    const LabelInfo& info = table_[i];
    int max_row1 = info.row1_ok ? info.count : 0;
    remaining_ -= info.count;
    for (int k = 0; k <= max_row1; ++k) {
      int up = info.count - k;
      if (gamma_ && upper_size() + up + remaining_ < gamma_->size()) continue;
      if (gamma_ && upper_size() + up > gamma_->size()) continue;
      f_.first_row.insert(f_.first_row.end(), k, static_cast<int>(i));
      const std::vector<int> before = f_.shape;
      add_strip(i, up, 0, before);
      f_.first_row.resize(f_.first_row.size() - k);
    }
    remaining_ += info.count;
  }

  int upper_size() const {
    int s = 0;
    for (int v : f_.shape) s += v;
    return s;
  }

  // Distributes `left` copies of label i over rows row.. so that the cells
  // added to `before` form a horizontal strip.
  void add_strip(std::size_t i, int left, std::size_t row, const std::vector<int>& before) {
    if (left == 0) {
      label(i + 1);
      return;
    }
    if (row > before.size()) return;
    int current = row < before.size() ? before[row] : 0;
    int bound = row == 0 ? current + left : before[row - 1];
    if (gamma_) bound = std::min(bound, (*gamma_)[row]);
    for (int take = std::min(bound - current, left); take >= 0; --take) {
      if (take > 0) {
        if (row == f_.shape.size()) {
          f_.shape.push_back(0);
          f_.upper.emplace_back();
        }
        f_.shape[row] += take;
        f_.upper[row].insert(f_.upper[row].end(), take, static_cast<int>(i));
      }
      add_strip(i, left - take, row + 1, before);
      if (take > 0) {
        f_.shape[row] -= take;
        f_.upper[row].resize(f_.upper[row].size() - take);
        if (f_.shape[row] == 0) {
          f_.shape.pop_back();
          f_.upper.pop_back();
        }
      }
    }
  }

  void finish() {
    if (gamma_ && gamma_->vec() != f_.shape) return;
    if (lattice_only_ && !lattice()) return;
    emit_(f_);
  }

  bool lattice() const {
    std::vector<Word> groups(groups_);
    auto scan = [&](const std::vector<int>& row) {
      for (auto it = row.rbegin(); it != row.rend(); ++it)
        if (table_[*it].barred) groups[table_[*it].group].push_back(table_[*it].barred);
    };
    scan(f_.first_row);
    for (const auto& row : f_.upper) scan(row);
    Word w;
    for (const auto& g : groups) w.insert(w.end(), g.begin(), g.end());
    return is_lattice(w);
  }

  const std::vector<LabelInfo>& table_;
  const std::optional<Partition>& gamma_;
  bool lattice_only_;
  const std::function<void(const Filling&)>& emit_;
  int remaining_ = 0;
  int groups_ = 0;
  Filling f_;
};

MultisetTableau to_tableau(const std::vector<LabelInfo>& table, const Filling& f) {
  std::vector<CellLabel> first;
  for (int i : f.first_row) first.push_back(table[i].label);
  std::vector<std::vector<CellLabel>> upper;
  for (const auto& row : f.upper) {
    upper.emplace_back();
    for (int i : row) upper.back().push_back(table[i].label);
  }
  return MultisetTableau(Partition(f.shape), std::move(first), std::move(upper));
}

bool profile_accepts(FillProfile profile, const std::vector<int>& unbarred) {
  int total = 0;
  for (int c : unbarred) {
    if (c > 1 && profile != FillProfile::kMultiset) return false;
    total += c;
  }
  return profile != FillProfile::kPair || total <= 1;
}

// Every label multiset for the content (barred λ, unbarred α) under `profile`.
void for_each_label_multiset(const Partition& lambda, const Composition& alpha, FillProfile profile,
                             const std::function<void(const LabelCounts&)>& visit) {
  const int nb = lambda.length();
  std::vector<int> mult(lambda.vec());
  mult.insert(mult.end(), alpha.parts().begin(), alpha.parts().end());
  auto accept = [&](const detail::BlockVector& b) {
    int barred = 0;
    for (int x = 0; x < nb; ++x) barred += b[x];
    if (barred > 1) return false;
    return profile_accepts(profile, std::vector<int>(b.begin() + nb, b.end()));
  };
  detail::for_each_block_partition(mult, accept, [&](const std::vector<detail::BlockVector>& blocks) {
    LabelCounts labels;
    for (const auto& b : blocks) {
      std::optional<int> barred;
      for (int x = 0; x < nb; ++x)
        if (b[x]) barred = x + 1;
      std::vector<int> counts(b.begin() + nb, b.end());
      ++labels[CellLabel(barred, Multiset::from_counts(counts))];
    }
    visit(labels);
  });
}

std::function<bool(const CellLabel&)> row1_rule(FillProfile profile) {
  if (profile == FillProfile::kSetNoSingletonRow1) return [](const CellLabel& l) { return l.total_size() > 1; };
  return [](const CellLabel&) { return true; };
}

void for_each_filling(const std::optional<Partition>& gamma, const Partition& lambda, const Composition& alpha,
                      FillProfile profile, bool lattice_only,
                      const std::function<void(const std::vector<LabelInfo>&, const Filling&)>& visit) {
  auto rule = row1_rule(profile);
  for_each_label_multiset(lambda, alpha, profile, [&](const LabelCounts& labels) {
    auto table = make_table(labels, rule);
    std::function<void(const Filling&)> emit = [&](const Filling& f) { visit(table, f); };
    Placer(table, gamma, lattice_only, emit).run();
  });
}

// Label multisets whose unbarred parts form π, with λ's barred letters either
// attached to a block or standing alone.
void for_each_prime_labels(const Partition& lambda, const MultisetPartition& pi,
                           const std::function<void(const LabelCounts&)>& visit) {
  const auto blocks = pi.distinct_blocks();
  const int nb = lambda.length();
  std::vector<int> left(lambda.vec());
  // attach[s][j]: copies of block s carrying barred letter j+1
  std::vector<std::vector<int>> attach(blocks.size(), std::vector<int>(nb, 0));

  std::function<void(std::size_t, int, int)> rec = [&](std::size_t s, int j, int free) {
    if (s == blocks.size()) {
      LabelCounts labels;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        int plain = blocks[b].second;
        for (int x = 0; x < nb; ++x) {
          if (attach[b][x]) labels[CellLabel(x + 1, blocks[b].first)] += attach[b][x];
          plain -= attach[b][x];
        }
        if (plain) labels[CellLabel(std::nullopt, blocks[b].first)] += plain;
      }
      for (int x = 0; x < nb; ++x)
        if (left[x]) labels[CellLabel(x + 1, Multiset())] += left[x];
      visit(labels);
      return;
    }
    if (j == nb) {
      std::size_t next = s + 1;
      rec(next, 0, next < blocks.size() ? blocks[next].second : 0);
      return;
    }
    for (int c = 0; c <= std::min(free, left[j]); ++c) {
      attach[s][j] = c;
      left[j] -= c;
      rec(s, j + 1, free - c);
      left[j] += c;
    }
    attach[s][j] = 0;
  };
  rec(0, 0, blocks.empty() ? 0 : blocks[0].second);
}

void for_each_prime_filling(const std::optional<Partition>& gamma, const Partition& lambda,
                            const MultisetPartition& pi, bool lattice_only,
                            const std::function<void(const std::vector<LabelInfo>&, const Filling&)>& visit) {
  auto rule = row1_rule(FillProfile::kMultiset);
  for_each_prime_labels(lambda, pi, [&](const LabelCounts& labels) {
    auto table = make_table(labels, rule);
    std::function<void(const Filling&)> emit = [&](const Filling& f) { visit(table, f); };
    Placer(table, gamma, lattice_only, emit).run();
  });
}

std::vector<MultisetTableau> sorted(std::vector<MultisetTableau> ts) {
  std::sort(ts.begin(), ts.end(), canonical_less);
  return ts;
}

}  // namespace

void for_each_mct(const std::optional<Partition>& gamma, const Partition& lambda, const Composition& alpha,
                  FillProfile profile, bool lattice_only,
                  const std::function<void(const MultisetTableau&)>& visit) {
  for_each_filling(gamma, lambda, alpha, profile, lattice_only,
                   [&](const std::vector<LabelInfo>& table, const Filling& f) { visit(to_tableau(table, f)); });
}

std::vector<MultisetTableau> enumerate_mct(const Partition& gamma, const Partition& lambda,
                                           const Composition& alpha, FillProfile profile, bool lattice_only) {
  std::vector<MultisetTableau> out;
  for_each_mct(gamma, lambda, alpha, profile, lattice_only, [&](const MultisetTableau& t) { out.push_back(t); });
  return sorted(std::move(out));
}

std::map<Partition, Integer> count_mct_by_shape(const Partition& lambda, const Composition& alpha,
                                                FillProfile profile, bool lattice_only) {
  std::map<Partition, Integer> out;
  for_each_filling(std::nullopt, lambda, alpha, profile, lattice_only,
                   [&](const std::vector<LabelInfo>&, const Filling& f) { out[Partition(f.shape)] += 1; });
  return out;
}

void for_each_mct_prime(const std::optional<Partition>& gamma, const Partition& lambda,
                        const MultisetPartition& pi, bool lattice_only,
                        const std::function<void(const MultisetTableau&)>& visit) {
  for_each_prime_filling(gamma, lambda, pi, lattice_only,
                         [&](const std::vector<LabelInfo>& table, const Filling& f) { visit(to_tableau(table, f)); });
}

std::vector<MultisetTableau> enumerate_mct_prime(const Partition& gamma, const Partition& lambda,
                                                 const MultisetPartition& pi, bool lattice_only) {
  std::vector<MultisetTableau> out;
  for_each_mct_prime(gamma, lambda, pi, lattice_only, [&](const MultisetTableau& t) { out.push_back(t); });
  return sorted(std::move(out));
}

std::map<Partition, Integer> count_mct_prime_by_shape(const Partition& lambda, const MultisetPartition& pi,
                                                      bool lattice_only) {
  std::map<Partition, Integer> out;
  for_each_prime_filling(std::nullopt, lambda, pi, lattice_only,
                         [&](const std::vector<LabelInfo>&, const Filling& f) { out[Partition(f.shape)] += 1; });
  return out;
}

}  // namespace charbasis

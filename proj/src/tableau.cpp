#include "charbasis/tableau.hpp"

#include <algorithm>
#include <numeric>

#include "charbasis/memo.hpp"

namespace charbasis {

SkewShape::SkewShape(Partition outer_shape, Partition inner_shape)
    : outer(std::move(outer_shape)), inner(std::move(inner_shape)) {
  if (!outer.contains(inner))
    throw InvalidInput("inner shape " + inner.to_string() + " does not fit in " + outer.to_string());
}

IntTableau::IntTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.rows()) throw InvalidInput("row count does not match shape");
  for (int i = 0; i < shape_.rows(); ++i)
    if (static_cast<int>(rows_[i].size()) != shape_.row_cells(i))
      throw InvalidInput("row length does not match shape");
}

IntTableau IntTableau::superstandard(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < shape.length(); ++i) rows.emplace_back(shape[i], i + 1);
  return IntTableau(SkewShape(shape), std::move(rows));
}

bool IntTableau::column_strict() const {
  for (int r = 0; r < shape_.rows(); ++r) {
    for (int c = shape_.inner[r]; c < shape_.outer[r]; ++c) {
      if (c + 1 < shape_.outer[r] && at(r, c) > at(r, c + 1)) return false;
      if (r > 0 && c >= shape_.inner[r - 1] && at(r - 1, c) >= at(r, c)) return false;
    }
  }
  return true;
}

std::vector<int> IntTableau::content() const {
  std::vector<int> counts;
  for (const auto& row : rows_)
    for (int v : row) {
      if (static_cast<int>(counts.size()) < v) counts.resize(v, 0);
      ++counts[v - 1];
    }
  return counts;
}

Word reading_word(const IntTableau& t) {
  Word w;
  for (const auto& row : t.rows()) w.insert(w.end(), row.rbegin(), row.rend());
  return w;
}

namespace {

// Absolute-column grid with 0 marking cells outside the skew shape.
using Grid = std::vector<std::vector<int>>;

Grid empty_grid(const SkewShape& shape) {
  Grid g;
  for (int r = 0; r < shape.rows(); ++r) g.emplace_back(shape.outer[r], 0);
  return g;
}

IntTableau from_grid(const SkewShape& shape, const Grid& g) {
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < shape.rows(); ++r)
    rows.emplace_back(g[r].begin() + shape.inner[r], g[r].begin() + shape.outer[r]);
  return IntTableau(shape, std::move(rows));
}

// Cells in reading order.
std::vector<std::pair<int, int>> reading_cells(const SkewShape& shape) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < shape.rows(); ++r)
    for (int c = shape.outer[r] - 1; c >= shape.inner[r]; --c) cells.emplace_back(r, c);
  return cells;
}

// Letter bounds for cell (r, c) given already-placed neighbours.
std::pair<int, int> cell_range(const SkewShape& shape, const Grid& g, int r, int c, int max_letter) {
  int lo = 1;
  int hi = max_letter;
  if (c + 1 < shape.outer[r]) hi = std::min(hi, g[r][c + 1]);
  if (r > 0 && c >= shape.inner[r - 1]) lo = std::max(lo, g[r - 1][c] + 1);
  return {lo, hi};
}

struct CstFiller {
  const SkewShape& shape;
  std::vector<int> remaining;
  const std::function<void(const IntTableau&)>& visit;
  std::vector<std::pair<int, int>> cells;
  Grid grid;

  void fill(std::size_t k) {
    if (k == cells.size()) {
      visit(from_grid(shape, grid));
      return;
    }
    auto [r, c] = cells[k];
    auto [lo, hi] = cell_range(shape, grid, r, c, static_cast<int>(remaining.size()));
    for (int v = lo; v <= hi; ++v) {
      if (remaining[v - 1] == 0) continue;
      --remaining[v - 1];
      grid[r][c] = v;
      fill(k + 1);
      ++remaining[v - 1];
    }
    grid[r][c] = 0;
  }
};

// Fills a skew shape in reading order so that `counts` extended by the
// reading word stays lattice and never exceeds `bound`.
struct LatticeFiller {
  const SkewShape& shape;
  std::vector<int>& counts;
  const std::vector<int>& bound;
  const std::function<void(const Grid&)>& done;
  std::vector<std::pair<int, int>> cells;
  Grid grid;

  void fill(std::size_t k) {
    if (k == cells.size()) {
      done(grid);
      return;
    }
    auto [r, c] = cells[k];
    auto [lo, hi] = cell_range(shape, grid, r, c, static_cast<int>(bound.size()));
    for (int v = lo; v <= hi; ++v) {
      if (counts[v - 1] >= bound[v - 1]) continue;
      if (v > 1 && counts[v - 1] + 1 > counts[v - 2]) continue;
      ++counts[v - 1];
      grid[r][c] = v;
      fill(k + 1);
      --counts[v - 1];
    }
    grid[r][c] = 0;
  }
};

void fill_lattice(const SkewShape& shape, std::vector<int>& counts, const std::vector<int>& bound,
                  const std::function<void(const Grid&)>& done) {
  LatticeFiller f{shape, counts, bound, done, reading_cells(shape), empty_grid(shape)};
  f.fill(0);
}

// All ρ with inner ⊆ ρ ⊆ bound and |ρ/inner| = k.
void for_each_extension(const Partition& inner, const Partition& bound, int k,
                        const std::function<void(const Partition&)>& visit) {
  std::vector<int> rho;
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (row == bound.length()) {
      if (left == 0) visit(Partition::from_unsorted(rho));
      return;
    }
    int hi = bound[row];
    if (row > 0) hi = std::min(hi, rho[row - 1]);
    for (int v = std::min(hi, inner[row] + left); v >= inner[row]; --v) {
      rho.push_back(v);
      rec(row + 1, left - (v - inner[row]));
      rho.pop_back();
    }
  };
  if (bound.contains(inner)) rec(0, k);
}

detail::Memo<std::pair<Partition, Partition>, Integer>& kostka_memo() {
  static detail::Memo<std::pair<Partition, Partition>, Integer> memo;
  return memo;
}

Integer kostka_rec(const Partition& lambda, const std::vector<int>& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  // K is symmetric in the order of μ, so the key uses the sorted weight.
  Partition key_mu = Partition::from_unsorted(mu);
  if (const Integer* hit = kostka_memo().find({lambda, key_mu})) return *hit;
  // the largest letter fills a horizontal strip of size μ_last
  std::vector<int> rest(key_mu.vec().begin(), key_mu.vec().end() - 1);
  int k = key_mu.vec().back();
  Integer total = 0;
  std::vector<int> rho;
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (row == lambda.length()) {
      if (left == 0) total += kostka_rec(Partition::from_unsorted(rho), rest);
      return;
    }
    int lo = lambda[row + 1];
    for (int v = lambda[row]; v >= lo; --v) {
      int removed = lambda[row] - v;
      if (removed > left) break;
      rho.push_back(v);
      rec(row + 1, left - removed);
      rho.pop_back();
    }
  };
  rec(0, k);
  return kostka_memo().insert({lambda, key_mu}, total);
}

}  // namespace

void for_each_cst(const SkewShape& shape, const std::vector<int>& content,
                  const std::function<void(const IntTableau&)>& visit) {
  if (std::accumulate(content.begin(), content.end(), 0) != shape.size()) return;
  if (std::any_of(content.begin(), content.end(), [](int c) { return c < 0; }))
    throw InvalidInput("negative content");
  CstFiller f{shape, content, visit, reading_cells(shape), empty_grid(shape)};
  f.fill(0);
}

std::vector<IntTableau> enumerate_cst(const SkewShape& shape, const std::vector<int>& content) {
  std::vector<IntTableau> out;
  for_each_cst(shape, content, [&](const IntTableau& t) { out.push_back(t); });
  return out;
}

Integer kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw InvalidInput("kostka: |" + lambda.to_string() + "| != |" + mu.to_string() + "|");
  return kostka_rec(lambda, mu.vec());
}

IntTableau jdt_rectify(const IntTableau& t, SlideOrder order) {
  const SkewShape& shape = t.shape();
  int nrows = shape.rows();
  Grid g = empty_grid(shape);
  for (int r = 0; r < nrows; ++r)
    for (int c = shape.inner[r]; c < shape.outer[r]; ++c) g[r][c] = t.at(r, c);
  std::vector<int> inner(nrows, 0), outer(nrows, 0);
  for (int r = 0; r < nrows; ++r) {
    inner[r] = shape.inner[r];
    outer[r] = shape.outer[r];
  }
  auto inner_at = [&](int r) { return r < nrows ? inner[r] : 0; };
  auto outer_at = [&](int r) { return r < nrows ? outer[r] : 0; };

  while (true) {
    int corner = -1;
    for (int r = 0; r < nrows; ++r) {
      if (inner[r] > 0 && inner_at(r + 1) < inner[r]) {
        corner = r;
        if (order == SlideOrder::kBottomFirst) break;
      }
    }
    if (corner < 0) break;
    int r = corner;
    int c = --inner[r];
    while (true) {
      bool right = c + 1 < outer[r];
      bool up = c < outer_at(r + 1);
      if (up && (!right || g[r + 1][c] <= g[r][c + 1])) {
        g[r][c] = g[r + 1][c];
        ++r;
      } else if (right) {
        g[r][c] = g[r][c + 1];
        ++c;
      } else {
        --outer[r];
        g[r][c] = 0;
        break;
      }
    }
  }
  std::vector<int> parts;
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < nrows && outer[r] > 0; ++r) {
    parts.push_back(outer[r]);
    rows.emplace_back(g[r].begin(), g[r].begin() + outer[r]);
  }
  return IntTableau(SkewShape(Partition(parts)), std::move(rows));
}

namespace {

detail::Memo<std::tuple<Partition, Partition, Partition>, std::map<Partition, Integer>>& lr_memo() {
  static detail::Memo<std::tuple<Partition, Partition, Partition>, std::map<Partition, Integer>> memo;
  return memo;
}

constexpr int kUnbounded = 1 << 28;

// Pairs (S, T) of shapes λ and μ whose joint reading word is lattice; calls
// `done` with the final letter counts.
void for_each_lattice_pair(const Partition& lambda, const Partition& mu, const std::vector<int>& bound,
                           const std::function<void(const std::vector<int>&)>& done) {
  std::vector<int> counts(bound.size(), 0);
  SkewShape s_shape(lambda);
  SkewShape t_shape(mu);
  fill_lattice(s_shape, counts, bound, [&](const Grid&) {
    fill_lattice(t_shape, counts, bound, [&](const Grid&) { done(counts); });
  });
}

}  // namespace

std::map<Partition, Integer> lr_expand(const Partition& lambda, const Partition& mu, const Partition* bound) {
  Partition key_bound = bound ? *bound : Partition{};
  std::tuple<Partition, Partition, Partition> key{lambda, mu, key_bound};
  return lr_memo().get(key, [&] {
    std::map<Partition, Integer> out;
    std::vector<int> b;
    if (bound) {
      b.assign(bound->vec().begin(), bound->vec().end());
    } else {
      b.assign(lambda.length() + mu.length(), kUnbounded);
    }
    if (b.empty()) {
      if (lambda.empty() && mu.empty()) out[Partition{}] = 1;
      return out;
    }
    for_each_lattice_pair(lambda, mu, b, [&](const std::vector<int>& counts) {
      out[Partition::from_unsorted(counts)] += 1;
    });
    return out;
  });
}

Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu, LrMethod method) {
  if (lambda.size() + mu.size() != nu.size()) return 0;
  if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
  if (method == LrMethod::kLatticePair) {
    auto expansion = lr_expand(lambda, mu, &nu);
    auto it = expansion.find(nu);
    return it == expansion.end() ? Integer(0) : it->second;
  }
  // skew tableaux of shape ν/μ rectifying to the superstandard tableau of shape λ
  IntTableau target = IntTableau::superstandard(lambda);
  Integer count = 0;
  for_each_cst(SkewShape(nu, mu), lambda.vec(), [&](const IntTableau& t) {
    if (jdt_rectify(t) == target) ++count;
  });
  return count;
}

Integer multi_lr(const std::vector<Partition>& taus, const Partition& target) {
  if (taus.empty()) return target.empty() ? 1 : 0;
  int total = 0;
  for (const auto& t : taus) total += t.size();
  if (total != target.size()) return 0;
  std::map<Partition, Integer> current;
  if (target.contains(taus[0])) current[taus[0]] = 1;
  for (std::size_t i = 1; i < taus.size(); ++i) {
    std::map<Partition, Integer> next;
    for (const auto& [zeta, c] : current)
      for (const auto& [nu, d] : lr_expand(zeta, taus[i], &target)) next[nu] += c * d;
    current = std::move(next);
  }
  auto it = current.find(target);
  return it == current.end() ? Integer(0) : it->second;
}

std::vector<Partition> TableauSequence::shapes() const {
  std::vector<Partition> out;
  for (const auto& t : tableaux) out.push_back(jdt_rectify(t).shape().outer);
  return out;
}

Word TableauSequence::word() const {
  Word w;
  for (const auto& t : tableaux) {
    auto part = reading_word(t);
    w.insert(w.end(), part.begin(), part.end());
  }
  return w;
}

void for_each_bset(const std::vector<Partition>& taus, const Partition& gamma, const Partition& lambda,
                   const std::function<void(const TableauSequence&)>& visit) {
  if (taus.empty()) throw InvalidInput("B-set needs at least one partition");
  int total = 0;
  for (const auto& t : taus) total += t.size();
  if (gamma.size() != lambda.size() || gamma.size() != total)
    throw InvalidInput("B-set requires |gamma| = |lambda| = sum of |tau|");
  const Partition& tau0 = taus[0];
  if (!gamma.contains(tau0) || !lambda.contains(tau0)) return;

  std::vector<int> bound(lambda.vec().begin(), lambda.vec().end());
  std::vector<int> counts(bound.size(), 0);
  for (int i = 0; i < tau0.length(); ++i) counts[i] = tau0[i];

  TableauSequence seq;
  seq.tableaux.push_back(IntTableau::superstandard(tau0));
  std::function<void(std::size_t, const Partition&)> step = [&](std::size_t i, const Partition& inner) {
    if (i == taus.size()) {
      if (inner == gamma) visit(seq);
      return;
    }
    for_each_extension(inner, gamma, taus[i].size(), [&](const Partition& outer) {
      if (i + 1 == taus.size() && outer != gamma) return;
      SkewShape shape(outer, inner);
      fill_lattice(shape, counts, bound, [&](const Grid& g) {
        IntTableau t = from_grid(shape, g);
        if (jdt_rectify(t).shape().outer != taus[i]) return;
        seq.tableaux.push_back(std::move(t));
        step(i + 1, outer);
        seq.tableaux.pop_back();
      });
    });
  };
  step(1, tau0);
}

std::vector<TableauSequence> enumerate_bset(const std::vector<Partition>& taus, const Partition& gamma,
                                            const Partition& lambda) {
  std::vector<TableauSequence> out;
  for_each_bset(taus, gamma, lambda, [&](const TableauSequence& s) { out.push_back(s); });
  return out;
}

Integer count_bset(const std::vector<Partition>& taus, const Partition& gamma, const Partition& lambda) {
  Integer n = 0;
  for_each_bset(taus, gamma, lambda, [&](const TableauSequence&) { ++n; });
  return n;
}

}  // namespace charbasis

#include "charbasis/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>

namespace charbasis {

namespace {

constexpr int kUnbarredBase = 1 << 20;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Parses "[a,b,c]" into integers (any sign, validated by the caller).
std::vector<int> parse_int_list(std::string_view text) {
  auto s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw InvalidInput("expected a bracketed list like [2,1], got '" + std::string(text) + "'");
  s = trim(s.substr(1, s.size() - 2));
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    auto item = trim(s.substr(pos, comma == std::string_view::npos ? s.npos : comma - pos));
    if (item.empty()) throw InvalidInput("empty entry in list '" + std::string(text) + "'");
    int value = 0;
    for (char c : item) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw InvalidInput("non-integer entry in list '" + std::string(text) + "'");
      value = value * 10 + (c - '0');
      if (value > 1000000) throw InvalidInput("entry too large in '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

void gen_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(trim(text));
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw InvalidInput("not a rational number: '" + s + "'");
  if (q.get_den() == 0) throw InvalidInput("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int v) { return v < 0; }))
    throw InvalidInput("negative part");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  auto parts = parse_int_list(text);
  try {
    return Partition(std::move(parts));
  } catch (const InvalidInput&) {
    throw InvalidInput("'" + std::string(trim(text)) + "' is not a partition");
  }
}

Partition Partition::tail() const {
  if (parts_.empty()) return {};
  return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

Partition Partition::prepend(int a) const {
  std::vector<int> v;
  v.reserve(parts_.size() + 1);
  v.push_back(a);
  v.insert(v.end(), parts_.begin(), parts_.end());
  return Partition(std::move(v));
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  // reverse lexicographic: the lexicographically larger partition comes first
  return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
                                                a.parts_.end());
}

Partition pad(const Partition& lambda, int n) {
  int first = n - lambda.size();
  if (first < lambda.first())
    throw InvalidInput("n=" + std::to_string(n) + " too small to pad " + lambda.to_string());
  if (first == 0) return lambda;
  return lambda.prepend(first);
}

const std::vector<Partition>& partitions_of(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  if (n < 0) throw InvalidInput("negative size");
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    const auto& ps = partitions_of(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out;
  for (int i = 1; i <= lambda.first(); ++i) {
    int c = 0;
    for (int p : lambda.parts())
      if (p >= i) ++c;
    out.push_back(c);
  }
  return Partition(std::move(out));
}

Integer z_of(const Partition& lambda) {
  Integer z = 1;
  for (int i = 1; i <= lambda.first(); ++i) {
    int m = lambda.multiplicity(i);
    for (int k = 1; k <= m; ++k) z *= i * k;
  }
  return z;
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner)) return false;
  for (int i = 0; i + 1 < outer.length(); ++i)
    if (outer[i + 1] > inner[i]) return false;
  return true;
}

// -------------------------------------------------------------- Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw InvalidInput("composition parts must be positive");
}

Composition Composition::parse(std::string_view text) {
  auto parts = parse_int_list(text);
  try {
    return Composition(std::move(parts));
  } catch (const InvalidInput&) {
    throw InvalidInput("'" + std::string(trim(text)) + "' is not a composition");
  }
}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Composition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n == 0) return {Composition{}};
  // bit i of mask set = cut after position i+1
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(std::move(parts));
  }
  return out;
}

// ----------------------------------------------------------------- Multiset

Multiset::Multiset(const std::vector<int>& letters) {
  for (int l : letters) {
    if (l <= 0) throw InvalidInput("multiset letters must be positive");
    ++entries_[l];
    ++size_;
  }
}

Multiset Multiset::from_counts(const std::vector<int>& counts) {
  Multiset m;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 0) throw InvalidInput("negative multiplicity");
    if (counts[i] > 0) {
      m.entries_[static_cast<int>(i) + 1] = counts[i];
      m.size_ += counts[i];
    }
  }
  return m;
}

int Multiset::count(int letter) const {
  auto it = entries_.find(letter);
  return it == entries_.end() ? 0 : it->second;
}

bool Multiset::is_set() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second == 1; });
}

std::vector<int> Multiset::letters() const {
  std::vector<int> out;
  out.reserve(size_);
  for (auto [l, c] : entries_) out.insert(out.end(), c, l);
  return out;
}

Multiset Multiset::operator+(const Multiset& other) const {
  Multiset m = *this;
  for (auto [l, c] : other.entries_) m.entries_[l] += c;
  m.size_ += other.size_;
  return m;
}

std::string Multiset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int l : letters()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(l);
  }
  return s + "}";
}

// ---------------------------------------------------------------- CellLabel

CellLabel::CellLabel(std::optional<int> barred, Multiset unbarred)
    : barred_(barred), unbarred_(std::move(unbarred)) {
  if (barred_ && *barred_ <= 0) throw InvalidInput("barred letter must be positive");
  if (!barred_ && unbarred_.empty()) throw InvalidInput("cell labels are non-empty");
  auto letters = unbarred_.letters();
  key_.reserve(letters.size() + 1);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) key_.push_back(kUnbarredBase + *it);
  if (barred_) key_.push_back(*barred_);
}

CellLabel CellLabel::parse(std::string_view text) {
  auto s = trim(text);
  std::optional<int> barred;
  std::vector<int> unbarred;
  auto bar = s.find('~');
  std::string_view rest = s;
  if (bar != std::string_view::npos) {
    auto num = s.substr(0, bar);
    if (num.empty()) throw InvalidInput("missing barred letter in '" + std::string(s) + "'");
    int v = 0;
    for (char c : num) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidInput("bad label '" + std::string(s) + "'");
      v = v * 10 + (c - '0');
    }
    barred = v;
    rest = s.substr(bar + 1);
    if (!rest.empty() && rest.front() == '|') rest.remove_prefix(1);
  }
  for (char c : rest) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidInput("bad label '" + std::string(s) + "'");
    unbarred.push_back(c - '0');
  }
  return CellLabel(barred, Multiset(unbarred));
}

std::string CellLabel::to_string() const {
  std::string s;
  if (barred_) s += std::to_string(*barred_) + "~";
  if (barred_ && !unbarred_.empty()) s += '|';
  for (int l : unbarred_.letters()) s += std::to_string(l);
  return s;
}

bool reverse_lex_less(const CellLabel& m, const CellLabel& n) {
  return std::lexicographical_compare(m.key().begin(), m.key().end(), n.key().begin(), n.key().end());
}

bool reverse_lex_less(const Multiset& m, const Multiset& n) {
  auto a = m.letters();
  auto b = n.letters();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

bool is_lattice(std::span<const int> word) {
  std::vector<int> counts;
  for (int l : word) {
    if (l <= 0) return false;
    if (static_cast<int>(counts.size()) < l + 1) counts.resize(l + 1, 0);
    ++counts[l];
    if (l > 1 && counts[l] > counts[l - 1]) return false;
  }
  return true;
}

// -------------------------------------------------------- MultisetPartition

MultisetPartition::MultisetPartition(std::vector<Multiset> blocks) : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_)
    if (b.empty()) throw InvalidInput("multiset partition blocks must be non-empty");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Multiset& a, const Multiset& b) { return reverse_lex_less(b, a); });
}

Multiset MultisetPartition::content() const {
  Multiset m;
  for (const auto& b : blocks_) m = m + b;
  return m;
}

std::vector<std::pair<Multiset, int>> MultisetPartition::distinct_blocks() const {
  std::vector<std::pair<Multiset, int>> out;
  for (auto it = blocks_.rbegin(); it != blocks_.rend(); ++it) {
    if (!out.empty() && out.back().first == *it)
      ++out.back().second;
    else
      out.emplace_back(*it, 1);
  }
  return out;
}

std::string MultisetPartition::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += ',';
    s += blocks_[i].to_string();
  }
  return s + "}";
}

Partition m_tilde(const MultisetPartition& pi) {
  std::vector<int> mult;
  for (const auto& [block, c] : pi.distinct_blocks()) mult.push_back(c);
  return Partition::from_unsorted(std::move(mult));
}

Composition alpha_of(const MultisetPartition& pi) {
  std::vector<int> mult;
  for (const auto& [block, c] : pi.distinct_blocks()) mult.push_back(c);
  return Composition(std::move(mult));
}

namespace detail {

namespace {

struct BlockSearch {
  const std::function<bool(const BlockVector&)>& accept;
  const std::function<void(const std::vector<BlockVector>&)>& visit;
  std::vector<int> remaining;
  std::vector<BlockVector> blocks;

  void run(const BlockVector* bound) {
    int top = static_cast<int>(remaining.size()) - 1;
    while (top >= 0 && remaining[top] == 0) --top;
    if (top < 0) {
      visit(blocks);
      return;
    }
    // A block containing the top letter is above every block without it, so
    // the bound only constrains us if it has nothing above `top` either.
    bool tight = bound != nullptr;
    if (bound)
      for (std::size_t x = top + 1; x < bound->size(); ++x)
        if ((*bound)[x] > 0) tight = false;
    BlockVector block(remaining.size(), 0);
    choose(top, top, tight, bound, block);
  }

  // Choose the multiplicity of `letter` in the block, from the top letter down.
  void choose(int top, int letter, bool tight, const BlockVector* bound, BlockVector& block) {
    if (letter < 0) {
      if (!accept(block)) return;
      for (std::size_t x = 0; x < block.size(); ++x) remaining[x] -= block[x];
      blocks.push_back(block);
      const BlockVector chosen = block;
      run(&chosen);
      blocks.pop_back();
      for (std::size_t x = 0; x < block.size(); ++x) remaining[x] += block[x];
      return;
    }
    int hi = remaining[letter];
    if (tight) hi = std::min(hi, (*bound)[letter]);
    int lo = letter == top ? 1 : 0;
    for (int c = hi; c >= lo; --c) {
      block[letter] = c;
      bool still_tight = tight && c == (*bound)[letter];
      choose(top, letter - 1, still_tight, bound, block);
    }
    block[letter] = 0;
  }
};

}  // namespace

void for_each_block_partition(const std::vector<int>& multiplicities,
                              const std::function<bool(const BlockVector&)>& accept,
                              const std::function<void(const std::vector<BlockVector>&)>& visit) {
  BlockSearch search{accept, visit, multiplicities, {}};
  search.run(nullptr);
}

}  // namespace detail

void for_each_multiset_partition(const Multiset& content, bool set_blocks_only,
                                 const std::function<void(const MultisetPartition&)>& visit) {
  std::vector<int> letters;
  std::vector<int> mult;
  for (auto [l, c] : content.entries()) {
    letters.push_back(l);
    mult.push_back(c);
  }
  auto accept = [&](const detail::BlockVector& b) {
    if (!set_blocks_only) return true;
    return std::all_of(b.begin(), b.end(), [](int c) { return c <= 1; });
  };
  detail::for_each_block_partition(mult, accept, [&](const std::vector<detail::BlockVector>& blocks) {
    std::vector<Multiset> ms;
    ms.reserve(blocks.size());
    for (const auto& b : blocks) {
      std::vector<int> ls;
      for (std::size_t x = 0; x < b.size(); ++x) ls.insert(ls.end(), b[x], letters[x]);
      ms.emplace_back(ls);
    }
    visit(MultisetPartition(std::move(ms)));
  });
}

std::vector<MultisetPartition> enumerate_multiset_partitions(const Multiset& content, bool set_blocks_only) {
  std::vector<MultisetPartition> out;
  for_each_multiset_partition(content, set_blocks_only, [&](const MultisetPartition& p) { out.push_back(p); });
  return out;
}

}  // namespace charbasis

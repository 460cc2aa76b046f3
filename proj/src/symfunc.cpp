#include "charbasis/symfunc.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "charbasis/memo.hpp"
#include "charbasis/stable_bases.hpp"
#include "charbasis/tableau.hpp"

namespace charbasis {

std::string_view to_string(Basis b) {
  switch (b) {
    case Basis::kH: return "h";
    case Basis::kP: return "p";
    case Basis::kS: return "s";
    case Basis::kHT: return "ht";
    case Basis::kST: return "st";
  }
  return "?";
}

Basis parse_basis(std::string_view name) {
  if (name == "h") return Basis::kH;
  if (name == "p") return Basis::kP;
  if (name == "s") return Basis::kS;
  if (name == "ht") return Basis::kHT;
  if (name == "st") return Basis::kST;
  throw InvalidInput("unknown basis '" + std::string(name) + "'");
}

SymExpr::SymExpr(Basis basis, Terms terms) : basis_(basis), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
}

SymExpr SymExpr::atom(Basis basis, Partition index, const Rational& coeff) {
  return SymExpr(basis, Terms{{std::move(index), coeff}});
}

SymExpr SymExpr::constant(const Rational& c, Basis basis) { return atom(basis, Partition(), c); }

Rational SymExpr::coeff(const Partition& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

int SymExpr::degree() const {
  int d = 0;
  for (const auto& [p, c] : terms_) d = std::max(d, p.size());
  return d;
}

bool SymExpr::homogeneous() const {
  return terms_.empty() || terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

void SymExpr::add_term(const Partition& index, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(index, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SymExpr& SymExpr::operator+=(const SymExpr& other) {
  if (other.basis_ != basis_)
    throw InvalidInput("cannot add " + std::string(charbasis::to_string(basis_)) + " and " +
                       std::string(charbasis::to_string(other.basis_)) + " expressions");
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

SymExpr operator*(SymExpr a, const Rational& c) {
  if (c == 0) return SymExpr(a.basis_);
  for (auto& [p, v] : a.terms_) v *= c;
  return a;
}

std::string SymExpr::to_string() const {
  std::string out;
  for (const auto& [p, c] : terms_)
    out += std::string(charbasis::to_string(basis_)) + p.to_string() + " " + charbasis::to_string(c) + "\n";
  return out;
}

nlohmann::json to_json(const SymExpr& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [p, c] : f.terms()) terms.push_back({{"partition", p.vec()}, {"coeff", to_string(c)}});
  return {{"basis", to_string(f.basis())}, {"terms", terms}};
}

SymExpr symexpr_from_json(const nlohmann::json& j) {
  try {
    SymExpr f(parse_basis(j.at("basis").get<std::string>()));
    for (const auto& t : j.at("terms"))
      f.add_term(Partition(t.at("partition").get<std::vector<int>>()), parse_rational(t.at("coeff").get<std::string>()));
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed expression JSON: ") + e.what());
  }
}

SymExpr add(const SymExpr& f, const SymExpr& g) { return f + g; }

SymExpr scale(const Rational& c, const SymExpr& f) { return f * c; }

namespace {

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.vec();
  parts.insert(parts.end(), b.vec().begin(), b.vec().end());
  return Partition::from_unsorted(std::move(parts));
}

// Product in a basis where basis elements multiply by merging indices.
SymExpr merge_product(const SymExpr& f, const SymExpr& g) {
  SymExpr out(f.basis());
  for (const auto& [a, c] : f.terms())
    for (const auto& [b, d] : g.terms()) out.add_term(merge(a, b), c * d);
  return out;
}

using Convert = SymExpr (*)(const Partition&);

SymExpr apply(const SymExpr& f, Basis to, Convert convert) {
  SymExpr out(to);
  for (const auto& [p, c] : f.terms()) {
    const SymExpr image = convert(p);
    for (const auto& [q, d] : image.terms()) out.add_term(q, c * d);
  }
  return out;
}

template <class Compute>
SymExpr memoized(detail::Memo<Partition, SymExpr>& memo, const Partition& key, Compute&& compute) {
  return memo.get(key, std::forward<Compute>(compute));
}

// Jacobi-Trudi: s_λ = det(h_{λ_i - i + j}), expanded over column subsets.
SymExpr s_in_h(const Partition& lambda) {
  static detail::Memo<Partition, SymExpr> memo;
  return memoized(memo, lambda, [&] {
    const int l = lambda.length();
    std::map<unsigned, SymExpr> layer{{0u, SymExpr::constant(1)}};
    for (int i = 0; i < l; ++i) {
      std::map<unsigned, SymExpr> next;
      for (const auto& [mask, poly] : layer) {
        for (int j = 0; j < l; ++j) {
          if (mask & (1u << j)) continue;
          int k = lambda[i] - i + j;
          if (k < 0) continue;
          int sign = std::popcount(mask >> (j + 1)) % 2 ? -1 : 1;
          SymExpr term = k == 0 ? poly : merge_product(poly, SymExpr::atom(Basis::kH, Partition{k}));
          auto [it, fresh] = next.try_emplace(mask | (1u << j), Basis::kH);
          it->second += term * Rational(sign);
        }
      }
      layer = std::move(next);
    }
    return layer.empty() ? SymExpr(Basis::kH) : layer.begin()->second;
  });
}

SymExpr h_in_s(const Partition& mu) {
  static detail::Memo<Partition, SymExpr> memo;
  return memoized(memo, mu, [&] {
    SymExpr out(Basis::kS);
    for (const auto& lambda : partitions_of(mu.size())) out.add_term(lambda, Rational(kostka(lambda, mu)));
    return out;
  });
}

SymExpr s_in_p(const Partition& lambda) {
  static detail::Memo<Partition, SymExpr> memo;
  return memoized(memo, lambda, [&] {
    SymExpr out(Basis::kP);
    for (const auto& mu : partitions_of(lambda.size()))
      out.add_term(mu, Rational(mn_character(lambda, mu)) / Rational(z_of(mu)));
    return out;
  });
}

SymExpr p_in_s(const Partition& mu) {
  static detail::Memo<Partition, SymExpr> memo;
  return memoized(memo, mu, [&] {
    SymExpr out(Basis::kS);
    for (const auto& lambda : partitions_of(mu.size())) out.add_term(lambda, Rational(mn_character(lambda, mu)));
    return out;
  });
}

SymExpr h_in_p(const Partition& mu) {
  static detail::Memo<Partition, SymExpr> memo;
  return memoized(memo, mu, [&] {
    SymExpr out = SymExpr::constant(1, Basis::kP);
    for (int k : mu.parts()) {
      SymExpr hk(Basis::kP);
      for (const auto& nu : partitions_of(k)) hk.add_term(nu, Rational(1) / Rational(z_of(nu)));
      out = merge_product(out, hk);
    }
    return out;
  });
}

SymExpr p_in_h(const Partition& mu) {
  static detail::Memo<Partition, SymExpr> memo;
  return memoized(memo, mu, [&] { return apply(p_in_s(mu), Basis::kH, s_in_h); });
}

SymExpr to_h(const SymExpr& f) {
  switch (f.basis()) {
    case Basis::kH: return f;
    case Basis::kP: return apply(f, Basis::kH, p_in_h);
    case Basis::kS: return apply(f, Basis::kH, s_in_h);
    case Basis::kHT: return apply(f, Basis::kH, ht_in_h);
    case Basis::kST: return apply(f, Basis::kH, st_in_h);
  }
  return f;
}

SymExpr from_h(const SymExpr& f, Basis to) {
  switch (to) {
    case Basis::kH: return f;
    case Basis::kP: return apply(f, Basis::kP, h_in_p);
    case Basis::kS: return apply(f, Basis::kS, h_in_s);
    case Basis::kHT: return apply(f, Basis::kHT, h_in_ht);
    case Basis::kST: return apply(f, Basis::kST, h_in_st);
  }
  return f;
}

// p_k evaluated at Ξ_μ for k = 0..max.
std::vector<Integer> power_sums_at_xi(const Partition& mu, int max) {
  std::vector<Integer> out(max + 1, 0);
  for (int k = 1; k <= max; ++k)
    for (int d = 1; d <= k; ++d)
      if (k % d == 0) out[k] += d * mu.multiplicity(d);
  return out;
}

Rational eval_p_expr(const SymExpr& fp, const Partition& mu) {
  auto pk = power_sums_at_xi(mu, fp.degree());
  Rational total = 0;
  for (const auto& [nu, c] : fp.terms()) {
    Integer v = 1;
    for (int k : nu.parts()) v *= pk[k];
    total += c * v;
  }
  return total;
}

}  // namespace

SymExpr multiply(const SymExpr& f, const SymExpr& g) {
  if (f.basis() == g.basis()) {
    switch (f.basis()) {
      case Basis::kH:
      case Basis::kP: return merge_product(f, g);
      case Basis::kS: {
        SymExpr out(Basis::kS);
        for (const auto& [a, c] : f.terms())
          for (const auto& [b, d] : g.terms())
            for (const auto& [nu, k] : lr_expand(a, b)) out.add_term(nu, c * d * k);
        return out;
      }
      case Basis::kHT:
      case Basis::kST: return change_basis(merge_product(to_h(f), to_h(g)), f.basis());
    }
  }
  return merge_product(to_h(f), to_h(g));
}

SymExpr change_basis(const SymExpr& f, Basis to) {
  if (f.basis() == to) return f;
  if (f.basis() == Basis::kS && to == Basis::kP) return apply(f, to, s_in_p);
  if (f.basis() == Basis::kP && to == Basis::kS) return apply(f, to, p_in_s);
  if (f.basis() == Basis::kHT && to == Basis::kST) return apply(f, to, ht_in_st);
  return from_h(to_h(f), to);
}

Integer mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw InvalidInput("character of " + lambda.to_string() + " at " + mu.to_string() + ": sizes differ");
  if (mu.empty()) return 1;
  static detail::Memo<std::pair<Partition, Partition>, Integer> memo;
  return memo.get({lambda, mu}, [&] {
    // Border strips of length k correspond to moving a bead k places down.
    const int l = lambda.length();
    const int k = mu.first();
    std::set<int> beads;
    for (int i = 0; i < l; ++i) beads.insert(lambda[i] + (l - 1 - i));
    Integer total = 0;
    for (int b : beads) {
      int to = b - k;
      if (to < 0 || beads.count(to)) continue;
      int between = static_cast<int>(std::distance(beads.upper_bound(to), beads.lower_bound(b)));
      std::set<int> moved = beads;
      moved.erase(b);
      moved.insert(to);
      std::vector<int> parts;
      int i = 0;
      for (auto it = moved.rbegin(); it != moved.rend(); ++it, ++i) parts.push_back(*it - (l - 1 - i));
      Integer chi = mn_character(Partition::from_unsorted(parts), mu.tail());
      total += between % 2 ? -chi : chi;
    }
    return total;
  });
}

Rational eval_at_xi(const SymExpr& f, const Partition& mu) {
  return eval_p_expr(change_basis(f, Basis::kP), mu);
}

Rational hall_inner(const SymExpr& f, const SymExpr& g) {
  SymExpr fp = change_basis(f, Basis::kP);
  SymExpr gp = change_basis(g, Basis::kP);
  Rational total = 0;
  for (const auto& [nu, c] : fp.terms()) total += c * gp.coeff(nu) * z_of(nu);
  return total;
}

Rational at_inner(const SymExpr& f, const SymExpr& g) {
  return at_inner(f, g, 2 * std::max(f.degree(), g.degree()));
}

Rational at_inner(const SymExpr& f, const SymExpr& g, int n) {
  if (n < 0) throw InvalidInput("negative degree");
  SymExpr fp = change_basis(f, Basis::kP);
  SymExpr gp = change_basis(g, Basis::kP);
  Rational total = 0;
  for (const auto& nu : partitions_of(n)) total += eval_p_expr(fp, nu) * eval_p_expr(gp, nu) / z_of(nu);
  return total;
}

SymExpr kronecker_product(const SymExpr& f, const SymExpr& g) {
  SymExpr fp = change_basis(f, Basis::kP);
  SymExpr gp = change_basis(g, Basis::kP);
  SymExpr out(Basis::kP);
  for (const auto& [nu, c] : fp.terms()) out.add_term(nu, c * gp.coeff(nu) * z_of(nu));
  return change_basis(out, Basis::kS);
}

SymExpr frobenius(const SymExpr& f, int n) {
  if (n < 0) throw InvalidInput("negative degree");
  SymExpr fp = change_basis(f, Basis::kP);
  SymExpr out(Basis::kP);
  for (const auto& nu : partitions_of(n)) out.add_term(nu, eval_p_expr(fp, nu) / z_of(nu));
  return out;
}

}  // namespace charbasis

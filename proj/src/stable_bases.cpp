#include "charbasis/stable_bases.hpp"

#include "charbasis/mct.hpp"
#include "charbasis/memo.hpp"
#include "charbasis/tableau.hpp"

namespace charbasis {

namespace {

// All λ with ν/λ a horizontal strip.
void for_each_strip_inner(const Partition& nu, const std::function<void(const Partition&)>& visit) {
  std::vector<int> parts(nu.length());
  std::function<void(int)> rec = [&](int i) {
    if (i == nu.length()) {
      visit(Partition::from_unsorted(parts));
      return;
    }
    for (int v = nu[i + 1]; v <= nu[i]; ++v) {
      parts[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

SymExpr counts_to_st(const std::map<Partition, Integer>& counts) {
  SymExpr out(Basis::kST);
  for (const auto& [gamma, c] : counts) out.add_term(gamma, Rational(c));
  return out;
}

SymExpr h_atom(int k) { return k == 0 ? SymExpr::constant(1) : SymExpr::atom(Basis::kH, Partition{k}); }

}  // namespace

SymExpr ht_in_st(const Partition& mu) {
  static detail::Memo<Partition, SymExpr> memo;
  return memo.get(mu, [&] {
    SymExpr out(Basis::kST);
    for (const auto& nu : partitions_of(mu.size())) {
      Integer k = kostka(nu, mu);
      if (k == 0) continue;
      for_each_strip_inner(nu, [&](const Partition& lambda) { out.add_term(lambda, Rational(k)); });
    }
    return out;
  });
}

SymExpr h_in_ht(const Partition& mu) {
  static detail::Memo<Partition, SymExpr> memo;
  return memo.get(mu, [&] {
    SymExpr out(Basis::kHT);
    for_each_multiset_partition(Multiset::from_counts(mu.vec()), false,
                                [&](const MultisetPartition& pi) { out.add_term(m_tilde(pi), 1); });
    return out;
  });
}

SymExpr h_in_st(const Partition& mu) {
  static detail::Memo<Partition, SymExpr> memo;
  return memo.get(mu, [&] { return change_basis(h_in_ht(mu), Basis::kST); });
}

SymExpr ht_in_h(const Partition& mu) {
  static detail::Memo<Partition, SymExpr> memo;
  return memo.get(mu, [&] { return change_basis(ht_in_st(mu), Basis::kH); });
}

SymExpr st_in_h(const Partition& lambda) {
  static detail::Memo<Partition, SymExpr> memo;
  return memo.get(lambda, [&] {
    // h_λ = s̃_λ + terms that are smaller in size or lex-larger of equal size.
    SymExpr out = SymExpr::atom(Basis::kH, lambda);
    const SymExpr h = h_in_st(lambda);
    for (const auto& [nu, c] : h.terms())
      if (nu != lambda) out += st_in_h(nu) * Rational(-c);
    return out;
  });
}

SymExpr st_in_h_pieri(const Partition& lambda) {
  static detail::Memo<Partition, SymExpr> memo;
  if (lambda.empty()) return SymExpr::constant(1);
  return memo.get(lambda, [&] {
    const Partition rest = lambda.tail();
    SymExpr out = multiply(h_atom(lambda.first()), st_in_h_pieri(rest));
    SymExpr pieri = product_h_st(Composition{lambda.first()}, rest);
    for (const auto& [gamma, c] : pieri.terms())
      if (gamma != lambda) out += st_in_h_pieri(gamma) * Rational(-c);
    return out * (Rational(1) / pieri.coeff(lambda));
  });
}

SymExpr expand_in_st(const SymExpr& f) { return change_basis(f, Basis::kST); }

SymExpr product_h_st(const Composition& alpha, const Partition& lambda) {
  return counts_to_st(count_mct_by_shape(lambda, alpha, FillProfile::kMultiset, true));
}

SymExpr product_ht_st(const Composition& mu, const Partition& lambda) {
  return counts_to_st(count_mct_by_shape(lambda, mu, FillProfile::kPair, true));
}

SymExpr product_ht_multi_st(const Composition& alpha, const Partition& lambda) {
  return counts_to_st(count_mct_by_shape(lambda, alpha, FillProfile::kSet, true));
}

SymExpr product_st_multi_st(const Composition& alpha, const Partition& lambda) {
  return counts_to_st(count_mct_by_shape(lambda, alpha, FillProfile::kSetNoSingletonRow1, true));
}

SymExpr product_ht_mpi_st(const MultisetPartition& pi, const Partition& lambda) {
  return counts_to_st(count_mct_prime_by_shape(lambda, pi, true));
}

SymExpr gbar(const Partition& lambda, const Partition& mu) {
  static detail::Memo<std::pair<Partition, Partition>, SymExpr> memo;
  return memo.get({lambda, mu}, [&] { return expand_in_st(multiply(st_in_h(lambda), st_in_h(mu))); });
}

Integer gbar_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return gbar(lambda, mu).coeff(nu).get_num();
}

Integer restriction_mult(const Partition& nu, const Partition& lambda) {
  if (lambda.size() > nu.size()) return 0;
  return expand_in_st(SymExpr::atom(Basis::kS, nu)).coeff(lambda).get_num();
}

}  // namespace charbasis

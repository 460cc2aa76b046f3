#include "charbasis/oracles.hpp"

#include "charbasis/mct.hpp"
#include "charbasis/stable_bases.hpp"
#include "charbasis/tableau.hpp"

namespace charbasis {

Integer finite_n_kronecker(const Partition& lambda, const Partition& mu, const Partition& nu, int n) {
  const Partition a = pad(lambda, n);
  const Partition b = pad(mu, n);
  const Partition c = pad(nu, n);
  Rational total = 0;
  for (const auto& rho : partitions_of(n))
    total += Rational(mn_character(a, rho) * mn_character(b, rho) * mn_character(c, rho)) / Rational(z_of(rho));
  if (total.get_den() != 1) throw std::logic_error("non-integral Kronecker coefficient");
  return total.get_num();
}

Integer stable_coeff_lr_sum(const Partition& mu, const Partition& lambda, const Partition& gamma, int n) {
  const Partition big_gamma = pad(gamma, n);
  const Partition big_lambda = pad(lambda, n);
  if (n < mu.size()) throw InvalidInput("n is smaller than |mu|");
  std::vector<Partition> taus(mu.length() + 1);
  Integer total = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i == static_cast<int>(taus.size())) {
      Integer g = multi_lr(taus, big_gamma);
      if (g != 0) total += g * multi_lr(taus, big_lambda);
      return;
    }
    int size = i == 0 ? n - mu.size() : mu[i - 1];
    for (const auto& tau : partitions_of(size)) {
      if (!big_gamma.contains(tau) || !big_lambda.contains(tau)) continue;
      taus[i] = tau;
      rec(i + 1);
    }
  };
  rec(0);
  return total;
}

Integer stable_coeff_lr_sum(const Partition& mu, const Partition& lambda, const Partition& gamma) {
  return stable_coeff_lr_sum(mu, lambda, gamma, 2 * (mu.size() + lambda.size()));
}

BsetCheck check_bset_identity(const std::vector<Partition>& taus, const Partition& gamma_full,
                              const Partition& lambda_full) {
  return {count_bset(taus, gamma_full, lambda_full), multi_lr(taus, gamma_full), multi_lr(taus, lambda_full)};
}

bool verify_bset_identity(const std::vector<Partition>& taus, const Partition& gamma_full,
                          const Partition& lambda_full) {
  return check_bset_identity(taus, gamma_full, lambda_full).holds();
}

bool verify_bset_identity(const std::vector<Partition>& taus, const Partition& gamma, const Partition& lambda,
                          int n) {
  return verify_bset_identity(taus, pad(gamma, n), pad(lambda, n));
}

namespace {

Composition ones(int r) {
  if (r < 0) throw InvalidInput("negative power");
  return Composition(std::vector<int>(r, 1));
}

}  // namespace

Integer partition_algebra_dim(const Partition& lambda, int r) {
  return product_ht_multi_st(ones(r), Partition()).coeff(lambda).get_num();
}

Integer quasi_partition_dim(const Partition& lambda, int r) {
  return product_st_multi_st(ones(r), Partition()).coeff(lambda).get_num();
}

namespace {

void check_entanglement_args(int d, int k, int a) {
  if (d < 1 || k < 1 || a < 0 || a > k) throw InvalidInput("need d >= 1, k >= 1 and 0 <= a <= k");
}

}  // namespace

Integer entanglement_coeff(int d, int k, int a) {
  check_entanglement_args(d, k, a);
  std::vector<int> counts;
  for (int i = 1; i <= k; ++i) counts.push_back(i <= a ? d : d - 1);
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  Integer total = 0;
  for_each_mct(Partition(), Partition(), Composition(counts), FillProfile::kSet, false,
               [&](const MultisetTableau& t) {
                 if (t.r() <= 2 * d) ++total;
               });
  return total;
}

Integer entanglement_coeff_kronecker(int d, int k, int a) {
  check_entanglement_args(d, k, a);
  SymExpr product(Basis::kS);
  for (int i = 0; i < k; ++i) {
    SymExpr factor = SymExpr::atom(Basis::kH, i < a ? Partition{d, d} : Partition::from_unsorted({d + 1, d - 1}));
    product = i == 0 ? change_basis(factor, Basis::kS) : kronecker_product(product, factor);
  }
  return product.coeff(Partition{2 * d}).get_num();
}

Integer bell_number(int n) {
  if (n < 0) throw InvalidInput("negative Bell index");
  std::vector<Integer> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<Integer> next{row.back()};
    for (const auto& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

std::map<Partition, SymExpr> gram_schmidt(int max_size) {
  std::map<Partition, SymExpr> out;
  std::vector<std::pair<SymExpr, Rational>> done;
  for (const auto& lambda : partitions_up_to(max_size)) {
    SymExpr v = change_basis(SymExpr::atom(Basis::kS, lambda), Basis::kH);
    SymExpr w = v;
    for (const auto& [e, norm] : done) w = w - e * (at_inner(v, e) / norm);
    Rational norm = at_inner(w, w);
    if (norm <= 0) throw std::logic_error("degenerate scalar product");
    done.emplace_back(w, norm);
    out.emplace(lambda, w);
  }
  return out;
}

}  // namespace charbasis

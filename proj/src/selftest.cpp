#include "charbasis/selftest.hpp"

#include <chrono>

#include "charbasis/mct.hpp"
#include "charbasis/oracles.hpp"
#include "charbasis/stable_bases.hpp"
#include "charbasis/tableau.hpp"

namespace charbasis {

namespace {

std::string show(const std::vector<Partition>& ps) {
  std::string s;
  for (const auto& p : ps) s += p.to_string();
  return s;
}

std::string partitions_suite(int d) {
  for (int n = 0; n <= d + 2; ++n)
    for (const auto& l : partitions_of(n)) {
      if (conjugate(conjugate(l)) != l) return "conjugate is not an involution at " + l.to_string();
      if (conjugate(l).size() != n) return "conjugate changes size at " + l.to_string();
    }
  return {};
}

std::string lattice_suite(int d) {
  const int len = d + 3;
  Word w;
  std::function<std::string()> rec = [&]() -> std::string {
    int c[4] = {0, 0, 0, 0};
    bool ok = true;
    for (int x : w) {
      ++c[x];
      if (x > 1 && c[x] > c[x - 1]) ok = false;
    }
    if (ok != is_lattice(w)) return "lattice check disagrees on a word of length " + std::to_string(w.size());
    if (static_cast<int>(w.size()) == len) return {};
    for (int x = 1; x <= 3; ++x) {
      w.push_back(x);
      auto r = rec();
      w.pop_back();
      if (!r.empty()) return r;
    }
    return {};
  };
  return rec();
}

std::string multiset_partition_suite(int d) {
  for (int r = 0; r <= d + 2; ++r) {
    auto same = enumerate_multiset_partitions(Multiset(std::vector<int>(r, 1)), false).size();
    if (same != partitions_of(r).size()) return "wrong count for {1^" + std::to_string(r) + "}";
    std::vector<int> letters;
    for (int i = 1; i <= r; ++i) letters.push_back(i);
    Integer distinct = enumerate_multiset_partitions(Multiset(letters), true).size();
    if (distinct != bell_number(r)) return "set partitions of [" + std::to_string(r) + "] miscounted";
  }
  return {};
}

std::string lr_suite(int d) {
  for (int n = 0; n <= d + 1; ++n)
    for (int a = 0; a <= n; ++a)
      for (const auto& l : partitions_of(a))
        for (const auto& m : partitions_of(n - a))
          for (const auto& nu : partitions_of(n)) {
            Integer x = lr_coefficient(l, m, nu, LrMethod::kLatticePair);
            if (x != lr_coefficient(m, l, nu, LrMethod::kLatticePair) ||
                x != lr_coefficient(l, m, nu, LrMethod::kJeuDeTaquin))
              return "LR disagreement at " + show({l, m, nu});
          }
  return {};
}

std::string round_trip_suite(int d) {
  const Basis bases[] = {Basis::kH, Basis::kP, Basis::kS, Basis::kHT, Basis::kST};
  for (const auto& l : partitions_up_to(d))
    for (Basis from : bases)
      for (Basis to : bases) {
        SymExpr f = SymExpr::atom(from, l);
        if (change_basis(change_basis(f, to), from) != f)
          return "round trip " + std::string(to_string(from)) + "->" + std::string(to_string(to)) + " fails at " +
                 l.to_string();
      }
  return {};
}

std::string hall_suite(int d) {
  for (int n = 0; n <= d; ++n)
    for (const auto& l : partitions_of(n))
      for (const auto& m : partitions_of(n)) {
        Rational s = hall_inner(SymExpr::atom(Basis::kS, l), SymExpr::atom(Basis::kS, m));
        if (s != (l == m ? 1 : 0)) return "Schur functions not orthonormal at " + show({l, m});
        if (hall_inner(SymExpr::atom(Basis::kS, l), SymExpr::atom(Basis::kP, m)) != mn_character(l, m))
          return "character mismatch at " + show({l, m});
      }
  return {};
}

std::string at_inner_suite(int d) {
  auto ps = partitions_up_to(std::min(d, 3));
  for (const auto& l : ps)
    for (const auto& m : ps) {
      SymExpr a = SymExpr::atom(Basis::kST, l);
      SymExpr b = SymExpr::atom(Basis::kST, m);
      int n = 2 * std::max(l.size(), m.size());
      Rational x = at_inner(a, b, n);
      if (x != (l == m ? 1 : 0) || at_inner(a, b, n + 1) != x) return "s~ not orthonormal at " + show({l, m});
    }
  return {};
}

std::string pieri_suite(int d) {
  for (const auto& l : partitions_up_to(d + 1))
    if (st_in_h(l) != st_in_h_pieri(l)) return "Pieri recursion and inversion differ at " + l.to_string();
  return {};
}

Composition drop_zeros(const std::vector<int>& parts) {
  std::vector<int> kept;
  for (int v : parts)
    if (v > 0) kept.push_back(v);
  return Composition(kept);
}

std::string product_suite(int d) {
  for (int total = 0; total <= d; ++total)
    for (int a = 0; a <= total; ++a)
      for (const auto& alpha : compositions_of(a))
        for (const auto& lambda : partitions_of(total - a)) {
          const std::string at = alpha.to_string() + lambda.to_string();
          SymExpr h_alpha = SymExpr::constant(1);
          for (int k : alpha.parts()) h_alpha = multiply(h_alpha, SymExpr::atom(Basis::kH, Partition{k}));
          if (product_h_st(alpha, lambda) != expand_in_st(multiply(h_alpha, st_in_h(lambda))))
            return "h-product rule fails at " + at;
          SymExpr alternating(Basis::kST);
          const int k = alpha.length();
          for (unsigned mask = 0; mask < (1u << k); ++mask) {
            std::vector<int> parts = alpha.parts();
            int sign = 1;
            for (int i = 0; i < k; ++i)
              if (mask & (1u << i)) {
                --parts[i];
                sign = -sign;
              }
            alternating += product_ht_multi_st(drop_zeros(parts), lambda) * Rational(sign);
          }
          if (product_st_multi_st(alpha, lambda) != alternating) return "alternating-sum identity fails at " + at;
          SymExpr pair = product_ht_st(alpha, lambda);
          for (const auto& [gamma, c] : pair.terms())
            if (c != stable_coeff_lr_sum(alpha.sorted(), lambda, gamma)) return "pair rule vs LR sum fails at " + at;
        }
  return {};
}

std::string stability_suite(int d) {
  for (const auto& l : partitions_up_to(d / 2 + 1))
    for (const auto& m : partitions_up_to(d / 2 + 1)) {
      if (l.size() + m.size() > d + 1) continue;
      int n = 2 * (l.size() + m.size());
      for (const auto& nu : partitions_up_to(l.size() + m.size())) {
        Integer g = gbar_coeff(l, m, nu);
        if (finite_n_kronecker(l, m, nu, n) != g || finite_n_kronecker(l, m, nu, n + 1) != g)
          return "stable Kronecker coefficient mismatch at " + show({l, m, nu});
      }
    }
  return {};
}

std::string gram_schmidt_suite(int d) {
  for (const auto& [l, e] : gram_schmidt(d))
    if (e != st_in_h(l)) return "Gram-Schmidt differs at " + l.to_string();
  return {};
}

std::string bset_suite(int d) {
  const int max_total = d + 2;
  std::vector<Partition> taus;
  std::function<std::string(int)> rec = [&](int used) -> std::string {
    if (!taus.empty()) {
      for (const auto& g : partitions_of(used))
        for (const auto& l : partitions_of(used))
          if (!verify_bset_identity(taus, g, l)) return "B-set identity fails for " + show(taus);
    }
    if (taus.size() == 4) return {};
    for (int s = taus.empty() ? 0 : 1; used + s <= max_total; ++s)
      for (const auto& t : partitions_of(s)) {
        taus.push_back(t);
        auto r = rec(used + s);
        taus.pop_back();
        if (!r.empty()) return r;
      }
    return {};
  };
  return rec(0);
}

}  // namespace

std::vector<SelftestSuite> default_suites() {
  return {
      {"partitions", partitions_suite},
      {"lattice-words", lattice_suite},
      {"multiset-partitions", multiset_partition_suite},
      {"littlewood-richardson", lr_suite},
      {"basis-round-trip", round_trip_suite},
      {"hall-scalar-product", hall_suite},
      {"character-scalar-product", at_inner_suite},
      {"pieri-vs-inversion", pieri_suite},
      {"product-rules", product_suite},
      {"stability", stability_suite},
      {"gram-schmidt", gram_schmidt_suite},
      {"bset-identity", bset_suite},
  };
}

std::vector<SuiteResult> run_selftest(const std::vector<SelftestSuite>& suites, int max_degree) {
  std::vector<SuiteResult> out;
  for (const auto& s : suites) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = s.run(max_degree);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    out.push_back({s.name, detail.empty(), detail, took.count()});
  }
  return out;
}

}  // namespace charbasis

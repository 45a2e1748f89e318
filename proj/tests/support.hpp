#pragma once

#include <random>

#include "mgeuler/pipeline.hpp"
#include "mgeuler/series.hpp"
#include "mgeuler/symmetric.hpp"

namespace mgeuler::testing {

// Grading 3*deg_hbar + 2*deg_p, positive on every term random_connected()
// produces, so exp and log are exact under it.
inline TruncationPolicy graded_policy(long cap) {
  TruncationPolicy pol;
  pol.q_cap = 0;
  pol.p_cap = cap;
  pol.grades.push_back(LinearCap{3, 0, 2, cap});
  return pol;
}

// Random sparse hbar^a p^lambda series, a in [-1, 2], without constant term.
inline Series random_connected(std::mt19937& rng, const TruncationPolicy& pol) {
  std::uniform_int_distribution<int> nterms(1, 4), aux(-1, 2), size(1, 4), num(-6, 6), den(1, 5);
  Series e(pol);
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    const int a = aux(rng);
    int s = size(rng);
    if (a == -1 && s < 2) s = 2;
    auto all = partitions_of(s);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    e.add_term(Monomial::aux_power(a) * p_monomial(all[pick(rng)]), fraction(num(rng), den(rng)));
  }
  return e;
}

// exp(sum_k psi_k(e)/k) with psi_k: hbar -> hbar^k, p_i -> p_{ik}. Stops
// once psi_k(e) is truncated away entirely.
inline Series plethystic_exp(const Series& e) {
  Series sum(e.policy());
  for (int k = 1;; ++k) {
    Series psi = substitute_frobenius(e, k, FrobeniusMode::p_with_aux);
    if (psi.is_zero()) break;
    sum += psi * fraction(1, k);
  }
  return exp(sum);
}

}  // namespace mgeuler::testing

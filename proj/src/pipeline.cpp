#include "mgeuler/pipeline.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mgeuler/symmetric.hpp"

namespace mgeuler {

const char* to_string(OrientationSign s) { return s == OrientationSign::plus ? "even" : "odd"; }

Integer double_factorial(int m) {
  if (m < -1) throw std::invalid_argument("double_factorial: m must be >= -1");
  Integer r = 1;
  for (int x = m; x > 1; x -= 2) r *= x;
  return r;
}

Integer eta_kl(OrientationSign sign, int k, int l) {
  if (k < 1 || l < 0) throw std::invalid_argument("eta_kl: need k >= 1 and l >= 0");
  if (k % 2 == 1) {
    if (l % 2 == 1) return 0;
    Integer kp;
    mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(l / 2));
    return kp * double_factorial(l - 1);
  }
  const int s = sign_value(sign);
  Integer total = 0;
  Integer binom;
  Integer kr = 1;
  for (int r = 0; 2 * r <= l; ++r) {
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(l), static_cast<unsigned long>(2 * r));
    Integer term = binom * kr * double_factorial(2 * r - 1);
    const bool negative = s < 0 && (l * k / 2 + r) % 2 == 1;
    total += negative ? Integer(-term) : term;
    kr *= k;
  }
  return total;
}

Integer eta_partition(OrientationSign sign, const Partition& mu) {
  Integer r = 1;
  for (auto [k, m] : mu.multiplicities()) r *= eta_kl(sign, k, m);
  return r;
}

bool in_output_range(int chi, int g, int n) {
  return g >= 0 && n >= 0 && g <= chi && n <= chi && 2 * g - 2 + n > 0;
}

namespace {

long forest_cap(int chi) { return 10L * chi - 6; }
long graph_cap(int chi) { return 5L * chi - 3; }

void check_chi(int chi, const char* op) {
  if (chi < 2) throw std::invalid_argument(std::string(op) + ": chi must be at least 2");
}

// q_a^m -> eta_{a,m}, cached per (a, m).
class EtaCache {
 public:
  explicit EtaCache(OrientationSign sign) : sign_(sign) {}

  const Rational& get(int a, int m) {
    auto [it, inserted] = cache_.try_emplace({a, m});
    if (inserted) it->second = Rational(eta_kl(sign_, a, m));
    return it->second;
  }

 private:
  OrientationSign sign_;
  std::map<std::pair<int, int>, Rational> cache_;
};

Series contract(const Series& f, int a, EtaCache& eta) {
  Series r(f.policy());
  for (const auto& [m, c] : f.terms()) {
    const int e = m.exponent(Family::q, a);
    if (e == 0) {
      r.add_term(m, c);
      continue;
    }
    const Rational& w = eta.get(a, e);
    if (w != 0) r.add_term(m.drop(Family::q, a), c * w);
  }
  return r;
}

// exp(c m) for a single term, truncated by policy.
Series exp_term(const Monomial& m, const Rational& c, const TruncationPolicy& policy) {
  Series r = Series::constant(1, policy);
  Monomial power;
  Rational coeff = 1;
  for (int j = 1;; ++j) {
    power = power * m;
    if (!policy.admits(power)) break;
    coeff *= c;
    coeff /= j;
    r.add_term(power, coeff);
  }
  return r;
}

// All ee_{t,n} of a run from one pass over a series in u, q, p.
EeTable collect_ee(OrientationSign sign, int chi, const Series& F) {
  EeTable out;
  for (const auto& tn : ee_range(chi)) out[tn];
  EtaCache eta(sign);
  for (const auto& [m, c] : F.terms()) {
    if (m.aux() % 2 != 0) continue;
    const int t = m.aux() / 2;
    const int n = static_cast<int>(m.p_weight());
    if (m.q_weight() > 6L * t + 4L * n) continue;
    Rational w = 1;
    for (auto [k, e] : m.powers(Family::q)) {
      w *= eta.get(k, e);
      if (w == 0) break;
    }
    if (w == 0) continue;
    auto it = out.find({t, n});
    if (it == out.end()) {
      throw std::logic_error("collect_ee: coefficient at (t=" + std::to_string(t) +
                             ", n=" + std::to_string(n) + ") outside the ee range");
    }
    it->second.add_term(p_partition(m), c * w);
  }
  return out;
}

}  // namespace

TruncationPolicy forest_policy(int chi) {
  check_chi(chi, "forest_policy");
  TruncationPolicy p;
  p.q_cap = forest_cap(chi);
  p.p_cap = chi;
  p.grades.push_back(LinearCap{3, 0, 4, forest_cap(chi)});
  return p;
}

TruncationPolicy graph_policy(int chi) {
  check_chi(chi, "graph_policy");
  TruncationPolicy p;
  p.q_cap = 0;
  p.p_cap = chi;
  p.grades.push_back(LinearCap{3, 0, 2, graph_cap(chi)});
  return p;
}

Series build_V(long q_cap) {
  if (q_cap < 0) throw std::invalid_argument("build_V: q_cap must be nonnegative");
  const TruncationPolicy pol = TruncationPolicy::caps(q_cap, 0);
  Series logs(pol);
  for (long k = 1; k <= q_cap; ++k) {
    const int mu = moebius(static_cast<int>(k));
    if (mu == 0) continue;
    logs += scale(log1p(Series::term(Monomial::q(static_cast<int>(k)), 1, pol)),
                  fraction(mu, k));
  }
  Series v(pol);
  v.add_term(Monomial::q(1), 1);
  v.add_term(Monomial::q(1, 2), fraction(1, 2));
  v.add_term(Monomial::q(2), fraction(-1, 2));
  Series one_plus_q1 = Series::constant(1, pol);
  one_plus_q1.add_term(Monomial::q(1), 1);
  return v - one_plus_q1 * logs;
}

Series build_F_exponent(OrientationSign sign, int chi) {
  const TruncationPolicy pol = forest_policy(chi);
  const long cap = forest_cap(chi);
  // V((u q)_[k]) u^{-2k} has grade 3k(d-2) at q-degree d, and V starts at d = 3.
  const Series V = build_V(cap / 3 + 2);
  const long kmax = std::max<long>(cap / 3, chi);
  Series x(pol);
  for (long k = 1; k <= kmax; ++k) {
    const int ki = static_cast<int>(k);
    const Rational s = fraction(sign_value(sign) < 0 && k % 2 == 0 ? -1 : 1, k);
    for (const auto& [m, c] : V.terms()) {
      Monomial out;
      for (auto [i, e] : m.powers(Family::q)) out = out * Monomial::q(ki * i, e);
      out = out.with_aux(static_cast<int>(k * (m.q_weight() - 2)));
      x.add_term(out, c * s);
    }
    x.add_term(Monomial::q(ki) * Monomial::p(ki) * Monomial::aux_power(-ki), s);
  }
  return x;
}

Series build_F(OrientationSign sign, int chi) { return exp(build_F_exponent(sign, chi)); }

SymPoly compute_ee(OrientationSign sign, int t, int n, const Series& F) {
  SymPoly out;
  if (n < 0) throw std::invalid_argument("compute_ee: n must be nonnegative");
  if (3L * t < -2L * n) return out;
  const long bound = 6L * t + 4L * n;
  for (const auto& [m, c] : F.terms()) {
    if (m.aux() != 2 * t || m.p_weight() != n || m.q_weight() > bound) continue;
    const Integer w = eta_partition(sign, Partition::from_multiplicities(m.powers(Family::q)));
    if (w != 0) out.add_term(p_partition(m), c * Rational(w));
  }
  return out;
}

std::vector<std::pair<int, int>> ee_range(int chi) {
  check_chi(chi, "ee_range");
  std::vector<std::pair<int, int>> out;
  for (int n = 0; n <= chi; ++n) {
    const long top = (graph_cap(chi) - 2L * n) / 3;
    for (int t = -(2 * n / 3); t <= top; ++t) out.emplace_back(t, n);
  }
  return out;
}

EeTable compute_ee_table(OrientationSign sign, int chi, ExpansionMethod method) {
  if (method == ExpansionMethod::direct) return collect_ee(sign, chi, build_F(sign, chi));

  const TruncationPolicy pol = forest_policy(chi);
  const Series x = build_F_exponent(sign, chi);
  std::map<int, std::vector<std::pair<Monomial, Rational>>, std::greater<>> by_index;
  for (const auto& [m, c] : x.terms()) by_index[m.max_index(Family::q)].emplace_back(m, c);
  // Heavy factors first: they have few admitted powers, and multiplying them
  // in while the product is still small keeps the intermediate size down.
  for (auto& [a, group] : by_index) {
    std::sort(group.begin(), group.end(), [](const auto& x, const auto& y) {
      if (x.first.q_weight() != y.first.q_weight()) return x.first.q_weight() > y.first.q_weight();
      return x.first < y.first;
    });
  }

  EtaCache eta(sign);
  Series product = Series::constant(1, pol);
  for (const auto& [a, group] : by_index) {
    for (const auto& [m, c] : group) product = product * exp_term(m, c, pol);
    product = contract(product, a, eta);
  }
  return collect_ee(sign, chi, product);
}

Series assemble_E(OrientationSign sign, int chi, const EeTable& ees) {
  Series E(graph_policy(chi));
  for (const auto& [t, n] : ee_range(chi)) {
    auto it = ees.find({t, n});
    if (it == ees.end()) {
      throw std::out_of_range("assemble_E: missing ee at (t=" + std::to_string(t) +
                              ", n=" + std::to_string(n) + ")");
    }
    const int s = (sign_value(sign) < 0 && (t % 2 != 0)) ? -1 : 1;
    for (const auto& [lambda, c] : it->second.coeffs()) {
      if (lambda.size() != n) throw std::logic_error("assemble_E: ee is not homogeneous");
      E.add_term(p_monomial(lambda).with_aux(t), c * s);
    }
  }
  return E;
}

Series plethystic_log(const Series& E) {
  if (E.constant_term() != 1) throw std::invalid_argument("plethystic_log: constant term must be 1");
  Series e(E.policy());
  const Monomial one;
  for (int k = 1;; ++k) {
    Series sub = substitute_frobenius(E, k, FrobeniusMode::p_with_aux);
    sub.add_term(one, -1);
    // Every grading used by log1p is positive and scales by k, so once
    // nothing survives nothing will for larger k either.
    if (sub.is_zero()) break;
    const int mu = moebius(k);
    if (mu == 0) continue;
    e += scale(log1p(sub), fraction(mu, k));
  }
  return e;
}

SymPoly equivariant_euler(OrientationSign sign, int g, int n, const Series& e) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) {
    throw std::invalid_argument("equivariant_euler: need g, n >= 0 and 2g-2+n > 0");
  }
  const Monomial probe = Monomial::p(1, n).with_aux(g - 1);
  if (n > 0 && !e.policy().admits(probe)) {
    throw std::out_of_range("equivariant_euler: (g=" + std::to_string(g) + ", n=" +
                            std::to_string(n) + ") is outside the series truncation");
  }
  if (n == 0 && !e.policy().admits(Monomial::aux_power(g - 1))) {
    throw std::out_of_range("equivariant_euler: (g=" + std::to_string(g) +
                            ", n=0) is outside the series truncation");
  }
  // (+-1)^{g-1}; for g = 0 this is +-1 as well.
  const int s = (sign_value(sign) < 0 && (g - 1) % 2 != 0) ? -1 : 1;
  SymPoly out;
  for (const auto& [m, c] : e.terms()) {
    if (m.aux() != g - 1 || m.p_weight() != n) continue;
    out.add_term(p_partition(m), c * s);
  }
  return out;
}

EulerTable run(const PipelineConfig& config) {
  check_chi(config.chi, "run");
  EulerTable table;
  table.chi = config.chi;
  table.signs = config.signs;
  for (OrientationSign sign : config.signs) {
    const EeTable ees = compute_ee_table(sign, config.chi, config.method);
    const Series e = plethystic_log(assemble_E(sign, config.chi, ees));
    for (int g = 0; g <= config.chi; ++g) {
      for (int n = 0; n <= config.chi; ++n) {
        if (!in_output_range(config.chi, g, n)) continue;
        const EntryKey key{sign, g, n};
        SymPoly f = equivariant_euler(sign, g, n, e);
        table.schur[key] = to_schur(f);
        table.scalars[key] = Scalars{specialize_exclam(f, n),
                                     to_integer(specialize_ones(f), "specialize_ones")};
        table.equivariant[key] = std::move(f);
      }
    }
  }
  return table;
}

}  // namespace mgeuler

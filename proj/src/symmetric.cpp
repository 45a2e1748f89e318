#include "mgeuler/symmetric.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace mgeuler {

int moebius(int k) {
  if (k < 1) throw std::invalid_argument("moebius: k must be positive");
  int result = 1;
  for (int d = 2; d * d <= k; ++d) {
    if (k % d != 0) continue;
    k /= d;
    if (k % d == 0) return 0;
    result = -result;
  }
  if (k > 1) result = -result;
  return result;
}

namespace {

using CharKey = std::pair<std::vector<int>, std::vector<int>>;

// beta-set of lambda with exactly `length` beads.
std::vector<int> beta_set(const std::vector<int>& parts) {
  const int len = static_cast<int>(parts.size());
  std::vector<int> beta(parts.size());
  for (int i = 0; i < len; ++i) beta[i] = parts[i] + (len - 1 - i);
  return beta;
}

std::vector<int> parts_from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    int p = beta[i] - (len - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return parts;
}

std::int64_t character_rec(const std::vector<int>& lambda, const std::vector<int>& mu,
                           std::size_t pos, std::map<CharKey, std::int64_t>& memo) {
  if (pos == mu.size()) return lambda.empty() ? 1 : 0;
  CharKey key{lambda, std::vector<int>(mu.begin() + static_cast<long>(pos), mu.end())};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = mu[pos];
  std::vector<int> beta = beta_set(lambda);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    const int target = b - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // Border-strip height = beads strictly between target and b.
    const auto between = std::count_if(beta.begin(), beta.end(),
                                       [&](int x) { return x > target && x < b; });
    std::vector<int> moved = beta;
    moved[i] = target;
    std::int64_t sub = character_rec(parts_from_beta(std::move(moved)), mu, pos + 1, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw std::invalid_argument("mn_character: |lambda| != |mu| (" + lambda.to_string() + ", " +
                                mu.to_string() + ")");
  }
  thread_local std::map<CharKey, std::int64_t> memo;
  return character_rec(lambda.parts(), mu.parts(), 0, memo);
}

std::int64_t dim_irrep(const Partition& lambda) {
  return mn_character(lambda, Partition(std::vector<int>(static_cast<std::size_t>(lambda.size()), 1)));
}

Integer hook_length_dimension(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  Integer n_fact;
  mpz_fac_ui(n_fact.get_mpz_t(), static_cast<unsigned long>(lambda.size()));
  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.parts()[i]; ++j) {
      hooks *= (lambda.parts()[i] - j - 1) + (conj.parts()[j] - i - 1) + 1;
    }
  }
  return n_fact / hooks;
}

SchurPoly to_schur(const SymPoly& f) {
  SchurPoly out;
  if (f.is_zero()) return out;
  const int n = f.coeffs().begin()->first.size();
  if (!f.is_homogeneous(n)) throw std::invalid_argument("to_schur: input is not homogeneous");
  for (const auto& lambda : partitions_of(n)) {
    Rational c = 0;
    for (const auto& [mu, a] : f.coeffs()) c += a * Rational(mn_character(lambda, mu));
    out.add_term(lambda, to_integer(c, ("to_schur: coefficient of s" + lambda.to_string()).c_str()));
  }
  return out;
}

SymPoly from_schur(const SchurPoly& s) {
  SymPoly out;
  for (const auto& [lambda, c] : s.coeffs()) {
    for (const auto& mu : partitions_of(lambda.size())) {
      Rational coeff(Integer(c * mn_character(lambda, mu)), centralizer_order(mu));
      coeff.canonicalize();
      out.add_term(mu, coeff);
    }
  }
  return out;
}

Integer specialize_exclam(const SymPoly& f, int n) {
  if (!f.is_homogeneous(n)) throw std::invalid_argument("specialize_exclam: not homogeneous");
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  const Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
  return to_integer(Rational(f.coefficient(ones) * fact), "specialize_exclam");
}

Rational specialize_ones(const SymPoly& f) {
  Rational total = 0;
  for (const auto& [lambda, a] : f.coeffs()) total += a;
  return total;
}

std::string render_schur(const SchurPoly& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, c] : s.coeffs()) {
    if (lambda.empty()) {
      // Degree zero: only the constant term can be present.
      os << c.get_str();
      continue;
    }
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (negative) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << "s" << lambda.to_string();
    first = false;
  }
  return os.str();
}

}  // namespace mgeuler

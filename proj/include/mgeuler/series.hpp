#pragma once

#include <climits>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mgeuler/monomial.hpp"
#include "mgeuler/partition.hpp"
#include "mgeuler/rational.hpp"

namespace mgeuler {

// A linear cap aux_w*aux + q_w*weight_q + p_w*weight_p <= cap.
struct LinearCap {
  int aux_w = 0;
  int q_w = 0;
  int p_w = 0;
  long cap = 0;

  long grade(const Monomial& m) const {
    return static_cast<long>(aux_w) * m.aux() + q_w * m.q_weight() + p_w * m.p_weight();
  }
  friend bool operator==(const LinearCap&, const LinearCap&) = default;
};

// Which monomials a series keeps. Results of arithmetic are exact within
// the policy as long as every cap bounds a quantity that is additive and
// nonnegative on the operands (weighted degrees always are; a LinearCap is
// when its grade is nonnegative on every term). The aux window is a plain
// filter and must be implied by the other caps for exact products.
struct TruncationPolicy {
  static constexpr long kUnbounded = LONG_MAX / 4;

  long q_cap = kUnbounded;
  long p_cap = kUnbounded;
  long aux_min = -kUnbounded;
  long aux_max = kUnbounded;
  std::vector<LinearCap> grades;

  static TruncationPolicy unbounded() { return {}; }
  static TruncationPolicy caps(long q_cap, long p_cap) {
    TruncationPolicy t;
    t.q_cap = q_cap;
    t.p_cap = p_cap;
    return t;
  }

  bool admits(const Monomial& m) const;
  // Most restrictive combination of both policies.
  static TruncationPolicy meet(const TruncationPolicy& a, const TruncationPolicy& b);

  friend bool operator==(const TruncationPolicy&, const TruncationPolicy&) = default;
};

// Sparse truncated power series over the rationals. Zero coefficients are
// never stored and every stored monomial is admitted by the policy.
class Series {
 public:
  using TermMap = std::unordered_map<Monomial, Rational, MonomialHash>;

  explicit Series(TruncationPolicy policy = {}) : policy_(std::move(policy)) {}

  static Series constant(const Rational& c, TruncationPolicy policy = {});
  static Series term(const Monomial& m, const Rational& c, TruncationPolicy policy = {});

  const TermMap& terms() const { return terms_; }
  const TruncationPolicy& policy() const { return policy_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial{}); }

  // Accumulates c*m; drops the term when the policy rejects m.
  void add_term(const Monomial& m, const Rational& c);

  Series& operator+=(const Series& other);
  friend bool operator==(const Series& a, const Series& b) { return a.terms_ == b.terms_; }

 private:
  TruncationPolicy policy_;
  TermMap terms_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series scale(const Series& a, const Rational& c);
// Re-truncates f to the meet of its policy and the given one.
Series truncate(const Series& f, const TruncationPolicy& policy);
// The terms of f admitted by policy, carrying that policy (may loosen caps).
Series with_policy(const Series& f, TruncationPolicy policy);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator*(const Series& a, const Rational& c) { return scale(a, c); }

// exp(f) = sum_m f^m/m!. f must have no constant term and admit a grading
// (a LinearCap of its policy, else weight_q + weight_p) that is positive on
// every term; throws std::invalid_argument otherwise.
Series exp(const Series& f);

// log(1+f) = sum_{m>=1} (-1)^{m+1} f^m/m, same preconditions as exp.
Series log1p(const Series& f);

enum class FrobeniusMode {
  // q_i -> u^{k i} q_{k i}
  q_with_u,
  // aux -> aux^k, p_i -> p_{i k}
  p_with_aux,
};

Series substitute_frobenius(const Series& f, int k, FrobeniusMode mode);

// Coefficient of aux^{2t} q^mu as a polynomial in the power sums.
SymPoly extract(const Series& f, int t, const Partition& mu);

// The p-part of a monomial as a partition (p_i^m contributes m parts i).
Partition p_partition(const Monomial& m);
Monomial p_monomial(const Partition& lambda);
Monomial q_monomial(const Partition& mu);

}  // namespace mgeuler

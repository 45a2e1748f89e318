#include "mgeuler/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace mgeuler {

bool TruncationPolicy::admits(const Monomial& m) const {
  if (m.aux() < aux_min || m.aux() > aux_max) return false;
  if (m.q_weight() > q_cap || m.p_weight() > p_cap) return false;
  for (const auto& g : grades) {
    if (g.grade(m) > g.cap) return false;
  }
  return true;
}

TruncationPolicy TruncationPolicy::meet(const TruncationPolicy& a, const TruncationPolicy& b) {
  TruncationPolicy r;
  r.q_cap = std::min(a.q_cap, b.q_cap);
  r.p_cap = std::min(a.p_cap, b.p_cap);
  r.aux_min = std::max(a.aux_min, b.aux_min);
  r.aux_max = std::min(a.aux_max, b.aux_max);
  r.grades = a.grades;
  for (const auto& g : b.grades) {
    auto same = std::find_if(r.grades.begin(), r.grades.end(), [&](const LinearCap& h) {
      return h.aux_w == g.aux_w && h.q_w == g.q_w && h.p_w == g.p_w;
    });
    if (same == r.grades.end()) {
      r.grades.push_back(g);
    } else {
      same->cap = std::min(same->cap, g.cap);
    }
  }
  return r;
}

Series Series::constant(const Rational& c, TruncationPolicy policy) {
  return term(Monomial{}, c, std::move(policy));
}

Series Series::term(const Monomial& m, const Rational& c, TruncationPolicy policy) {
  Series s(std::move(policy));
  s.add_term(m, c);
  return s;
}

Rational Series::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Series::add_term(const Monomial& m, const Rational& c) {
  if (c == 0 || !policy_.admits(m)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Series& Series::operator+=(const Series& other) {
  policy_ = TruncationPolicy::meet(policy_, other.policy_);
  if (!(policy_ == other.policy_)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      it = policy_.admits(it->first) ? std::next(it) : terms_.erase(it);
    }
  }
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Series add(const Series& a, const Series& b) {
  Series r = a;
  r += b;
  return r;
}

Series sub(const Series& a, const Series& b) { return add(a, scale(b, -1)); }

Series scale(const Series& a, const Rational& c) {
  Series r(a.policy());
  if (c == 0) return r;
  for (const auto& [m, x] : a.terms()) r.add_term(m, x * c);
  return r;
}

Series truncate(const Series& f, const TruncationPolicy& policy) {
  Series r(TruncationPolicy::meet(f.policy(), policy));
  for (const auto& [m, c] : f.terms()) r.add_term(m, c);
  return r;
}

Series with_policy(const Series& f, TruncationPolicy policy) {
  Series r(std::move(policy));
  for (const auto& [m, c] : f.terms()) r.add_term(m, c);
  return r;
}

namespace {

// acc += factor * a * b
void accumulate_product(Series& acc, const std::vector<std::pair<Monomial, Rational>>& a,
                        const std::vector<std::pair<Monomial, Rational>>& b,
                        const Rational& factor) {
  Rational c;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m = ma * mb;
      if (!acc.policy().admits(m)) continue;
      c = ca * cb;
      if (factor != 1) c *= factor;
      acc.add_term(m, c);
    }
  }
}

std::vector<std::pair<Monomial, Rational>> as_vector(const Series& s) {
  return {s.terms().begin(), s.terms().end()};
}

struct Grading {
  LinearCap cap;
};

// Picks a grading positive on every term of f, with a finite upper bound.
Grading progress_grading(const Series& f, const char* op) {
  if (f.constant_term() != 0) {
    throw std::invalid_argument(std::string(op) + ": argument has a nonzero constant term");
  }
  const auto& pol = f.policy();
  auto positive_on_all = [&](const LinearCap& g) {
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [&](const auto& kv) { return g.grade(kv.first) >= 1; });
  };
  for (const auto& g : pol.grades) {
    if (g.cap < TruncationPolicy::kUnbounded && positive_on_all(g)) return {g};
  }
  LinearCap fallback{0, 1, 1, 0};
  if (pol.q_cap >= TruncationPolicy::kUnbounded || pol.p_cap >= TruncationPolicy::kUnbounded) {
    throw std::invalid_argument(std::string(op) + ": policy has no finite degree bound");
  }
  fallback.cap = pol.q_cap + pol.p_cap;
  if (!positive_on_all(fallback)) {
    throw std::invalid_argument(std::string(op) +
                                ": a term has zero q- and p-degree (malformed exponent series)");
  }
  return {fallback};
}

// Terms of f bucketed by grade 1..cap.
std::vector<std::vector<std::pair<Monomial, Rational>>> buckets(const Series& f,
                                                                const LinearCap& g) {
  std::vector<std::vector<std::pair<Monomial, Rational>>> out(static_cast<std::size_t>(g.cap) + 1);
  for (const auto& [m, c] : f.terms()) {
    long d = g.grade(m);
    if (d <= g.cap) out[static_cast<std::size_t>(d)].emplace_back(m, c);
  }
  return out;
}

}  // namespace

Series mul(const Series& a, const Series& b) {
  Series r(TruncationPolicy::meet(a.policy(), b.policy()));
  const Series& small = a.size() <= b.size() ? a : b;
  const Series& large = a.size() <= b.size() ? b : a;
  Rational c;
  for (const auto& [ms, cs] : small.terms()) {
    for (const auto& [ml, cl] : large.terms()) {
      Monomial m = ms * ml;
      if (!r.policy().admits(m)) continue;
      c = cs * cl;
      r.add_term(m, c);
    }
  }
  return r;
}

// Graded recurrence from D(E) = D(f) E with D the grade derivation:
// d E_d = sum_{j=1..d} j f_j E_{d-j}.
Series exp(const Series& f) {
  Grading g = progress_grading(f, "exp");
  const auto fb = buckets(f, g.cap);
  const auto top = static_cast<std::size_t>(g.cap.cap);
  std::vector<std::vector<std::pair<Monomial, Rational>>> eb(top + 1);
  eb[0].emplace_back(Monomial{}, Rational(1));
  Series result = Series::constant(1, f.policy());
  for (std::size_t d = 1; d <= top; ++d) {
    Series level(f.policy());
    for (std::size_t j = 1; j <= d; ++j) {
      if (fb[j].empty() || eb[d - j].empty()) continue;
      accumulate_product(level, fb[j], eb[d - j], fraction(static_cast<long>(j), static_cast<long>(d)));
    }
    eb[d] = as_vector(level);
    result += level;
  }
  return result;
}

// (1+f) D(L) = D(f):  L_d = f_d - (1/d) sum_{j=1..d-1} j L_j f_{d-j}.
Series log1p(const Series& f) {
  Grading g = progress_grading(f, "log1p");
  const auto fb = buckets(f, g.cap);
  const auto top = static_cast<std::size_t>(g.cap.cap);
  std::vector<std::vector<std::pair<Monomial, Rational>>> lb(top + 1);
  Series result(f.policy());
  for (std::size_t d = 1; d <= top; ++d) {
    Series level(f.policy());
    for (const auto& [m, c] : fb[d]) level.add_term(m, c);
    for (std::size_t j = 1; j < d; ++j) {
      if (lb[j].empty() || fb[d - j].empty()) continue;
      accumulate_product(level, lb[j], fb[d - j],
                         fraction(-static_cast<long>(j), static_cast<long>(d)));
    }
    lb[d] = as_vector(level);
    result += level;
  }
  return result;
}

Series substitute_frobenius(const Series& f, int k, FrobeniusMode mode) {
  if (k < 1) throw std::invalid_argument("substitute_frobenius: k must be positive");
  Series r(f.policy());
  for (const auto& [m, c] : f.terms()) {
    Monomial out;
    if (mode == FrobeniusMode::q_with_u) {
      int aux = m.aux();
      for (auto [i, e] : m.powers(Family::q)) {
        out = out * Monomial::q(k * i, e);
        aux += k * i * e;
      }
      for (auto [i, e] : m.powers(Family::p)) out = out * Monomial::p(i, e);
      out = out.with_aux(aux);
    } else {
      for (auto [i, e] : m.powers(Family::q)) out = out * Monomial::q(i, e);
      for (auto [i, e] : m.powers(Family::p)) out = out * Monomial::p(i * k, e);
      out = out.with_aux(m.aux() * k);
    }
    r.add_term(out, c);
  }
  return r;
}

Partition p_partition(const Monomial& m) { return Partition::from_multiplicities(m.powers(Family::p)); }

Monomial p_monomial(const Partition& lambda) {
  Monomial m;
  for (auto [k, mult] : lambda.multiplicities()) m = m * Monomial::p(k, mult);
  return m;
}

Monomial q_monomial(const Partition& mu) {
  Monomial m;
  for (auto [k, mult] : mu.multiplicities()) m = m * Monomial::q(k, mult);
  return m;
}

SymPoly extract(const Series& f, int t, const Partition& mu) {
  SymPoly out;
  const auto target = mu.multiplicities();
  for (const auto& [m, c] : f.terms()) {
    if (m.aux() != 2 * t) continue;
    if (m.powers(Family::q) != target) continue;
    out.add_term(p_partition(m), c);
  }
  return out;
}

}  // namespace mgeuler

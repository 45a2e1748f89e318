#include "mgeuler/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mgeuler/rational.hpp"

namespace mgeuler {

Integer to_integer(const Rational& r, const char* context) {
  if (!is_integral(r)) {
    throw std::domain_error(std::string(context) + ": non-integral value " + r.get_str());
  }
  return r.get_num();
}

std::uint32_t Monomial::pack(Family family, int index, int exponent) {
  if (index < 1 || index > kMaxIndex) {
    throw std::out_of_range("monomial variable index out of range: " + std::to_string(index));
  }
  if (exponent < 1 || exponent > kMaxExponent) {
    throw std::out_of_range("monomial exponent out of range: " + std::to_string(exponent));
  }
  return (static_cast<std::uint32_t>(family) << 31) | (static_cast<std::uint32_t>(index) << 16) |
         static_cast<std::uint32_t>(exponent);
}

void Monomial::recompute_weights() {
  q_weight_ = p_weight_ = 0;
  for (auto e : vars_) {
    (family_of(e) == Family::q ? q_weight_ : p_weight_) += static_cast<long>(index_of(e)) * exponent_of(e);
  }
}

Monomial Monomial::aux_power(int exponent) {
  Monomial m;
  m.aux_ = exponent;
  return m;
}

Monomial Monomial::var(Family family, int index, int exponent) {
  Monomial m;
  if (exponent != 0) m.vars_.push_back(pack(family, index, exponent));
  m.recompute_weights();
  return m;
}

int Monomial::exponent(Family family, int index) const {
  for (auto e : vars_) {
    if (family_of(e) == family && index_of(e) == index) return exponent_of(e);
  }
  return 0;
}

std::vector<std::pair<int, int>> Monomial::powers(Family family) const {
  std::vector<std::pair<int, int>> out;
  for (auto e : vars_) {
    if (family_of(e) == family) out.emplace_back(index_of(e), exponent_of(e));
  }
  return out;
}

int Monomial::max_index(Family family) const {
  int best = 0;
  for (auto e : vars_) {
    if (family_of(e) == family) best = std::max(best, index_of(e));
  }
  return best;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.aux_ = aux_ + other.aux_;
  r.vars_.reserve(vars_.size() + other.vars_.size());
  auto a = vars_.begin();
  auto b = other.vars_.begin();
  while (a != vars_.end() && b != other.vars_.end()) {
    if (key_of(*a) < key_of(*b)) {
      r.vars_.push_back(*a++);
    } else if (key_of(*b) < key_of(*a)) {
      r.vars_.push_back(*b++);
    } else {
      int e = exponent_of(*a) + exponent_of(*b);
      if (e > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
      r.vars_.push_back((*a & 0xffff0000u) | static_cast<std::uint32_t>(e));
      ++a;
      ++b;
    }
  }
  r.vars_.insert(r.vars_.end(), a, vars_.end());
  r.vars_.insert(r.vars_.end(), b, other.vars_.end());
  r.q_weight_ = q_weight_ + other.q_weight_;
  r.p_weight_ = p_weight_ + other.p_weight_;
  return r;
}

Monomial Monomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative monomial power");
  if (k == 0) return {};
  Monomial r;
  r.aux_ = aux_ * k;
  r.vars_.reserve(vars_.size());
  for (auto e : vars_) r.vars_.push_back(pack(family_of(e), index_of(e), exponent_of(e) * k));
  r.q_weight_ = q_weight_ * k;
  r.p_weight_ = p_weight_ * k;
  return r;
}

Monomial Monomial::with_aux(int exponent) const {
  Monomial r = *this;
  r.aux_ = exponent;
  return r;
}

Monomial Monomial::drop(Family family, int index) const {
  Monomial r;
  r.aux_ = aux_;
  r.vars_.reserve(vars_.size());
  for (auto e : vars_) {
    if (!(family_of(e) == family && index_of(e) == index)) r.vars_.push_back(e);
  }
  r.recompute_weights();
  return r;
}

Monomial Monomial::without_family(Family family) const {
  Monomial r;
  r.aux_ = aux_;
  for (auto e : vars_) {
    if (family_of(e) != family) r.vars_.push_back(e);
  }
  r.recompute_weights();
  return r;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the aux exponent and the packed entries.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint32_t>(aux_));
  for (auto e : vars_) mix(e);
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << '*';
    first = false;
  };
  if (aux_ != 0) {
    sep();
    os << "x^" << aux_;
  }
  for (auto e : vars_) {
    sep();
    os << (family_of(e) == Family::q ? 'q' : 'p') << index_of(e);
    if (exponent_of(e) != 1) os << '^' << exponent_of(e);
  }
  if (first) os << '1';
  return os.str();
}

}  // namespace mgeuler

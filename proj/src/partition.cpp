#include "mgeuler/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mgeuler {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::from_multiplicities(const std::vector<std::pair<int, int>>& mults) {
  std::vector<int> parts;
  for (auto [k, m] : mults) {
    if (m < 0) throw std::invalid_argument("negative multiplicity");
    parts.insert(parts.end(), m, k);
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    if (!out.empty() && out.back().first == *it) {
      ++out.back().second;
    } else {
      out.emplace_back(*it, 1);
    }
  }
  return out;
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  if (parts_.empty()) return {};
  for (int i = 1; i <= parts_.front(); ++i) {
    conj.push_back(static_cast<int>(
        std::count_if(parts_.begin(), parts_.end(), [i](int p) { return p >= i; })));
  }
  return Partition(std::move(conj));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ']';
  return os.str();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

Integer centralizer_order(const Partition& mu) {
  Integer z = 1;
  for (auto [k, m] : mu.multiplicities()) {
    Integer km;
    mpz_ui_pow_ui(km.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
    z *= km * fact;
  }
  return z;
}

SymPoly SymPoly::constant(const Rational& c) { return power_sum(Partition{}, c); }

SymPoly SymPoly::power_sum(const Partition& lambda, const Rational& c) {
  SymPoly f;
  f.add_term(lambda, c);
  return f;
}

Rational SymPoly::coefficient(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void SymPoly::add_term(const Partition& lambda, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

bool SymPoly::is_homogeneous(int n) const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [n](const auto& kv) { return kv.first.size() == n; });
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
  for (const auto& [lambda, c] : other.coeffs_) add_term(lambda, c);
  return *this;
}

SymPoly SymPoly::operator+(const SymPoly& other) const {
  SymPoly r = *this;
  r += other;
  return r;
}

SymPoly SymPoly::operator-(const SymPoly& other) const { return *this + other * Rational(-1); }

SymPoly SymPoly::operator*(const Rational& c) const {
  SymPoly r;
  if (c == 0) return r;
  for (const auto& [lambda, a] : coeffs_) r.coeffs_.emplace(lambda, a * c);
  return r;
}

std::string SymPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.get_str() << ")*p" << lambda.to_string();
  }
  return os.str();
}

Integer SchurPoly::coefficient(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

void SchurPoly::add_term(const Partition& lambda, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

}  // namespace mgeuler

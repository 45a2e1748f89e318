#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mgeuler/rational.hpp"

namespace mgeuler {

// Integer partition, parts weakly decreasing and positive. The empty
// partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  // Parts may be given in any order; they are sorted. Throws on parts < 1.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // From (part, multiplicity) pairs.
  static Partition from_multiplicities(const std::vector<std::pair<int, int>>& mults);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int multiplicity(int k) const;
  // (part, multiplicity), ascending by part.
  std::vector<std::pair<int, int>> multiplicities() const;

  // Conjugate (transposed Young diagram).
  Partition conjugate() const;

  // "[2,1,1]"; the empty partition is "[]".
  std::string to_string() const;

  // Lexicographic on the parts sequence.
  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// All partitions of n in descending lexicographic order.
std::vector<Partition> partitions_of(int n);

// Centralizer order z_mu = prod_k k^{m_k} m_k!.
Integer centralizer_order(const Partition& mu);

// Symmetric function in the power-sum basis: sum_lambda a_lambda p^lambda.
class SymPoly {
 public:
  using Map = std::map<Partition, Rational>;

  SymPoly() = default;
  static SymPoly constant(const Rational& c);
  static SymPoly power_sum(const Partition& lambda, const Rational& c = 1);

  const Map& coeffs() const { return coeffs_; }
  Rational coefficient(const Partition& lambda) const;
  void add_term(const Partition& lambda, const Rational& c);
  bool is_zero() const { return coeffs_.empty(); }
  // True when every indexing partition has size n (the zero polynomial is
  // homogeneous of every degree).
  bool is_homogeneous(int n) const;

  SymPoly& operator+=(const SymPoly& other);
  SymPoly operator+(const SymPoly& other) const;
  SymPoly operator-(const SymPoly& other) const;
  SymPoly operator*(const Rational& c) const;

  std::string to_string() const;

  friend bool operator==(const SymPoly&, const SymPoly&) = default;

 private:
  Map coeffs_;
};

// Symmetric function in the Schur basis with integer coefficients.
class SchurPoly {
 public:
  using Map = std::map<Partition, Integer>;

  SchurPoly() = default;
  const Map& coeffs() const { return coeffs_; }
  Integer coefficient(const Partition& lambda) const;
  void add_term(const Partition& lambda, const Integer& c);
  bool is_zero() const { return coeffs_.empty(); }

  friend bool operator==(const SchurPoly&, const SchurPoly&) = default;

 private:
  Map coeffs_;
};

}  // namespace mgeuler

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace mgeuler {

// The two infinite variable families q_1, q_2, ... and p_1, p_2, ...
enum class Family : std::uint8_t { q = 0, p = 1 };

// A monomial aux^a * prod q_i^{m_i} * prod p_j^{n_j}.
//
// The auxiliary exponent may be negative; it stands for u in the forest
// series and for hbar in the graph series. Variable powers are stored packed
// and sorted by (family, index); absent variables have exponent zero.
class Monomial {
 public:
  static constexpr int kMaxIndex = (1 << 15) - 1;
  static constexpr int kMaxExponent = (1 << 16) - 1;

  Monomial() = default;

  static Monomial aux_power(int exponent);
  static Monomial var(Family family, int index, int exponent = 1);
  static Monomial q(int index, int exponent = 1) { return var(Family::q, index, exponent); }
  static Monomial p(int index, int exponent = 1) { return var(Family::p, index, exponent); }

  int aux() const { return aux_; }
  int exponent(Family family, int index) const;

  // (index, exponent) pairs of one family, ascending by index.
  std::vector<std::pair<int, int>> powers(Family family) const;

  // Sum of index * exponent over the family.
  long weight(Family family) const { return family == Family::q ? q_weight_ : p_weight_; }
  long q_weight() const { return q_weight_; }
  long p_weight() const { return p_weight_; }

  // Largest index present in the family, 0 when none.
  int max_index(Family family) const;

  bool is_one() const { return aux_ == 0 && vars_.empty(); }

  Monomial operator*(const Monomial& other) const;
  Monomial pow(int k) const;

  Monomial with_aux(int exponent) const;
  Monomial drop(Family family, int index) const;
  // Keeps aux and the other family, clears the given family.
  Monomial without_family(Family family) const;

  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial&, const Monomial&) = default;

 private:
  static std::uint32_t pack(Family family, int index, int exponent);
  void recompute_weights();
  static std::uint32_t key_of(std::uint32_t entry) { return entry >> 16; }
  static int index_of(std::uint32_t entry) { return static_cast<int>((entry >> 16) & 0x7fff); }
  static Family family_of(std::uint32_t entry) { return static_cast<Family>(entry >> 31); }
  static int exponent_of(std::uint32_t entry) { return static_cast<int>(entry & 0xffff); }

  int aux_ = 0;
  boost::container::small_vector<std::uint32_t, 8> vars_;
  // Cached weights; always determined by vars_.
  long q_weight_ = 0;
  long p_weight_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace mgeuler

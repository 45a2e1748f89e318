#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "mgeuler/partition.hpp"
#include "mgeuler/rational.hpp"
#include "mgeuler/series.hpp"

namespace mgeuler {

// (+) computes e_{S_n}(MG_{g,n}); (-) the twisted ("odd") version.
enum class OrientationSign { plus, minus };

inline int sign_value(OrientationSign s) { return s == OrientationSign::plus ? 1 : -1; }
const char* to_string(OrientationSign s);

// m!! for m >= -1, with (-1)!! = 0!! = 1.
Integer double_factorial(int m);

// Signed count of fixed-point-free involutions commuting with a permutation
// of cycle type [k^l].
Integer eta_kl(OrientationSign sign, int k, int l);
// Product of eta_kl over the multiplicities of mu.
Integer eta_partition(OrientationSign sign, const Partition& mu);

// Range covered by a run with parameter chi: every (g, n) with 0 <= g <= chi,
// 0 <= n <= chi and 2g - 2 + n > 0.
bool in_output_range(int chi, int g, int n);

// Series policies for a run. The forest series F is graded by
// 3*deg_u + 4*deg_p (= 6t + 4n at u^{2t}, the bound on |mu|), the graph
// series E/e by 3*deg_hbar + 2*deg_p. Both gradings are nonnegative on every
// term, so truncating by them is exact.
TruncationPolicy forest_policy(int chi);
TruncationPolicy graph_policy(int chi);

// V(q) up to weighted q-degree q_cap.
Series build_V(long q_cap);

// The argument of the exponential defining F (before exponentiation).
Series build_F_exponent(OrientationSign sign, int chi);

// F^{+-}(u, q, p), fully expanded under forest_policy(chi).
Series build_F(OrientationSign sign, int chi);

// ee_{t,n} = sum_mu eta_mu sum_{lambda |- n} p^lambda [u^{2t} q^mu p^lambda] F.
SymPoly compute_ee(OrientationSign sign, int t, int n, const Series& F);

using EeTable = std::map<std::pair<int, int>, SymPoly>;

// (t, n) pairs needed by a run with parameter chi.
std::vector<std::pair<int, int>> ee_range(int chi);

enum class ExpansionMethod {
  // Expand F completely, then contract q against eta.
  direct,
  // Multiply the factors exp(c m) of F in order of decreasing largest q-index
  // and contract each q_a as soon as no remaining factor contains it. Never
  // materializes F.
  contracted,
};

EeTable compute_ee_table(OrientationSign sign, int chi,
                         ExpansionMethod method = ExpansionMethod::contracted);

// E^{+-}(hbar, p) = sum ee_{t,n} (+-hbar)^t; throws when ees misses a pair of
// ee_range(chi).
Series assemble_E(OrientationSign sign, int chi, const EeTable& ees);

// sum_k mu(k)/k log E(hbar^k, p_[k]); E must have constant term 1.
Series plethystic_log(const Series& E);

// e_{S_n}(F^{+-}_{g,n}) read off e^{+-}: the p-degree-n part of the
// coefficient of hbar^{g-1}, times (+-1)^{g-1}.
SymPoly equivariant_euler(OrientationSign sign, int g, int n, const Series& e);

struct PipelineConfig {
  int chi = 2;
  std::vector<OrientationSign> signs{OrientationSign::plus, OrientationSign::minus};
  ExpansionMethod method = ExpansionMethod::contracted;
};

struct EntryKey {
  OrientationSign sign;
  int g;
  int n;
  friend auto operator<=>(const EntryKey&, const EntryKey&) = default;
};

struct Scalars {
  Integer full;       // n! * f|_{p=(1,0,0,...)}
  Integer invariant;  // f|_{p=(1,1,1,...)}
  friend bool operator==(const Scalars&, const Scalars&) = default;
};

struct EulerTable {
  int chi = 0;
  std::vector<OrientationSign> signs;
  std::map<EntryKey, SymPoly> equivariant;
  std::map<EntryKey, SchurPoly> schur;
  std::map<EntryKey, Scalars> scalars;

  bool has(OrientationSign sign, int g, int n) const {
    return equivariant.count({sign, g, n}) != 0;
  }
};

EulerTable run(const PipelineConfig& config);

}  // namespace mgeuler

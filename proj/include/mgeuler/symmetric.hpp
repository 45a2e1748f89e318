#pragma once

#include <cstdint>
#include <string>

#include "mgeuler/partition.hpp"
#include "mgeuler/rational.hpp"

namespace mgeuler {

// Number-theoretic Moebius function, k >= 1.
int moebius(int k);

// Irreducible character chi^lambda evaluated at cycle type mu, by the
// Murnaghan-Nakayama border-strip recursion. Memoized per thread.
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

// chi^lambda(1^n).
std::int64_t dim_irrep(const Partition& lambda);

// n! / prod(hook lengths); independent of mn_character.
Integer hook_length_dimension(const Partition& lambda);

// Power-sum to Schur basis via p^mu = sum_lambda chi^lambda(mu) s_lambda.
// f must be homogeneous; throws std::domain_error on a non-integral Schur
// coefficient.
SchurPoly to_schur(const SymPoly& f);

// Schur to power-sum basis: s_lambda = sum_mu chi^lambda(mu)/z_mu p^mu.
SymPoly from_schur(const SchurPoly& s);

// n! * f|_{p_1=1, p_k=0 (k>=2)}.
Integer specialize_exclam(const SymPoly& f, int n);

// f|_{p_k=1 for all k}.
Rational specialize_ones(const SymPoly& f);

// "-s[2,1,1]+s[2,2]+s[4]": terms ascending by partition (lexicographic),
// coefficient written as "c*" unless it is +-1. A polynomial supported on
// the empty partition renders as its integer; the zero polynomial as "0".
std::string render_schur(const SchurPoly& s);

}  // namespace mgeuler

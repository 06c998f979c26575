#pragma once

#include <utility>
#include <vector>

#include "weylsum/localize.hpp"

namespace weylsum {

enum class TautBundle { Sub, Quot };

/* G(k, n): k-planes in C^n, realized as the family-A space U(n)/(U(k) x
   U(n-k)).  The first k y-variables carry the tautological subbundle, the
   rest the quotient bundle. */
struct GrassmannSpec {
  int k = 0;
  int n = 0;
  SpaceSpec space;

  int dim() const { return k * (n - k); }
};

// Requires 0 < k < n.
GrassmannSpec grassmannian(int k, int n);

// c_r of the chosen tautological bundle; 0 <= r <= bundle rank.
Polynomial chern(const GrassmannSpec& spec, TautBundle bundle, int r);

/* Fixed points are the coordinate k-planes: the pair (I, J) of complementary
   index sets (1-based, I increasing for minimal representatives). */
std::pair<std::vector<int>, std::vector<int>> multi_index(const GrassmannSpec& spec,
                                                          const CosetRep& rep);

/* Characteristic number of prod_r c_r(S)^{m[r-1]} via the localization
   engine.  Requires sum r*m_r = k(n-k). */
Rational char_number(const GrassmannSpec& spec, const std::vector<int>& m, int threads = 1);

/* The same number summed directly over increasing multi-indices, one
   unreduced rational-function term per coordinate plane.  Independent of the
   coset machinery; the two routes must agree. */
std::vector<RatFunc> char_number_terms(const GrassmannSpec& spec, const std::vector<int>& m);
Rational char_number_direct(const GrassmannSpec& spec, const std::vector<int>& m, int threads = 1);

// Degree of the Pluecker embedding: (k(n-k))! * prod_{i<k} i! / (n-k+i)!.
BigInt plucker_degree(int k, int n);

}  // namespace weylsum

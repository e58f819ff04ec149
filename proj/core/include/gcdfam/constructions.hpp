// Deterministic constructions of families with bounded pairwise GCD degree:
// the general lower-bound construction over any prime field and the maximal
// construction over GF(2) for GCD degree at most 1.
#ifndef GCDFAM_CONSTRUCTIONS_HPP
#define GCDFAM_CONSTRUCTIONS_HPP

#include "gcdfam/family.hpp"
#include "gcdfam/gf_poly.hpp"

namespace gcdfam {

struct ConstructionParams {
  FieldChar field;
  int n;  // degree of every member
  int d;  // pairwise GCD degree bound, 0 <= d < n/2
};

// Produces a family whose pairwise GCD degrees are all <= d, of size exactly
// lower_bound_cardinality(field, n, d). Every free choice is resolved as
// "canonically first (unused)", so identical parameters give byte-identical
// families. The steps:
//   1. every irreducible of degree n;
//   2. for i = 1..d, the canonically first g of degree i times every
//      irreducible h of degree n-i (g reused: its degree is at most d);
//   3. for i = d+1..floor((n-1)/2), each irreducible g of degree i times the
//      first not-yet-used irreducible h of degree n-i;
//   4. for even n, g^2 for every irreducible g of degree n/2;
//   5. for i = 1..d, g^floor(n/i) times the first irreducible of degree
//      n mod i (the constant 1 when i divides n) for every g of degree i.
// The steps must produce pairwise distinct polynomials; the implementation
// asserts the final size against the closed form instead of deduplicating.
Family construct_lower_bound(const ConstructionParams& params);

// The GF(2) specialization for GCD degree <= 1, built from its own step
// list: every irreducible of degree n; (x+1)*g for every irreducible g of
// degree n-1; the paired products of step 3 above for i = 2..floor((n-1)/2);
// the squares of degree-n/2 irreducibles for even n; and (x+1)^n.
// Size is exactly maximal_cardinality_gf2_d1(n). Requires n >= 3.
Family construct_maximal_gf2(int n);

}  // namespace gcdfam

#endif  // GCDFAM_CONSTRUCTIONS_HPP

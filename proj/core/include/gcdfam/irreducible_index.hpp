// Enumeration, ordering, counting and caching of monic irreducible
// polynomials per degree, restricted to nonzero constant term (the count I_k
// of degree-1 irreducibles is p-1 because x is excluded; from degree 2 up the
// restriction is vacuous).
#ifndef GCDFAM_IRREDUCIBLE_INDEX_HPP
#define GCDFAM_IRREDUCIBLE_INDEX_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gcdfam/gf_poly.hpp"

namespace gcdfam {

using Count = boost::multiprecision::cpp_int;

// Enumeration is refused beyond these limits; the counting formulas have no
// such cap since they never materialize polynomials.
inline constexpr int kDefaultDegreeCap = 24;
inline constexpr std::uint64_t kMaxSieveCandidates = std::uint64_t{1} << 24;

// Moebius function mu(m): 0 when m has a squared prime factor, otherwise
// (-1)^(number of prime factors). Throws on m = 0.
int mobius(std::uint64_t m);

// Number of all monic irreducibles of degree k over GF(p):
// (1/k) * sum over m | k of mu(m) * p^(k/m). Exact integer arithmetic.
Count gauss_count(FieldChar field, int k);

// Count restricted to nonzero constant term: 1 for k = 0 (the constant 1,
// a convention used by the power-step of the lower-bound construction),
// p - 1 for k = 1, and the unrestricted count for k >= 2.
Count restricted_count(FieldChar field, int k);

// All monic irreducibles of degree k with nonzero constant term, canonically
// ordered. Sieve: every candidate is trial-divided by the irreducibles of
// degree <= k/2.
std::vector<Poly> enumerate_irreducibles(FieldChar field, int k);

// Per-field cache of enumerated irreducibles and their counts. Lists are
// built on demand, lowest degree first, and never change once built.
class IrreducibleIndex {
 public:
  explicit IrreducibleIndex(FieldChar field, int degree_cap = kDefaultDegreeCap);

  FieldChar field() const noexcept { return field_; }
  int degree_cap() const noexcept { return degree_cap_; }

  // Builds degrees 1..k as needed. Throws when k exceeds the degree cap or
  // the candidate space exceeds kMaxSieveCandidates.
  const std::vector<Poly>& irreducibles(int k);

  Count count(int k) const { return restricted_count(field_, k); }

 private:
  void ensure(int k);

  FieldChar field_;
  int degree_cap_;
  std::vector<std::vector<Poly>> lists_;  // index = degree - 1
  int built_upto_ = 0;
};

// Process-wide shared index, used by the trial-division factorization in
// gf_poly. Thread-safe; returned lists are immutable once built.
const std::vector<Poly>& shared_irreducibles(FieldChar field, int k);

}  // namespace gcdfam

#endif  // GCDFAM_IRREDUCIBLE_INDEX_HPP

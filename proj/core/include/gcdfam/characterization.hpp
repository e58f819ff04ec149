// Certificate checker for maximal families over GF(2) with pairwise GCD
// degree at most 1, built around the map that sends a reducible member to
// its lowest-degree irreducible factor after one linear factor x+1 (if any)
// has been divided out. That map is injective on any maximal family minus
// the degree-n irreducibles, which yields a clause-by-clause maximality
// characterization.
#ifndef GCDFAM_CHARACTERIZATION_HPP
#define GCDFAM_CHARACTERIZATION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcdfam/family.hpp"
#include "gcdfam/gf_poly.hpp"

namespace gcdfam {

// lowest_factor(f) when x+1 does not divide f, lowest_factor(f/(x+1))
// otherwise. Defined over GF(2) for polynomials of degree >= 2.
Poly stripped_lowest_factor(const Poly& f);

// The shape a family member divisible by some irreducible g of middle degree
// (1 < deg g < n/2) must take in a maximal family.
enum class DivisorForm {
  pure_power,                    // g^a with a*deg(g) = n
  linear_times_power,            // (x+1) * g^a with a*deg(g) = n-1
  power_times_companion,         // g^a * h, a*deg(g) < n/2, h irreducible
  linear_times_power_companion,  // (x+1) * g^a * h, a*deg(g) < n/2 + 1
};

const char* to_string(DivisorForm form);

// Result of the middle-degree clause for one irreducible g.
struct MiddleCheck {
  explicit MiddleCheck(Poly g_) : g(std::move(g_)) {}

  Poly g;
  std::vector<Poly> divisible_members;  // members of the family g divides
  bool unique = false;                  // exactly one member is divisible by g
  std::optional<DivisorForm> form;      // shape of that member, when matched
  std::optional<Poly> companion;        // the h factor for the last two forms
  bool companion_unique = true;         // h divides no other member
  std::string note;                     // factorization detail on a mismatch

  bool ok() const { return unique && form.has_value() && companion_unique; }
};

// Clause-by-clause evidence for the maximality check of a family in the
// GCD-degree-1 setting over GF(2).
struct CertificateReport {
  int n = 0;
  bool member = false;  // the family's pairwise GCD degrees are all <= 1
  GcdProfile gcd_profile;

  bool contains_all_irreducibles = false;     // every degree-n irreducible present
  std::optional<bool> squares_clause;         // g^2 present for deg g = n/2; n even only
  std::vector<MiddleCheck> middle;            // one entry per g with 1 < deg g < n/2
  bool linear_clause = false;                 // (x+1)^n present, or (x+1)^a * h
                                              // with 1 < a < n/2 and h irreducible

  bool middle_clause() const;
  // conjunction of the four clauses (squares counting as true when n is odd)
  bool clauses_ok() const;
  // clauses_ok() and membership: a family outside the GCD bound cannot be a
  // maximal family within it
  bool verdict() const;
};

// Evaluates every clause literally for a family over GF(2) with n >= 3.
CertificateReport check_certificate(const Family& family);

// True iff the stripped-lowest-factor map, restricted to the family minus
// its degree-n irreducibles, is injective and lands in the irreducibles of
// degree <= n/2 or exactly n-1. Throws when the family violates the pairwise
// GCD bound of 1, which the underlying argument assumes.
bool check_stripped_factor_injectivity(const Family& family);

}  // namespace gcdfam

#endif  // GCDFAM_CHARACTERIZATION_HPP

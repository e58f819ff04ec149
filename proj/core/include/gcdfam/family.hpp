// Families of monic degree-n polynomials with nonzero constant term over
// GF(p), the pairwise-GCD-degree profile that decides membership in the
// bounded-GCD families, the closed-form cardinality expressions, and the
// family file format.
#ifndef GCDFAM_FAMILY_HPP
#define GCDFAM_FAMILY_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "gcdfam/gf_poly.hpp"
#include "gcdfam/irreducible_index.hpp"

namespace gcdfam {

// A set of monic degree-n polynomials with nonzero constant term over GF(p).
// Members are kept deduplicated in canonical order.
class Family {
 public:
  Family(FieldChar field, int n);
  Family(FieldChar field, int n, const std::vector<Poly>& members);

  FieldChar field() const noexcept { return field_; }
  int degree() const noexcept { return n_; }

  // Validates the member (monic, degree n, nonzero constant term, same
  // field); returns false when it was already present.
  bool insert(const Poly& f);
  bool erase(const Poly& f);

  bool contains(const Poly& f) const;
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<Poly>& members() const noexcept { return members_; }

  friend bool operator==(const Family& a, const Family& b);

 private:
  FieldChar field_;
  int n_;
  std::vector<Poly> members_;  // sorted, unique
};

// Largest pairwise GCD degree over all unordered pairs of distinct members,
// with one pair achieving it. Families with fewer than two members report
// max_degree 0 and carry no witness.
struct GcdProfile {
  int max_degree = 0;
  std::optional<std::pair<Poly, Poly>> witness;
};

// All strategies are exact. The direct pairwise scan is the default for
// small families; large families group members by the factors they share
// with another member, which is linear-ish when sharing is sparse.
enum class GcdScanStrategy { automatic, direct, shared_factors };

GcdProfile max_pairwise_gcd_degree(const Family& family,
                                   GcdScanStrategy strategy = GcdScanStrategy::automatic);

// True iff every pairwise GCD has degree <= d. Throws unless 0 <= d <= n.
bool is_member(const Family& family, int d);

// Cardinality of the deterministic lower-bound construction:
// sum_{i=1..floor(n/2)} I_i + sum_{i=n-d..n-1} I_i + I_n, with the counts
// restricted to nonzero constant term. Requires 0 <= d < n/2; the adapted
// construction for d >= n/2 is not specified, so that range is rejected.
Count lower_bound_cardinality(FieldChar field, int n, int d);

// Size of a maximum family over GF(2) with pairwise GCD degree <= 1:
// sum_{i=1..floor(n/2)} I_i + I_{n-1} + I_n. Requires n >= 3; at n = 2 the
// formula exceeds the two available polynomials, so the degenerate case is
// rejected and left to the brute-force oracle.
Count maximal_cardinality_gf2_d1(int n);

// --- family file format ----------------------------------------------------
//
// First line "q=<p> n=<n>", then one polynomial per line in canonical digit
// form, canonically sorted on output. '#' starts a comment line; blank lines
// are ignored on input. Human-readable polynomials are accepted on input.

Family read_family(std::istream& in);
Family read_family_file(const std::filesystem::path& path);
void write_family(const Family& family, std::ostream& out);
void write_family_file(const Family& family, const std::filesystem::path& path);

}  // namespace gcdfam

#endif  // GCDFAM_FAMILY_HPP

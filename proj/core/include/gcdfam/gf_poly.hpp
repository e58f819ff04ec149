// Exact univariate polynomial arithmetic over a prime field GF(p):
// construction, ring operations, Euclidean division, GCD, trial-division
// factorization and the lowest-degree-factor map.
#ifndef GCDFAM_GF_POLY_HPP
#define GCDFAM_GF_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gcdfam {

// Characteristic of a prime field. Primality is checked at construction.
class FieldChar {
 public:
  explicit FieldChar(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }

  friend bool operator==(FieldChar a, FieldChar b) noexcept { return a.p_ == b.p_; }
  friend bool operator!=(FieldChar a, FieldChar b) noexcept { return a.p_ != b.p_; }

 private:
  std::uint32_t p_;
};

// Dense polynomial over GF(p). Coefficient i is the coefficient of x^i.
// Storage is normalized: the highest stored coefficient is nonzero, and the
// zero polynomial is an empty sequence whose degree is the kZeroDegree
// sentinel (never an ordinary integer).
class Poly {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  // Reduces the given integer coefficients mod p and strips trailing zeros.
  Poly(FieldChar field, std::span<const std::int64_t> coeffs);
  Poly(FieldChar field, std::initializer_list<std::int64_t> coeffs);

  static Poly zero(FieldChar field) { return Poly(field, {}); }
  static Poly one(FieldChar field) { return Poly(field, {1}); }
  static Poly x(FieldChar field) { return Poly(field, {0, 1}); }

  // Adopts already-reduced coefficients (all < p, no trailing zero).
  static Poly from_reduced(FieldChar field, std::vector<std::uint32_t> coeffs);

  FieldChar field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_.value(); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  int degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  std::uint32_t coeff(int i) const noexcept {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(i)]
                                                            : 0u;
  }
  std::span<const std::uint32_t> coeffs() const noexcept { return coeffs_; }

  std::uint32_t constant_term() const noexcept { return coeff(0); }
  std::uint32_t leading_coeff() const noexcept { return coeffs_.empty() ? 0u : coeffs_.back(); }
  bool is_monic() const noexcept { return leading_coeff() == 1; }

  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) noexcept { return !(a == b); }

 private:
  Poly(FieldChar field, std::vector<std::uint32_t> reduced, int /*tag*/)
      : field_(field), coeffs_(std::move(reduced)) {}

  FieldChar field_;
  std::vector<std::uint32_t> coeffs_;
};

// Total order used everywhere a canonical order is needed (enumeration,
// factor sorting, tie-breaking, file output): lower degree first, then
// coefficient sequences compared from the highest-degree coefficient down.
// For equal-degree polynomials this is ascending order of the base-p value
// sum(c_i * p^i). The zero polynomial sorts before everything.
bool canonical_less(const Poly& a, const Poly& b);

struct CanonicalLess {
  bool operator()(const Poly& a, const Poly& b) const { return canonical_less(a, b); }
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

// Euclidean division: a = quotient * b + remainder with deg remainder < deg b.
// Throws on a zero divisor or mismatched characteristic.
DivMod divmod(const Poly& a, const Poly& b);

// Remainder-only convenience.
Poly mod(const Poly& a, const Poly& b);

// True iff divisor divides dividend exactly.
bool divides(const Poly& divisor, const Poly& dividend);

// Division known to be exact; throws std::domain_error on a nonzero remainder.
Poly exact_div(const Poly& a, const Poly& b);

// Scales a nonzero polynomial to leading coefficient 1.
Poly monic(const Poly& a);

// Monic greatest common divisor. gcd(a, 0) = monic(a); both zero is an error.
Poly gcd(const Poly& a, const Poly& b);

// f^k by repeated product; pow(f, 0) = 1.
Poly pow(const Poly& f, std::uint64_t k);

inline Poly operator+(const Poly& a, const Poly& b) { return add(a, b); }
inline Poly operator-(const Poly& a, const Poly& b) { return sub(a, b); }
inline Poly operator-(const Poly& a) { return neg(a); }
inline Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

// Complete factorization into monic irreducibles with multiplicities,
// sorted canonically (ascending degree, then canonical order).
struct Factorization {
  std::vector<std::pair<Poly, int>> factors;
};

// Trial-division irreducibility test. Degree-1 polynomials are irreducible;
// otherwise f is divided by every irreducible of degree <= deg(f)/2.
// Throws on constant or zero input.
bool is_irreducible(const Poly& f);

// Factors any nonzero polynomial of degree >= 1. The returned factors are
// monic; their product times the input's leading coefficient equals the input.
Factorization factorize(const Poly& f);

// The irreducible factor of lowest degree, ties broken by canonical order.
Poly lowest_factor(const Poly& f);

// --- text forms -----------------------------------------------------------
//
// Canonical digit form: coefficients from the constant term upward, one
// base-p digit per coefficient ('0'-'9' then 'a'-'z'; requires p <= 37),
// e.g. over GF(2) "10011" is 1 + x^3 + x^4. The prefixed form "p2:10011"
// carries the field when context does not fix it.

std::string to_digit_string(const Poly& f);
std::string to_prefixed_string(const Poly& f);

// Human-readable rendering, e.g. "x^4+x^3+1", "2x+1", "0".
std::string to_human_string(const Poly& f);

// Parses either the canonical digit form or the human-readable form, with an
// optional "p<prime>:" prefix (which must agree with the given field).
Poly parse_poly(FieldChar field, std::string_view text);

// Parses text that must carry its own "p<prime>:" prefix.
Poly parse_prefixed_poly(std::string_view text);

}  // namespace gcdfam

#endif  // GCDFAM_GF_POLY_HPP

#include "gcdfam/constructions.hpp"

#include <stdexcept>
#include <string>

#include "gcdfam/irreducible_index.hpp"

namespace gcdfam {

namespace {

void insert_or_fail(Family& family, const Poly& f) {
  if (!family.insert(f)) {
    throw std::logic_error("construction produced a duplicate member: " + to_digit_string(f));
  }
}

void check_size(const Family& family, const Count& expected) {
  if (Count(family.size()) != expected) {
    throw std::logic_error("construction size " + std::to_string(family.size()) +
                           " does not match the closed form " + expected.str());
  }
}

}  // namespace

Family construct_lower_bound(const ConstructionParams& params) {
  const auto [field, n, d] = params;
  if (n < 1) throw std::invalid_argument("construct_lower_bound: n must be >= 1");
  if (d < 0 || 2 * d >= n) {
    throw std::invalid_argument("construct_lower_bound: requires d < n/2");
  }
  Family family(field, n);

  // step 1: every irreducible of degree n
  for (const Poly& f : shared_irreducibles(field, n)) insert_or_fail(family, f);

  // step 2: first g of degree i times every h of degree n-i, for i <= d
  for (int i = 1; i <= d; ++i) {
    const Poly g = shared_irreducibles(field, i).front();
    for (const Poly& h : shared_irreducibles(field, n - i)) insert_or_fail(family, mul(g, h));
  }

  // step 3: each g of degree i paired with the first unused h of degree n-i.
  // Only this step consumes those degrees, so a cursor is the first-unused
  // rule; it cannot run out because the counts are non-decreasing in the
  // degree.
  for (int i = d + 1; i <= (n - 1) / 2; ++i) {
    const auto& gs = shared_irreducibles(field, i);
    const auto& hs = shared_irreducibles(field, n - i);
    if (gs.size() > hs.size()) {
      throw std::logic_error("construct_lower_bound: ran out of unused partners at degree " +
                             std::to_string(n - i));
    }
    for (std::size_t k = 0; k < gs.size(); ++k) {
      insert_or_fail(family, mul(gs[k], hs[k]));
    }
  }

  // step 4: squares of the degree-n/2 irreducibles
  if (n % 2 == 0) {
    for (const Poly& g : shared_irreducibles(field, n / 2)) insert_or_fail(family, mul(g, g));
  }

  // step 5: g^floor(n/i) times the first irreducible of degree n mod i
  for (int i = 1; i <= d; ++i) {
    const int rem = n % i;
    const Poly h = rem == 0 ? Poly::one(field) : shared_irreducibles(field, rem).front();
    for (const Poly& g : shared_irreducibles(field, i)) {
      insert_or_fail(family, mul(pow(g, static_cast<std::uint64_t>(n / i)), h));
    }
  }

  check_size(family, lower_bound_cardinality(field, n, d));
  return family;
}

Family construct_maximal_gf2(int n) {
  if (n < 3) throw std::invalid_argument("construct_maximal_gf2: n must be >= 3");
  const FieldChar f2(2);
  const Poly x_plus_1(f2, {1, 1});
  Family family(f2, n);

  // step 1: every irreducible of degree n
  for (const Poly& f : shared_irreducibles(f2, n)) insert_or_fail(family, f);

  // step 2: (x+1) * g for every irreducible g of degree n-1
  for (const Poly& g : shared_irreducibles(f2, n - 1)) insert_or_fail(family, mul(x_plus_1, g));

  // step 3: each g of degree i paired with the first unused h of degree n-i
  for (int i = 2; i <= (n - 1) / 2; ++i) {
    const auto& gs = shared_irreducibles(f2, i);
    const auto& hs = shared_irreducibles(f2, n - i);
    if (gs.size() > hs.size()) {
      throw std::logic_error("construct_maximal_gf2: ran out of unused partners at degree " +
                             std::to_string(n - i));
    }
    for (std::size_t k = 0; k < gs.size(); ++k) {
      insert_or_fail(family, mul(gs[k], hs[k]));
    }
  }

  // step 4: squares of the degree-n/2 irreducibles
  if (n % 2 == 0) {
    for (const Poly& g : shared_irreducibles(f2, n / 2)) insert_or_fail(family, mul(g, g));
  }

  // step 5: (x+1)^n
  insert_or_fail(family, pow(x_plus_1, static_cast<std::uint64_t>(n)));

  check_size(family, maximal_cardinality_gf2_d1(n));
  return family;
}

}  // namespace gcdfam

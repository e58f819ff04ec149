#include "gcdfam/constructions.hpp"

#include <sstream>
#include <stdexcept>

#include <doctest.h>

#include "gcdfam/irreducible_index.hpp"
#include "gcdfam/oracle.hpp"

using namespace gcdfam;

namespace {

const FieldChar f2(2);
const FieldChar f3(3);

}  // namespace

TEST_SUITE_BEGIN("constructions");

TEST_CASE("degree 3 over GF(2) yields every eligible polynomial") {
  const Family family = construct_maximal_gf2(3);
  CHECK(family.size() == 4);
  CHECK(family == Family(f2, 3, enumerate_universe(f2, 3)));
  CHECK(is_member(family, 1));
}

TEST_CASE("degree 4 over GF(2), worked out by hand") {
  // irreducibles x^4+x+1, x^4+x^3+1, x^4+x^3+x^2+x+1; (x+1)(x^3+x+1);
  // (x+1)(x^3+x^2+1); (x^2+x+1)^2; (x+1)^4
  const Family family = construct_maximal_gf2(4);
  const Family expected(f2, 4,
                        {Poly(f2, {1, 1, 0, 0, 1}), Poly(f2, {1, 0, 0, 1, 1}),
                         Poly(f2, {1, 1, 1, 1, 1}), Poly(f2, {1, 0, 1, 1, 1}),
                         Poly(f2, {1, 1, 1, 0, 1}), Poly(f2, {1, 0, 1, 0, 1}),
                         Poly(f2, {1, 0, 0, 0, 1})});
  CHECK(family == expected);
  CHECK(is_member(family, 1));
  CHECK_FALSE(is_member(family, 0));
}

TEST_CASE("lower bound at d = 0 yields a pairwise coprime family") {
  // degree 5: the six degree-5 irreducibles, (x+1)(x^4+x+1), (x^2+x+1)(x^3+x+1)
  const Family family = construct_lower_bound({f2, 5, 0});
  CHECK(family.size() == 8);
  CHECK(is_member(family, 0));
  for (const Poly& f : enumerate_irreducibles(f2, 5)) CHECK(family.contains(f));
  CHECK(family.contains(mul(Poly(f2, {1, 1}), Poly(f2, {1, 1, 0, 0, 1}))));
  CHECK(family.contains(mul(Poly(f2, {1, 1, 1}), Poly(f2, {1, 1, 0, 1}))));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(construct_lower_bound({f2, 6, 3}), std::invalid_argument);   // d >= n/2
  CHECK_THROWS_AS(construct_lower_bound({f2, 4, -1}), std::invalid_argument);
  CHECK_THROWS_AS(construct_lower_bound({f2, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(construct_maximal_gf2(2), std::invalid_argument);
  CHECK_THROWS_AS(construct_maximal_gf2(0), std::invalid_argument);
}

TEST_CASE("output is a member with the closed-form cardinality across the grid") {
  for (const FieldChar field : {f2, f3}) {
    const int top_n = field.value() == 2 ? 10 : 8;
    for (int n = 1; n <= top_n; ++n) {
      for (int d = 0; 2 * d < n; ++d) {
        CAPTURE(field.value());
        CAPTURE(n);
        CAPTURE(d);
        const Family family = construct_lower_bound({field, n, d});
        CHECK(Count(family.size()) == lower_bound_cardinality(field, n, d));
        CHECK(is_member(family, d));
      }
    }
  }
}

TEST_CASE("the GF(2) specialization coincides with the general construction at d = 1") {
  for (int n = 3; n <= 12; ++n) {
    CHECK(construct_maximal_gf2(n) == construct_lower_bound({f2, n, 1}));
  }
}

TEST_CASE("maximal construction sizes match the closed form") {
  for (int n = 3; n <= 12; ++n) {
    const Family family = construct_maximal_gf2(n);
    CHECK(Count(family.size()) == maximal_cardinality_gf2_d1(n));
    CHECK(is_member(family, 1));
  }
}

TEST_CASE("construction is deterministic, down to the file bytes") {
  const Family a = construct_maximal_gf2(9);
  const Family b = construct_maximal_gf2(9);
  CHECK(a == b);

  std::ostringstream out_a, out_b;
  write_family(a, out_a);
  write_family(b, out_b);
  CHECK(out_a.str() == out_b.str());

  // frozen golden bytes for the hand-checked degree-4 family
  std::ostringstream golden;
  write_family(construct_maximal_gf2(4), golden);
  CHECK(golden.str() == "q=2 n=4\n10001\n11001\n10101\n11101\n10011\n10111\n11111\n");
}

TEST_SUITE_END();

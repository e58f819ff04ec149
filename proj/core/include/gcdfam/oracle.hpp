// Independent brute-force ground truth: enumerate all monic degree-n
// polynomials with nonzero constant term, connect the pairs whose GCD degree
// stays within the bound, and find a maximum family as an exact maximum
// clique of that graph.
#ifndef GCDFAM_ORACLE_HPP
#define GCDFAM_ORACLE_HPP

#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "gcdfam/family.hpp"
#include "gcdfam/gf_poly.hpp"

namespace gcdfam {

// The search is an instrument for desk-scale degrees, not a solver; the
// vertex count (p-1) * p^(n-1) doubles per degree over GF(2).
inline constexpr std::size_t kDefaultVertexCap = 512;

// All monic degree-n polynomials with nonzero constant term, canonically
// ordered. Throws when the count exceeds the cap.
std::vector<Poly> enumerate_universe(FieldChar field, int n,
                                     std::size_t vertex_cap = kDefaultVertexCap);

struct CompatGraph {
  FieldChar field;
  int n;
  int d;
  std::vector<Poly> vertices;                     // canonical order
  std::vector<boost::dynamic_bitset<>> adjacency; // irreflexive, symmetric

  std::size_t size() const noexcept { return vertices.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency[i].test(j); }
};

// Edge (f, g) iff deg(gcd(f, g)) <= d.
CompatGraph build_compat_graph(FieldChar field, int n, int d,
                               std::size_t vertex_cap = kDefaultVertexCap);

struct OracleResult {
  std::size_t size = 0;
  Family witness;
};

// Exact maximum clique by branch and bound with greedy-coloring upper bounds,
// seeded by a greedy clique. The witness is re-verified against the GCD bound
// before it is returned; which optimum is reported may depend on order_seed
// (a nonzero seed shuffles the vertex order first), the size may not.
OracleResult max_family_bruteforce(FieldChar field, int n, int d,
                                   std::size_t vertex_cap = kDefaultVertexCap,
                                   std::uint64_t order_seed = 0);

// Maximum clique of an arbitrary compatibility graph; exposed for tests.
std::vector<std::size_t> max_clique(const CompatGraph& graph, std::uint64_t order_seed = 0);

}  // namespace gcdfam

#endif  // GCDFAM_ORACLE_HPP

#include "gcdfam/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace gcdfam {

std::vector<Poly> enumerate_universe(FieldChar field, int n, std::size_t vertex_cap) {
  if (n < 1) throw std::invalid_argument("enumerate_universe: n must be >= 1");
  const std::uint64_t p = field.value();
  std::uint64_t count = p - 1;
  for (int i = 1; i < n; ++i) {
    if (count > vertex_cap) break;
    count *= p;
  }
  if (count > vertex_cap) {
    throw std::invalid_argument(
        "enumerate_universe: (p-1)*p^(n-1) exceeds the vertex cap of " +
        std::to_string(vertex_cap) + "; lower n or raise the cap");
  }

  std::vector<Poly> universe;
  universe.reserve(count);
  std::uint64_t space = 1;
  for (int i = 0; i < n; ++i) space *= p;
  for (std::uint64_t v = 0; v < space; ++v) {
    if (v % p == 0) continue;  // nonzero constant term
    std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(n) + 1);
    std::uint64_t t = v;
    for (int i = 0; i < n; ++i) {
      coeffs[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    coeffs[static_cast<std::size_t>(n)] = 1;  // monic
    universe.push_back(Poly::from_reduced(field, std::move(coeffs)));
  }
  return universe;
}

CompatGraph build_compat_graph(FieldChar field, int n, int d, std::size_t vertex_cap) {
  if (d < 0 || d > n) throw std::invalid_argument("build_compat_graph: d must lie in [0, n]");
  CompatGraph graph{field, n, d, enumerate_universe(field, n, vertex_cap), {}};
  const std::size_t m = graph.vertices.size();
  graph.adjacency.assign(m, boost::dynamic_bitset<>(m));
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (gcd(graph.vertices[i], graph.vertices[j]).degree() <= d) {
        graph.adjacency[i].set(j);
        graph.adjacency[j].set(i);
      }
    }
  }
  return graph;
}

namespace {

using Bitset = boost::dynamic_bitset<>;

// Branch and bound in the style of Tomita's MCQ: candidates are greedily
// colored, processed from the highest color down, and a branch is cut when
// the clique so far plus the color bound cannot beat the incumbent.
class CliqueSearch {
 public:
  CliqueSearch(const std::vector<Bitset>& adjacency, const std::vector<std::size_t>& order)
      : adjacency_(adjacency), order_(order) {}

  std::vector<std::size_t> run() {
    seed_incumbent();
    Bitset candidates(adjacency_.size());
    candidates.set();
    std::vector<std::size_t> current;
    expand(current, candidates);
    return best_;
  }

 private:
  void seed_incumbent() {
    Bitset allowed(adjacency_.size());
    allowed.set();
    for (std::size_t v : order_) {
      if (allowed.test(v)) {
        best_.push_back(v);
        allowed &= adjacency_[v];
      }
    }
  }

  void expand(std::vector<std::size_t>& current, const Bitset& candidates) {
    // greedy coloring of the candidate set, in static order
    std::vector<Bitset> classes;
    std::vector<std::vector<std::size_t>> class_members;
    for (std::size_t v : order_) {
      if (!candidates.test(v)) continue;
      std::size_t c = 0;
      while (c < classes.size() && classes[c].intersects(adjacency_[v])) ++c;
      if (c == classes.size()) {
        classes.emplace_back(adjacency_.size());
        class_members.emplace_back();
      }
      classes[c].set(v);
      class_members[c].push_back(v);
    }
    std::vector<std::pair<std::size_t, std::size_t>> colored;  // (vertex, color bound)
    for (std::size_t c = 0; c < class_members.size(); ++c) {
      for (std::size_t v : class_members[c]) colored.emplace_back(v, c + 1);
    }

    Bitset remaining = candidates;
    for (std::size_t k = colored.size(); k-- > 0;) {
      const auto [v, bound] = colored[k];
      if (current.size() + bound <= best_.size()) return;
      current.push_back(v);
      Bitset next = remaining & adjacency_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      remaining.reset(v);
    }
  }

  const std::vector<Bitset>& adjacency_;
  const std::vector<std::size_t>& order_;
  std::vector<std::size_t> best_;
};

}  // namespace

std::vector<std::size_t> max_clique(const CompatGraph& graph, std::uint64_t order_seed) {
  const std::size_t m = graph.size();
  if (m == 0) return {};

  std::vector<std::size_t> scan(m);
  std::iota(scan.begin(), scan.end(), std::size_t{0});
  if (order_seed != 0) {
    std::mt19937_64 rng(order_seed);
    std::shuffle(scan.begin(), scan.end(), rng);  // permutes degeneracy tie-breaks
  }

  // smallest-last degeneracy order: repeatedly peel a minimum-degree vertex.
  // Processing its reverse puts the densest core first, which seeds a strong
  // greedy clique and keeps the coloring bound tight.
  std::vector<std::size_t> degree(m);
  for (std::size_t v = 0; v < m; ++v) degree[v] = graph.adjacency[v].count();
  std::vector<char> removed(m, 0);
  std::vector<std::size_t> order;
  order.reserve(m);
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t pick = m;
    for (std::size_t v : scan) {
      if (!removed[v] && (pick == m || degree[v] < degree[pick])) pick = v;
    }
    removed[pick] = 1;
    order.push_back(pick);
    for (std::size_t u = graph.adjacency[pick].find_first(); u != Bitset::npos;
         u = graph.adjacency[pick].find_next(u)) {
      if (!removed[u]) --degree[u];
    }
  }
  std::reverse(order.begin(), order.end());

  CliqueSearch search(graph.adjacency, order);
  return search.run();
}

OracleResult max_family_bruteforce(FieldChar field, int n, int d, std::size_t vertex_cap,
                                   std::uint64_t order_seed) {
  const CompatGraph graph = build_compat_graph(field, n, d, vertex_cap);
  const std::vector<std::size_t> clique = max_clique(graph, order_seed);

  OracleResult result{clique.size(), Family(field, n)};
  for (std::size_t v : clique) result.witness.insert(graph.vertices[v]);
  if (result.witness.size() != clique.size() || !is_member(result.witness, d)) {
    throw std::logic_error("max_family_bruteforce: witness failed re-verification");
  }
  return result;
}

}  // namespace gcdfam

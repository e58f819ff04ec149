#include "gcdfam/family.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gcdfam {

namespace {

void validate_member(const Poly& f, FieldChar field, int n) {
  if (f.field() != field) {
    throw std::invalid_argument("family member has mismatched field characteristic");
  }
  if (f.degree() != n) {
    throw std::invalid_argument("family member " + to_digit_string(f) + " has degree " +
                                std::to_string(f.degree()) + ", expected " + std::to_string(n));
  }
  if (!f.is_monic()) {
    throw std::invalid_argument("family member " + to_digit_string(f) + " is not monic");
  }
  if (f.constant_term() == 0) {
    throw std::invalid_argument("family member " + to_digit_string(f) +
                                " has zero constant term");
  }
}

}  // namespace

Family::Family(FieldChar field, int n) : field_(field), n_(n) {
  if (n < 1) throw std::invalid_argument("family degree must be >= 1");
}

Family::Family(FieldChar field, int n, const std::vector<Poly>& members) : Family(field, n) {
  for (const Poly& f : members) insert(f);
}

bool Family::insert(const Poly& f) {
  validate_member(f, field_, n_);
  auto it = std::lower_bound(members_.begin(), members_.end(), f, CanonicalLess{});
  if (it != members_.end() && *it == f) return false;
  members_.insert(it, f);
  return true;
}

bool Family::erase(const Poly& f) {
  if (f.field() != field_) return false;
  auto it = std::lower_bound(members_.begin(), members_.end(), f, CanonicalLess{});
  if (it == members_.end() || !(*it == f)) return false;
  members_.erase(it);
  return true;
}

bool Family::contains(const Poly& f) const {
  if (f.field() != field_) return false;
  auto it = std::lower_bound(members_.begin(), members_.end(), f, CanonicalLess{});
  return it != members_.end() && *it == f;
}

bool operator==(const Family& a, const Family& b) {
  return a.field_ == b.field_ && a.n_ == b.n_ && a.members_ == b.members_;
}

namespace {

// degree of gcd(a, b) for packed GF(2) polynomials (bit i = coefficient of x^i)
int packed_gcd_degree_gf2(std::uint64_t a, std::uint64_t b) {
  while (a != 0 && b != 0) {
    const int da = 63 - std::countl_zero(a);
    const int db = 63 - std::countl_zero(b);
    if (da >= db) {
      a ^= b << (da - db);
    } else {
      b ^= a << (db - da);
    }
  }
  const std::uint64_t g = a | b;
  return 63 - std::countl_zero(g);
}

GcdProfile scan_packed_gf2(const std::vector<Poly>& members) {
  std::vector<std::uint64_t> packed(members.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::uint64_t bits = 0;
    for (int j = 0; j <= members[i].degree(); ++j) {
      bits |= static_cast<std::uint64_t>(members[i].coeff(j)) << j;
    }
    packed[i] = bits;
  }
  GcdProfile profile;
  profile.witness = {members[0], members[1]};
  for (std::size_t i = 0; i + 1 < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const int deg = packed_gcd_degree_gf2(packed[i], packed[j]);
      if (deg > profile.max_degree) {
        profile.max_degree = deg;
        profile.witness = {members[i], members[j]};
      }
    }
  }
  return profile;
}

GcdProfile scan_generic(const std::vector<Poly>& members) {
  GcdProfile profile;
  profile.witness = {members[0], members[1]};
  for (std::size_t i = 0; i + 1 < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const int deg = gcd(members[i], members[j]).degree();
      if (deg > profile.max_degree) {
        profile.max_degree = deg;
        profile.witness = {members[i], members[j]};
      }
    }
  }
  return profile;
}

// Exact pairwise maximum without the quadratic scan: only factors shared by
// at least two members can contribute to a pairwise GCD, so members can be
// grouped by their multiset of shared factors and the maximum taken over
// pairs of groups. Linear-ish in the family size for the families the
// constructions produce, where only a handful of factors are shared.
GcdProfile scan_by_shared_factors(const std::vector<Poly>& members) {
  std::map<Poly, std::vector<std::size_t>, CanonicalLess> factor_members;
  std::vector<Factorization> factorizations;
  factorizations.reserve(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    factorizations.push_back(factorize(members[i]));
    for (const auto& [q, mult] : factorizations.back().factors) {
      factor_members[q].push_back(i);
    }
  }

  // id and degree for each factor dividing two or more members
  std::map<Poly, int, CanonicalLess> shared_id;
  std::vector<int> shared_degree;
  for (const auto& [q, users] : factor_members) {
    if (users.size() >= 2) {
      shared_id.emplace(q, static_cast<int>(shared_degree.size()));
      shared_degree.push_back(q.degree());
    }
  }

  using Signature = std::vector<std::pair<int, int>>;  // (factor id, multiplicity), sorted
  std::map<Signature, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < members.size(); ++i) {
    Signature sig;
    for (const auto& [q, mult] : factorizations[i].factors) {
      auto it = shared_id.find(q);
      if (it != shared_id.end()) sig.emplace_back(it->second, mult);
    }
    std::sort(sig.begin(), sig.end());
    groups[sig].push_back(i);
  }

  const auto shared_gcd_degree = [&](const Signature& a, const Signature& b) {
    int total = 0;
    std::size_t ia = 0, ib = 0;
    while (ia < a.size() && ib < b.size()) {
      if (a[ia].first < b[ib].first) {
        ++ia;
      } else if (a[ia].first > b[ib].first) {
        ++ib;
      } else {
        total += shared_degree[static_cast<std::size_t>(a[ia].first)] *
                 std::min(a[ia].second, b[ib].second);
        ++ia;
        ++ib;
      }
    }
    return total;
  };

  GcdProfile profile;
  profile.witness = {members[0], members[1]};
  for (auto it = groups.begin(); it != groups.end(); ++it) {
    if (it->second.size() >= 2) {
      const int deg = shared_gcd_degree(it->first, it->first);
      if (deg > profile.max_degree) {
        profile.max_degree = deg;
        profile.witness = {members[it->second[0]], members[it->second[1]]};
      }
    }
    for (auto jt = std::next(it); jt != groups.end(); ++jt) {
      const int deg = shared_gcd_degree(it->first, jt->first);
      if (deg > profile.max_degree) {
        profile.max_degree = deg;
        profile.witness = {members[it->second[0]], members[jt->second[0]]};
      }
    }
  }
  return profile;
}

constexpr std::size_t kPackedScanLimit = 8192;
constexpr std::size_t kGenericScanLimit = 1024;

}  // namespace

GcdProfile max_pairwise_gcd_degree(const Family& family, GcdScanStrategy strategy) {
  const auto& members = family.members();
  if (members.size() < 2) return {};
  switch (strategy) {
    case GcdScanStrategy::direct:
      break;
    case GcdScanStrategy::shared_factors:
      return scan_by_shared_factors(members);
    case GcdScanStrategy::automatic:
      if (family.field().value() == 2 && family.degree() <= 63 &&
          members.size() <= kPackedScanLimit) {
        return scan_packed_gf2(members);
      }
      if (members.size() > kGenericScanLimit) return scan_by_shared_factors(members);
      break;
  }
  if (family.field().value() == 2 && family.degree() <= 63) {
    return scan_packed_gf2(members);
  }
  return scan_generic(members);
}

bool is_member(const Family& family, int d) {
  if (d < 0 || d > family.degree()) {
    throw std::invalid_argument("is_member: d must lie in [0, n]");
  }
  return max_pairwise_gcd_degree(family).max_degree <= d;
}

Count lower_bound_cardinality(FieldChar field, int n, int d) {
  if (n < 1) throw std::invalid_argument("lower_bound_cardinality: n must be >= 1");
  if (d < 0 || 2 * d >= n) {
    throw std::invalid_argument("lower_bound_cardinality: requires d < n/2");
  }
  Count total = 0;
  for (int i = 1; i <= n / 2; ++i) total += restricted_count(field, i);
  for (int i = n - d; i <= n - 1; ++i) total += restricted_count(field, i);
  total += restricted_count(field, n);
  return total;
}

Count maximal_cardinality_gf2_d1(int n) {
  if (n < 3) {
    throw std::invalid_argument(
        "maximal_cardinality_gf2_d1: n must be >= 3 (at n = 2 only two degree-2 "
        "polynomials have a nonzero constant term, fewer than the formula value; "
        "use the brute-force oracle for n <= 2)");
  }
  const FieldChar f2(2);
  Count total = 0;
  for (int i = 1; i <= n / 2; ++i) total += restricted_count(f2, i);
  total += restricted_count(f2, n - 1);
  total += restricted_count(f2, n);
  return total;
}

Family read_family(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<Family> family;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    const std::string content = line.substr(start);

    if (!family.has_value()) {
      std::uint32_t q = 0;
      int n = 0;
      std::istringstream header(content);
      std::string qtok, ntok;
      if (!(header >> qtok >> ntok) || qtok.rfind("q=", 0) != 0 || ntok.rfind("n=", 0) != 0) {
        throw std::invalid_argument("family file line " + std::to_string(line_no) +
                                    ": expected header \"q=<p> n=<n>\"");
      }
      q = static_cast<std::uint32_t>(std::stoul(qtok.substr(2)));
      n = std::stoi(ntok.substr(2));
      family.emplace(FieldChar(q), n);
      continue;
    }
    try {
      family->insert(parse_poly(family->field(), content));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("family file line " + std::to_string(line_no) + ": " +
                                  e.what());
    }
  }
  if (!family.has_value()) {
    throw std::invalid_argument("family file has no \"q=<p> n=<n>\" header");
  }
  return *family;
}

Family read_family_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open family file: " + path.string());
  return read_family(in);
}

void write_family(const Family& family, std::ostream& out) {
  out << "q=" << family.field().value() << " n=" << family.degree() << "\n";
  for (const Poly& f : family.members()) {
    out << to_digit_string(f) << "\n";
  }
}

void write_family_file(const Family& family, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open family file for writing: " + path.string());
  write_family(family, out);
  if (!out) throw std::runtime_error("failed writing family file: " + path.string());
}

}  // namespace gcdfam

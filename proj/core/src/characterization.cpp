#include "gcdfam/characterization.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gcdfam/irreducible_index.hpp"

namespace gcdfam {

namespace {

void require_gf2(FieldChar field, const char* op) {
  if (field.value() != 2) {
    throw std::invalid_argument(std::string(op) + ": defined over GF(2) only");
  }
}

std::string factorization_text(const Factorization& fz) {
  std::ostringstream out;
  for (std::size_t i = 0; i < fz.factors.size(); ++i) {
    if (i) out << " * ";
    out << "(" << to_human_string(fz.factors[i].first) << ")";
    if (fz.factors[i].second > 1) out << "^" << fz.factors[i].second;
  }
  return out.str();
}

}  // namespace

Poly stripped_lowest_factor(const Poly& f) {
  require_gf2(f.field(), "stripped_lowest_factor");
  if (f.degree() < 2) {
    throw std::invalid_argument("stripped_lowest_factor: degree must be >= 2");
  }
  const Poly x_plus_1(f.field(), {1, 1});
  if (divides(x_plus_1, f)) {
    return lowest_factor(exact_div(f, x_plus_1));
  }
  return lowest_factor(f);
}

const char* to_string(DivisorForm form) {
  switch (form) {
    case DivisorForm::pure_power: return "g^a";
    case DivisorForm::linear_times_power: return "(x+1)g^a";
    case DivisorForm::power_times_companion: return "g^a*h";
    case DivisorForm::linear_times_power_companion: return "(x+1)g^a*h";
  }
  return "?";
}

bool CertificateReport::middle_clause() const {
  return std::all_of(middle.begin(), middle.end(),
                     [](const MiddleCheck& m) { return m.ok(); });
}

bool CertificateReport::clauses_ok() const {
  return contains_all_irreducibles && squares_clause.value_or(true) && middle_clause() &&
         linear_clause;
}

bool CertificateReport::verdict() const { return member && clauses_ok(); }

CertificateReport check_certificate(const Family& family) {
  require_gf2(family.field(), "check_certificate");
  const int n = family.degree();
  if (n < 3) throw std::invalid_argument("check_certificate: requires n >= 3");
  const FieldChar f2 = family.field();
  const Poly x_plus_1(f2, {1, 1});

  CertificateReport report;
  report.n = n;
  report.gcd_profile = max_pairwise_gcd_degree(family);
  report.member = report.gcd_profile.max_degree <= 1;

  // factor every member once; map each irreducible factor to its users
  const auto& members = family.members();
  std::vector<Factorization> factorizations;
  factorizations.reserve(members.size());
  std::map<Poly, std::vector<std::size_t>, CanonicalLess> users;
  for (std::size_t i = 0; i < members.size(); ++i) {
    factorizations.push_back(factorize(members[i]));
    for (const auto& [q, mult] : factorizations[i].factors) {
      users[q].push_back(i);
    }
  }

  // clause: every irreducible of degree n is present
  report.contains_all_irreducibles = true;
  for (const Poly& q : shared_irreducibles(f2, n)) {
    if (!family.contains(q)) {
      report.contains_all_irreducibles = false;
      break;
    }
  }

  // clause: for even n, the square of every irreducible of degree n/2
  if (n % 2 == 0) {
    bool all = true;
    for (const Poly& g : shared_irreducibles(f2, n / 2)) {
      if (!family.contains(mul(g, g))) {
        all = false;
        break;
      }
    }
    report.squares_clause = all;
  }

  // clause: each irreducible g with 1 < deg g < n/2 divides exactly one
  // member, of one of the four admitted shapes
  for (int i = 2; 2 * i < n; ++i) {
    for (const Poly& g : shared_irreducibles(f2, i)) {
      MiddleCheck check(g);
      auto it = users.find(g);
      if (it != users.end()) {
        for (std::size_t idx : it->second) check.divisible_members.push_back(members[idx]);
      }
      check.unique = check.divisible_members.size() == 1;
      if (check.unique) {
        const std::size_t idx = it->second.front();
        const Factorization& fz = factorizations[idx];
        int linear_mult = 0;
        int g_mult = 0;
        std::vector<std::pair<Poly, int>> others;
        for (const auto& [q, mult] : fz.factors) {
          if (q == x_plus_1) {
            linear_mult = mult;
          } else if (q == g) {
            g_mult = mult;
          } else {
            others.emplace_back(q, mult);
          }
        }
        const int a = g_mult;
        const bool single_companion = others.size() == 1 && others.front().second == 1;
        if (single_companion) check.companion = others.front().first;
        if (linear_mult == 0 && others.empty()) {
          // degree bookkeeping gives a*i == n, so i | n holds automatically
          check.form = DivisorForm::pure_power;
        } else if (linear_mult == 1 && others.empty()) {
          check.form = DivisorForm::linear_times_power;
        } else if (linear_mult == 0 && single_companion && 2 * a * i < n) {
          check.form = DivisorForm::power_times_companion;
        } else if (linear_mult == 1 && single_companion && 2 * a * i < n + 2) {
          check.form = DivisorForm::linear_times_power_companion;
        }
        if (!check.form.has_value()) {
          check.note = "unexpected divisor " + to_digit_string(members[idx]) + " = " +
                       factorization_text(fz);
        }
        if (check.companion.has_value()) {
          check.companion_unique = users.at(*check.companion).size() == 1;
        }
      }
      report.middle.push_back(std::move(check));
    }
  }

  // clause: (x+1)^n present, or some (x+1)^a * h with 1 < a < n/2
  report.linear_clause = family.contains(pow(x_plus_1, static_cast<std::uint64_t>(n)));
  if (!report.linear_clause) {
    for (const Factorization& fz : factorizations) {
      if (fz.factors.size() != 2) continue;
      const auto& [lin, a] = fz.factors.front();
      const auto& [h, hmult] = fz.factors.back();
      if (lin == x_plus_1 && a > 1 && 2 * a < n && hmult == 1 && h.degree() >= 2) {
        report.linear_clause = true;
        break;
      }
    }
  }

  return report;
}

bool check_stripped_factor_injectivity(const Family& family) {
  require_gf2(family.field(), "check_stripped_factor_injectivity");
  if (!is_member(family, 1)) {
    throw std::invalid_argument(
        "check_stripped_factor_injectivity: family has a pairwise GCD of degree > 1");
  }
  const int n = family.degree();
  std::vector<Poly> images;
  for (const Poly& f : family.members()) {
    if (is_irreducible(f)) continue;  // degree-n irreducibles excluded
    images.push_back(stripped_lowest_factor(f));
  }
  for (const Poly& image : images) {
    const int deg = image.degree();
    if (!(2 * deg <= n || deg == n - 1)) return false;
  }
  std::sort(images.begin(), images.end(), CanonicalLess{});
  return std::adjacent_find(images.begin(), images.end()) == images.end();
}

}  // namespace gcdfam

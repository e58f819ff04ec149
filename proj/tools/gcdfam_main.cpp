// gcdfam: construct, verify and certify families of same-degree polynomials
// over prime fields whose pairwise GCD degrees stay within a bound.
//
// Exit codes: 0 success (member / verdict true), 1 verified false, 2 usage or
// input error.

#include <chrono>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcdfam/characterization.hpp"
#include "gcdfam/constructions.hpp"
#include "gcdfam/family.hpp"
#include "gcdfam/gf_poly.hpp"
#include "gcdfam/irreducible_index.hpp"
#include "gcdfam/oracle.hpp"

namespace {

using namespace gcdfam;

// Line-oriented key=value run report. Payload lines go to stdout, where
// scripts consume them; the command echo and timing go to stderr.
class RunReport {
 public:
  explicit RunReport(std::string command) : command_(std::move(command)) {
    start_ = std::chrono::steady_clock::now();
  }

  void param(const std::string& key, const std::string& value) {
    params_.push_back(key + "=" + value);
  }
  void payload(const std::string& key, const std::string& value) {
    payload_.push_back(key + "=" + value);
  }
  void payload_raw(std::string line) { payload_.push_back(std::move(line)); }

  void finish() const {
    for (const auto& line : payload_) std::cout << line << "\n";
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    std::cerr << "command=" << command_;
    for (const auto& p : params_) std::cerr << " " << p;
    std::cerr << " wall_ms=" << ms << "\n";
  }

 private:
  std::string command_;
  std::vector<std::string> params_;
  std::vector<std::string> payload_;
  std::chrono::steady_clock::time_point start_;
};

std::size_t vertex_cap_from_env() {
  if (const char* env = std::getenv("GCDFAM_MAX_VERTICES")) {
    try {
      const unsigned long long v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("GCDFAM_MAX_VERTICES is not a positive integer");
    }
  }
  return kDefaultVertexCap;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

int cmd_irr(std::uint32_t p, int deg, bool count_only) {
  RunReport report("irr");
  report.param("p", std::to_string(p));
  report.param("deg", std::to_string(deg));
  const FieldChar field(p);
  if (count_only) {
    report.payload("count", restricted_count(field, deg).str());
  } else {
    for (const Poly& f : enumerate_irreducibles(field, deg)) {
      report.payload_raw(to_digit_string(f));
    }
  }
  report.finish();
  return 0;
}

int cmd_construct(const std::string& kind, std::uint32_t p, int n, int d,
                  std::optional<std::string> out_path) {
  RunReport report("construct " + kind);
  report.param("p", std::to_string(p));
  report.param("n", std::to_string(n));

  Family family = [&] {
    if (kind == "maximal") {
      if (p != 2) throw std::invalid_argument("construct maximal: defined over GF(2) only");
      return construct_maximal_gf2(n);
    }
    report.param("d", std::to_string(d));
    return construct_lower_bound({FieldChar(p), n, d});
  }();

  const int bound = kind == "maximal" ? 1 : d;
  if (!is_member(family, bound)) {
    throw std::logic_error("constructed family failed re-verification");
  }

  std::string path = out_path.value_or(
      kind == "maximal" ? "maximal_n" + std::to_string(n) + ".txt"
                        : "lowerbound_p" + std::to_string(p) + "_n" + std::to_string(n) + "_d" +
                              std::to_string(d) + ".txt");
  write_family_file(family, path);
  report.payload("size", std::to_string(family.size()));
  report.payload("member", "true");
  report.payload("out", path);
  report.finish();
  return 0;
}

int cmd_verify(const std::string& path, int d) {
  RunReport report("verify");
  report.param("file", path);
  report.param("d", std::to_string(d));
  const Family family = read_family_file(path);
  const GcdProfile profile = max_pairwise_gcd_degree(family);
  const bool member = is_member(family, d);
  report.payload("size", std::to_string(family.size()));
  report.payload("member", bool_text(member));
  report.payload("max_gcd_degree", std::to_string(profile.max_degree));
  if (profile.witness.has_value()) {
    report.payload("witness_a", to_digit_string(profile.witness->first));
    report.payload("witness_b", to_digit_string(profile.witness->second));
  }
  report.finish();
  return member ? 0 : 1;
}

int cmd_characterize(const std::string& path) {
  RunReport report("characterize");
  report.param("file", path);
  const Family family = read_family_file(path);
  const CertificateReport cert = check_certificate(family);
  report.payload("size", std::to_string(family.size()));
  report.payload("member", bool_text(cert.member));
  if (!cert.member && cert.gcd_profile.witness.has_value()) {
    report.payload("member_witness_a", to_digit_string(cert.gcd_profile.witness->first));
    report.payload("member_witness_b", to_digit_string(cert.gcd_profile.witness->second));
    report.payload("member_max_gcd_degree", std::to_string(cert.gcd_profile.max_degree));
  }
  report.payload("contains_all_irreducibles", bool_text(cert.contains_all_irreducibles));
  report.payload("squares_clause",
                 cert.squares_clause.has_value() ? bool_text(*cert.squares_clause) : "n/a");
  report.payload("middle_clause", bool_text(cert.middle_clause()));
  for (const MiddleCheck& check : cert.middle) {
    if (check.ok()) continue;
    std::ostringstream line;
    line << "middle_fail=" << to_digit_string(check.g) << " divisors="
         << check.divisible_members.size();
    if (check.form.has_value()) line << " form=" << to_string(*check.form);
    if (!check.companion_unique) line << " companion_shared=true";
    if (!check.note.empty()) line << " note: " << check.note;
    report.payload_raw(line.str());
  }
  report.payload("linear_clause", bool_text(cert.linear_clause));
  report.payload("verdict", bool_text(cert.verdict()));
  report.finish();
  return cert.verdict() ? 0 : 1;
}

int cmd_oracle(std::uint32_t p, int n, int d, std::optional<std::string> witness_path) {
  RunReport report("oracle");
  report.param("p", std::to_string(p));
  report.param("n", std::to_string(n));
  report.param("d", std::to_string(d));
  const OracleResult result = max_family_bruteforce(FieldChar(p), n, d, vertex_cap_from_env());
  report.payload("max", std::to_string(result.size));
  if (witness_path.has_value()) {
    write_family_file(result.witness, *witness_path);
    report.payload("witness", *witness_path);
  }
  report.finish();
  return 0;
}

int cmd_count(std::uint32_t p, int n, int d) {
  RunReport report("count");
  report.param("p", std::to_string(p));
  report.param("n", std::to_string(n));
  report.param("d", std::to_string(d));
  const FieldChar field(p);
  report.payload("lower_bound", lower_bound_cardinality(field, n, d).str());
  if (p == 2 && d == 1 && n >= 3) {
    report.payload("maximal", maximal_cardinality_gf2_d1(n).str());
  }
  report.finish();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"families of monic polynomials with bounded pairwise GCD degree"};
  app.require_subcommand(1);

  std::uint32_t p = 2;
  int n = 0, deg = 0, d = 0;
  bool count_only = false;
  std::string file;
  std::optional<std::string> out_path, witness_path;

  auto* irr = app.add_subcommand("irr", "list or count irreducibles of one degree");
  irr->add_option("--p", p, "field characteristic (prime)")->required();
  irr->add_option("--deg", deg, "degree")->required();
  irr->add_flag("--count-only", count_only, "print the count instead of the polynomials");

  auto* construct = app.add_subcommand("construct", "build a family with bounded pairwise GCD");
  construct->require_subcommand(1);
  auto* lower = construct->add_subcommand("lower-bound", "general construction over GF(p)");
  lower->add_option("--p", p, "field characteristic (prime)")->required();
  lower->add_option("--n", n, "member degree")->required();
  lower->add_option("--d", d, "pairwise GCD degree bound")->required();
  lower->add_option("--out", out_path, "output family file");
  auto* maximal = construct->add_subcommand("maximal", "maximum-size construction, GF(2), d=1");
  maximal->add_option("--n", n, "member degree")->required();
  maximal->add_option("--out", out_path, "output family file");

  auto* verify = app.add_subcommand("verify", "check a family file against a GCD degree bound");
  verify->add_option("--d", d, "pairwise GCD degree bound")->required();
  verify->add_option("file", file, "family file")->required();

  auto* characterize =
      app.add_subcommand("characterize", "clause-by-clause maximality certificate (GF(2), d=1)");
  characterize->add_option("file", file, "family file")->required();

  auto* oracle = app.add_subcommand("oracle", "exact maximum family size by clique search");
  oracle->add_option("--p", p, "field characteristic (prime)")->required();
  oracle->add_option("--n", n, "member degree")->required();
  oracle->add_option("--d", d, "pairwise GCD degree bound")->required();
  oracle->add_option("--witness", witness_path, "write one maximum family here");

  auto* count = app.add_subcommand("count", "closed-form family cardinalities");
  count->add_option("--p", p, "field characteristic (prime)")->required();
  count->add_option("--n", n, "member degree")->required();
  count->add_option("--d", d, "pairwise GCD degree bound")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (irr->parsed()) return cmd_irr(p, deg, count_only);
    if (lower->parsed()) return cmd_construct("lower-bound", p, n, d, out_path);
    if (maximal->parsed()) return cmd_construct("maximal", 2, n, d, out_path);
    if (verify->parsed()) return cmd_verify(file, d);
    if (characterize->parsed()) return cmd_characterize(file);
    if (oracle->parsed()) return cmd_oracle(p, n, d, witness_path);
    if (count->parsed()) return cmd_count(p, n, d);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

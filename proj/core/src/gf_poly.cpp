#include "gcdfam/gf_poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "gcdfam/irreducible_index.hpp"

namespace gcdfam {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

void require_same_field(const Poly& a, const Poly& b, const char* op) {
  if (a.field() != b.field()) {
    throw std::invalid_argument(std::string(op) + ": mismatched field characteristic");
  }
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // extended Euclid; a is nonzero mod p
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::logic_error("inv_mod: argument not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

void strip_trailing_zeros(std::vector<std::uint32_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

FieldChar::FieldChar(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("p must be prime (got " + std::to_string(p) + ")");
  }
}

Poly::Poly(FieldChar field, std::span<const std::int64_t> coeffs) : field_(field) {
  const std::int64_t p = field.value();
  coeffs_.reserve(coeffs.size());
  for (std::int64_t v : coeffs) {
    std::int64_t r = v % p;
    if (r < 0) r += p;
    coeffs_.push_back(static_cast<std::uint32_t>(r));
  }
  strip_trailing_zeros(coeffs_);
}

Poly::Poly(FieldChar field, std::initializer_list<std::int64_t> coeffs)
    : Poly(field, std::span<const std::int64_t>(coeffs.begin(), coeffs.size())) {}

Poly Poly::from_reduced(FieldChar field, std::vector<std::uint32_t> coeffs) {
  for (std::uint32_t c : coeffs) {
    if (c >= field.value()) throw std::invalid_argument("from_reduced: coefficient not reduced");
  }
  if (!coeffs.empty() && coeffs.back() == 0) {
    throw std::invalid_argument("from_reduced: trailing zero coefficient");
  }
  return Poly(field, std::move(coeffs), 0);
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.field() != b.field()) {
    throw std::invalid_argument("canonical_less: mismatched field characteristic");
  }
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

Poly add(const Poly& a, const Poly& b) {
  require_same_field(a, b, "add");
  const std::uint32_t p = a.characteristic();
  std::vector<std::uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::uint32_t s = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    c[i] = s >= p ? s - p : s;
  }
  strip_trailing_zeros(c);
  return Poly::from_reduced(a.field(), std::move(c));
}

Poly neg(const Poly& a) {
  const std::uint32_t p = a.characteristic();
  std::vector<std::uint32_t> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& v : c) v = v == 0 ? 0 : p - v;
  return Poly::from_reduced(a.field(), std::move(c));
}

Poly sub(const Poly& a, const Poly& b) {
  require_same_field(a, b, "sub");
  return add(a, neg(b));
}

Poly mul(const Poly& a, const Poly& b) {
  require_same_field(a, b, "mul");
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field());
  const std::uint64_t p = a.characteristic();
  std::vector<std::uint32_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const std::uint64_t ai = a.coeffs()[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + ai * b.coeffs()[j]) % p);
    }
  }
  strip_trailing_zeros(c);
  return Poly::from_reduced(a.field(), std::move(c));
}

DivMod divmod(const Poly& a, const Poly& b) {
  require_same_field(a, b, "divmod");
  if (b.is_zero()) throw std::invalid_argument("divmod: division by the zero polynomial");
  const std::uint32_t p = a.characteristic();
  if (a.is_zero() || a.degree() < b.degree()) {
    return {Poly::zero(a.field()), a};
  }
  const std::uint32_t lead_inv = inv_mod(b.leading_coeff(), p);
  std::vector<std::uint32_t> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<std::uint32_t> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const std::uint32_t top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    const std::uint32_t q = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(top) * lead_inv) % p);
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      const std::uint64_t sub_term =
          (static_cast<std::uint64_t>(q) * b.coeff(j)) % p;
      slot = static_cast<std::uint32_t>((slot + p - sub_term) % p);
    }
  }
  rem.resize(static_cast<std::size_t>(db > 0 ? db : 0));
  strip_trailing_zeros(rem);
  strip_trailing_zeros(quo);
  return {Poly::from_reduced(a.field(), std::move(quo)),
          Poly::from_reduced(a.field(), std::move(rem))};
}

Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

bool divides(const Poly& divisor, const Poly& dividend) {
  return divmod(dividend, divisor).remainder.is_zero();
}

Poly exact_div(const Poly& a, const Poly& b) {
  DivMod dm = divmod(a, b);
  if (!dm.remainder.is_zero()) throw std::domain_error("exact_div: division is not exact");
  return dm.quotient;
}

Poly monic(const Poly& a) {
  if (a.is_zero()) throw std::invalid_argument("monic: zero polynomial");
  if (a.is_monic()) return a;
  const std::uint32_t p = a.characteristic();
  const std::uint64_t s = inv_mod(a.leading_coeff(), p);
  std::vector<std::uint32_t> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& v : c) v = static_cast<std::uint32_t>((v * s) % p);
  return Poly::from_reduced(a.field(), std::move(c));
}

Poly gcd(const Poly& a, const Poly& b) {
  require_same_field(a, b, "gcd");
  if (a.is_zero() && b.is_zero()) {
    throw std::invalid_argument("gcd: both inputs are the zero polynomial");
  }
  Poly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Poly r2 = mod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return monic(r0);
}

Poly pow(const Poly& f, std::uint64_t k) {
  Poly acc = Poly::one(f.field());
  for (std::uint64_t i = 0; i < k; ++i) acc = mul(acc, f);
  return acc;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) {
    throw std::invalid_argument("is_irreducible: constant or zero input");
  }
  if (f.degree() == 1) return true;
  if (f.constant_term() == 0) return false;  // x divides f
  const FieldChar field = f.field();
  for (int j = 1; 2 * j <= f.degree(); ++j) {
    for (const Poly& q : shared_irreducibles(field, j)) {
      if (divides(q, f)) return false;
    }
  }
  return true;
}

Factorization factorize(const Poly& f) {
  if (f.degree() < 1) {
    throw std::invalid_argument("factorize: constant or zero input");
  }
  const FieldChar field = f.field();
  Factorization result;
  Poly rest = monic(f);

  // factors of x first
  int xmult = 0;
  while (rest.constant_term() == 0 && rest.degree() >= 1) {
    rest = exact_div(rest, Poly::x(field));
    ++xmult;
  }
  if (xmult > 0) result.factors.emplace_back(Poly::x(field), xmult);

  for (int j = 1; rest.degree() >= 1 && 2 * j <= rest.degree(); ++j) {
    for (const Poly& q : shared_irreducibles(field, j)) {
      if (rest.degree() < 2 * j) break;
      int mult = 0;
      while (divides(q, rest)) {
        rest = exact_div(rest, q);
        ++mult;
      }
      if (mult > 0) result.factors.emplace_back(q, mult);
    }
  }
  if (rest.degree() >= 1) result.factors.emplace_back(rest, 1);

  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return result;
}

Poly lowest_factor(const Poly& f) {
  return factorize(f).factors.front().first;
}

namespace {

char digit_char(std::uint32_t v) {
  return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + (v - 10));
}

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

}  // namespace

std::string to_digit_string(const Poly& f) {
  if (f.characteristic() > 37) {
    throw std::invalid_argument("canonical digit form requires p <= 37");
  }
  if (f.is_zero()) return "0";
  std::string s;
  s.reserve(f.coeffs().size());
  for (std::uint32_t c : f.coeffs()) s.push_back(digit_char(c));
  return s;
}

std::string to_prefixed_string(const Poly& f) {
  return "p" + std::to_string(f.characteristic()) + ":" + to_digit_string(f);
}

std::string to_human_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const std::uint32_t c = f.coeff(i);
    if (c == 0) continue;
    if (!first) out << "+";
    first = false;
    if (i == 0) {
      out << c;
    } else {
      if (c != 1) out << c;
      out << "x";
      if (i != 1) out << "^" << i;
    }
  }
  return out.str();
}

namespace {

Poly parse_digit_form(FieldChar field, std::string_view text) {
  std::vector<std::int64_t> coeffs;
  coeffs.reserve(text.size());
  for (char c : text) {
    const int v = digit_value(c);
    if (v < 0 || v >= static_cast<int>(field.value())) {
      throw std::invalid_argument("invalid coefficient digit '" + std::string(1, c) +
                                  "' for GF(" + std::to_string(field.value()) + ")");
    }
    coeffs.push_back(v);
  }
  return Poly(field, coeffs);
}

// Grammar: term ('+'|'-' term)* with term = int | int '*'? 'x' ('^' int)? | 'x' ('^' int)?
Poly parse_human_form(FieldChar field, std::string_view text) {
  std::vector<std::int64_t> coeffs;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  const auto parse_uint = [&]() -> std::int64_t {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw std::invalid_argument("expected integer in polynomial text");
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, v);
    if (ec != std::errc()) throw std::invalid_argument("integer out of range in polynomial text");
    return v;
  };

  bool expect_term = true;
  std::int64_t sign = 1;
  skip_ws();
  while (i < text.size()) {
    if (!expect_term) {
      if (text[i] == '+') {
        sign = 1;
      } else if (text[i] == '-') {
        sign = -1;
      } else {
        throw std::invalid_argument("unexpected character '" + std::string(1, text[i]) +
                                    "' in polynomial text");
      }
      ++i;
      skip_ws();
      expect_term = true;
      continue;
    }
    std::int64_t coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = parse_uint();
      saw_coeff = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    std::int64_t exp = 0;
    if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
      ++i;
      exp = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        exp = parse_uint();
        skip_ws();
      }
    } else if (!saw_coeff) {
      throw std::invalid_argument("expected term in polynomial text");
    }
    if (exp > 1 << 20) throw std::invalid_argument("exponent too large");
    if (coeffs.size() < static_cast<std::size_t>(exp) + 1) {
      coeffs.resize(static_cast<std::size_t>(exp) + 1, 0);
    }
    // reduce per term so repeated terms cannot overflow the accumulator
    const std::int64_t p = field.value();
    coeffs[static_cast<std::size_t>(exp)] =
        (coeffs[static_cast<std::size_t>(exp)] + sign * (coeff % p)) % p;
    sign = 1;
    expect_term = false;
    skip_ws();
  }
  if (expect_term && !coeffs.empty()) {
    throw std::invalid_argument("dangling operator in polynomial text");
  }
  return Poly(field, coeffs);
}

std::pair<std::uint32_t, std::string_view> split_prefix(std::string_view text) {
  // "p<prime>:rest" -> (prime, rest); (0, text) when no prefix is present
  if (text.size() >= 3 && text[0] == 'p') {
    const std::size_t colon = text.find(':');
    if (colon != std::string_view::npos && colon >= 2) {
      std::uint32_t p = 0;
      auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + colon, p);
      if (ec == std::errc() && ptr == text.data() + colon) {
        return {p, text.substr(colon + 1)};
      }
    }
  }
  return {0, text};
}

}  // namespace

Poly parse_poly(FieldChar field, std::string_view text) {
  auto [prefix_p, body] = split_prefix(text);
  if (prefix_p != 0 && prefix_p != field.value()) {
    throw std::invalid_argument("polynomial prefix p" + std::to_string(prefix_p) +
                                " does not match field GF(" + std::to_string(field.value()) + ")");
  }
  if (body.empty()) throw std::invalid_argument("empty polynomial text");
  const bool human = body.find_first_of("xX+-^* \t") != std::string_view::npos;
  return human ? parse_human_form(field, body) : parse_digit_form(field, body);
}

Poly parse_prefixed_poly(std::string_view text) {
  auto [prefix_p, body] = split_prefix(text);
  if (prefix_p == 0) {
    throw std::invalid_argument("polynomial text lacks the required p<prime>: prefix");
  }
  return parse_poly(FieldChar(prefix_p), text);
}

}  // namespace gcdfam

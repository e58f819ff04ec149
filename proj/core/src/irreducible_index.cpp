#include "gcdfam/irreducible_index.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace gcdfam {

int mobius(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("mobius: argument must be positive");
  int factors = 0;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      m /= q;
      if (m % q == 0) return 0;  // squared prime factor
      ++factors;
    }
  }
  if (m > 1) ++factors;
  return factors % 2 == 0 ? 1 : -1;
}

Count gauss_count(FieldChar field, int k) {
  if (k < 1) throw std::invalid_argument("gauss_count: degree must be >= 1");
  const Count p = field.value();
  Count sum = 0;
  for (int m = 1; m <= k; ++m) {
    if (k % m != 0) continue;
    const int mu = mobius(static_cast<std::uint64_t>(m));
    if (mu == 0) continue;
    Count term = boost::multiprecision::pow(p, static_cast<unsigned>(k / m));
    sum += mu > 0 ? term : -term;
  }
  if (sum % k != 0) throw std::logic_error("gauss_count: sum not divisible by degree");
  return sum / k;
}

Count restricted_count(FieldChar field, int k) {
  if (k < 0) throw std::invalid_argument("restricted_count: degree must be >= 0");
  if (k == 0) return 1;
  if (k == 1) return Count(field.value()) - 1;
  return gauss_count(field, k);
}

namespace {

// Remainder-only reduction of `buf` (coefficients 0..deg) by a monic divisor,
// returning true when the remainder is zero. Used by the sieve hot loop.
bool reduces_to_zero(std::vector<std::uint32_t>& buf, int deg, const Poly& divisor,
                     std::uint64_t p) {
  const int dv = divisor.degree();
  for (int i = deg; i >= dv; --i) {
    const std::uint64_t top = buf[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    buf[static_cast<std::size_t>(i)] = 0;
    for (int j = 0; j < dv; ++j) {
      auto& slot = buf[static_cast<std::size_t>(i - dv + j)];
      slot = static_cast<std::uint32_t>((slot + (p - divisor.coeff(j)) * top) % p);
    }
  }
  for (int i = 0; i < dv; ++i) {
    if (buf[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

}  // namespace

IrreducibleIndex::IrreducibleIndex(FieldChar field, int degree_cap)
    : field_(field), degree_cap_(degree_cap) {
  if (degree_cap < 1) throw std::invalid_argument("IrreducibleIndex: degree cap must be >= 1");
  lists_.resize(static_cast<std::size_t>(degree_cap));
}

const std::vector<Poly>& IrreducibleIndex::irreducibles(int k) {
  if (k < 1) throw std::invalid_argument("irreducibles: degree must be >= 1");
  if (k > degree_cap_) {
    throw std::invalid_argument("irreducibles: degree " + std::to_string(k) +
                                " exceeds the configured cap " + std::to_string(degree_cap_));
  }
  ensure(k);
  return lists_[static_cast<std::size_t>(k - 1)];
}

void IrreducibleIndex::ensure(int k) {
  const std::uint64_t p = field_.value();
  for (int deg = built_upto_ + 1; deg <= k; ++deg) {
    auto& list = lists_[static_cast<std::size_t>(deg - 1)];
    if (deg == 1) {
      if (p - 1 > kMaxSieveCandidates) {
        throw std::invalid_argument("irreducibles: candidate space too large to sieve");
      }
      for (std::uint32_t a = 1; a < p; ++a) {
        list.push_back(Poly::from_reduced(field_, {a, 1}));
      }
      built_upto_ = deg;
      continue;
    }
    // candidate space: monic, degree deg, nonzero constant term
    std::uint64_t candidates = p - 1;
    for (int i = 1; i < deg; ++i) {
      if (candidates > kMaxSieveCandidates / p) {
        throw std::invalid_argument("irreducibles: candidate space too large to sieve");
      }
      candidates *= p;
    }
    const std::uint64_t space = candidates / (p - 1) * p;  // p^deg

    std::vector<std::uint32_t> buf(static_cast<std::size_t>(deg) + 1);
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(deg), 0);
    for (std::uint64_t v = 0; v < space; ++v) {
      if (v % p == 0) continue;  // constant term must be nonzero
      // decode low coefficients from v (little-endian base p)
      std::uint64_t t = v;
      for (int i = 0; i < deg; ++i) {
        digits[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      bool reducible = false;
      for (int j = 1; 2 * j <= deg && !reducible; ++j) {
        for (const Poly& q : lists_[static_cast<std::size_t>(j - 1)]) {
          std::copy(digits.begin(), digits.end(), buf.begin());
          buf[static_cast<std::size_t>(deg)] = 1;
          if (reduces_to_zero(buf, deg, q, p)) {
            reducible = true;
            break;
          }
        }
      }
      if (!reducible) {
        std::vector<std::uint32_t> coeffs(digits.begin(), digits.end());
        coeffs.push_back(1);
        list.push_back(Poly::from_reduced(field_, std::move(coeffs)));
      }
    }
    const Count expected = restricted_count(field_, deg);
    if (Count(list.size()) != expected) {
      throw std::logic_error("irreducible sieve count mismatch at degree " + std::to_string(deg));
    }
    built_upto_ = deg;
  }
}

std::vector<Poly> enumerate_irreducibles(FieldChar field, int k) {
  if (k < 1) throw std::invalid_argument("enumerate_irreducibles: degree must be >= 1");
  IrreducibleIndex index(field, k);
  return index.irreducibles(k);
}

const std::vector<Poly>& shared_irreducibles(FieldChar field, int k) {
  static std::mutex mutex;
  static std::map<std::uint32_t, IrreducibleIndex> indexes;
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = indexes.try_emplace(field.value(), field, kDefaultDegreeCap);
  return it->second.irreducibles(k);
}

}  // namespace gcdfam

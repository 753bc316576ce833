#include "latdist/number_theory.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace latdist {

namespace {

std::int64_t isqrt_floor(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

RepresentabilitySieve::RepresentabilitySieve(Form form, std::int64_t limit)
    : form_(form), limit_(limit) {
  if (limit < 1 || limit > kSieveLimitGuard) {
    throw std::length_error("sieve limit outside [1, 10^8]");
  }
  const std::size_t words = static_cast<std::size_t>(limit / 64) + 1;
  bits_.assign(words, 0);
  const std::int64_t amax = isqrt_floor(limit);
  // Both forms attain every value with 0 <= b <= a: they are symmetric, and
  // for mixed signs N(a,b) = N(a+b,-b) in the Loeschian case.
  for (std::int64_t a = 1; a <= amax; ++a) {
    for (std::int64_t b = 0; b <= a; ++b) {
      const std::int64_t v =
          form_ == Form::Loeschian ? a * a + a * b + b * b : a * a + b * b;
      if (v > limit) break;
      bits_[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
    }
  }
  word_prefix_.resize(bits_.size() + 1);
  word_prefix_[0] = 0;
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    word_prefix_[w + 1] = word_prefix_[w] + std::popcount(bits_[w]);
  }
}

bool RepresentabilitySieve::representable(std::int64_t n) const {
  if (n < 1 || n > limit_) {
    throw std::domain_error("query outside sieve range");
  }
  return (bits_[static_cast<std::size_t>(n >> 6)] >> (n & 63)) & 1;
}

std::int64_t RepresentabilitySieve::count_up_to(std::int64_t upper) const {
  if (upper > limit_) throw std::domain_error("count bound exceeds sieve limit");
  if (upper < 1) return 0;
  const std::size_t w = static_cast<std::size_t>(upper >> 6);
  const int rem = static_cast<int>(upper & 63);
  std::uint64_t mask = rem == 63 ? ~std::uint64_t{0}
                                 : ((std::uint64_t{1} << (rem + 1)) - 1);
  return word_prefix_[w] + std::popcount(bits_[w] & mask);
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (std::int64_t i = 2; i <= n; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= n; j += i) {
      composite[static_cast<std::size_t>(j)] = true;
    }
  }
  return primes;
}

namespace {

// prod p^2/(p^2-1) over primes p <= bound with p = residue (mod modulus).
double euler_product(std::int64_t bound, std::int64_t modulus, std::int64_t residue) {
  if (bound < 2) throw std::domain_error("prime bound too small");
  double product = 1.0;
  for (std::int64_t p : primes_up_to(bound)) {
    if (p % modulus == residue) {
      const double p2 = static_cast<double>(p) * static_cast<double>(p);
      product *= p2 / (p2 - 1.0);
    }
  }
  return product;
}

}  // namespace

ConstantEstimate landau_ramanujan(std::int64_t prime_bound) {
  const double value = std::sqrt(0.5 * euler_product(prime_bound, 4, 3));
  return {value, prime_bound, ConstantId::LandauRamanujan};
}

ConstantEstimate loeschian_constant(std::int64_t prime_bound) {
  const double value =
      std::sqrt(euler_product(prime_bound, 3, 2) / (2.0 * std::numbers::sqrt3));
  return {value, prime_bound, ConstantId::LoeschianAnalog};
}

ConstantEstimate heuristic_ratio(std::int64_t prime_bound) {
  const double c = landau_ramanujan(prime_bound).value;
  const double cp = loeschian_constant(prime_bound).value;
  return {std::numbers::sqrt3 / 2.0 * cp / c, prime_bound, ConstantId::HeuristicRatio};
}

ConstantEstimate conjecture_constant(std::int64_t prime_bound) {
  const double value =
      std::sqrt(2.0 * std::numbers::sqrt3 * euler_product(prime_bound, 3, 2)) /
      std::numbers::pi;
  return {value, prime_bound, ConstantId::Conjecture};
}

}  // namespace latdist

#pragma once

#include <cstdint>
#include <vector>

#include "latdist/lattice.hpp"

namespace latdist {

enum class Form { TwoSquares, Loeschian };

inline Form form_of(Lattice l) {
  return l == Lattice::Triangular ? Form::Loeschian : Form::TwoSquares;
}

inline constexpr std::int64_t kSieveLimitGuard = 100000000;  // ~12.5 MB of bits

// Bit-per-integer sieve of the values attained by a binary quadratic form
// (a^2+b^2 or a^2+ab+b^2), with per-word prefix counts for O(1) queries.
class RepresentabilitySieve {
 public:
  RepresentabilitySieve(Form form, std::int64_t limit);

  Form form() const { return form_; }
  std::int64_t limit() const { return limit_; }

  bool representable(std::int64_t n) const;

  // Number of representable integers in [1, upper]; upper must be <= limit().
  std::int64_t count_up_to(std::int64_t upper) const;

 private:
  Form form_;
  std::int64_t limit_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::int64_t> word_prefix_;  // representable count before each word
};

enum class ConstantId { LandauRamanujan, LoeschianAnalog, HeuristicRatio, Conjecture };

struct ConstantEstimate {
  double value = 0.0;
  std::int64_t prime_bound = 0;
  ConstantId id = ConstantId::LandauRamanujan;
};

std::vector<std::int64_t> primes_up_to(std::int64_t n);

// c = (1/2 * prod_{p = 3 mod 4} p^2/(p^2-1))^(1/2), partial product over p <= bound.
ConstantEstimate landau_ramanujan(std::int64_t prime_bound);

// c' = (1/(2*sqrt 3) * prod_{p = 2 mod 3} p^2/(p^2-1))^(1/2).
ConstantEstimate loeschian_constant(std::int64_t prime_bound);

// (sqrt(3)/2) * c'/c.
ConstantEstimate heuristic_ratio(std::int64_t prime_bound);

// (1/pi) * (2*sqrt(3) * prod_{p = 2 mod 3} p^2/(p^2-1))^(1/2) = (2*sqrt(3)/pi)*c'.
ConstantEstimate conjecture_constant(std::int64_t prime_bound);

}  // namespace latdist

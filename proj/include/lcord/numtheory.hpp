#pragma once

#include <cstdint>
#include <vector>

namespace lcord {

/// Largest prime accepted by LegendreContext.
inline constexpr std::int64_t kMaxPrime = 10'000;

/// Trial division. True iff `n` is prime and at least 3.
bool is_odd_prime(std::int64_t n);

/// Non-negative representative of `a` modulo `m` (m > 0).
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// base^exp mod m by repeated squaring. Requires m > 0, exp >= 0 and
/// m < 2^31 so that products fit in 64 bits.
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m);

enum class ResidueClass : std::uint8_t { Zero, Residue, NonResidue };

/// An odd prime together with the quadratic character of every residue class,
/// built once by enumerating x^2 mod p. Immutable after construction.
class LegendreContext {
 public:
  /// Throws InvalidArgument unless `p` is an odd prime <= kMaxPrime.
  explicit LegendreContext(std::int64_t p);

  std::int64_t prime() const noexcept { return p_; }

  /// Class of `a mod p`; `a` may be any integer.
  ResidueClass classify(std::int64_t a) const noexcept {
    return table_[static_cast<std::size_t>(floor_mod(a, p_))];
  }

  /// (a/p) in {-1, 0, +1}.
  int symbol(std::int64_t a) const noexcept {
    switch (classify(a)) {
      case ResidueClass::Zero:
        return 0;
      case ResidueClass::Residue:
        return 1;
      case ResidueClass::NonResidue:
        break;
    }
    return -1;
  }

 private:
  std::int64_t p_;
  std::vector<ResidueClass> table_;
};

/// Table lookup path.
int legendre_symbol(std::int64_t a, const LegendreContext& ctx);

/// a^((p-1)/2) mod p read as {-1, 0, +1}. Independent of the residue table.
int euler_criterion(std::int64_t a, std::int64_t p);

/// The quadratic residues in {1, ..., p-1}, ascending.
std::vector<std::int64_t> quadratic_residues(const LegendreContext& ctx);

/// The quadratic nonresidues in {1, ..., p-1}, ascending.
std::vector<std::int64_t> quadratic_nonresidues(const LegendreContext& ctx);

/// (2/p) from p mod 8: -1 when p = +-3 (mod 8), +1 when p = +-1 (mod 8).
/// Throws InvalidArgument when `p` is not an odd prime.
int two_symbol_rule(std::int64_t p);

}  // namespace lcord

#include "lcord/numtheory.hpp"

#include <string>

#include "lcord/error.hpp"

namespace lcord {

bool is_odd_prime(std::int64_t n) {
  if (n < 3 || n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t result = 1 % m;
  base = floor_mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

LegendreContext::LegendreContext(std::int64_t p) : p_(p) {
  if (!is_odd_prime(p)) {
    throw InvalidArgument(std::to_string(p) + " is not an odd prime");
  }
  if (p > kMaxPrime) {
    throw InvalidArgument("prime " + std::to_string(p) + " exceeds the limit " +
                          std::to_string(kMaxPrime));
  }
  table_.assign(static_cast<std::size_t>(p), ResidueClass::NonResidue);
  table_[0] = ResidueClass::Zero;
  for (std::int64_t x = 1; x <= (p - 1) / 2; ++x) {
    table_[static_cast<std::size_t>(x * x % p)] = ResidueClass::Residue;
  }
}

int legendre_symbol(std::int64_t a, const LegendreContext& ctx) {
  return ctx.symbol(a);
}

int euler_criterion(std::int64_t a, std::int64_t p) {
  const std::int64_t r = mod_pow(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

namespace {

std::vector<std::int64_t> collect(const LegendreContext& ctx, ResidueClass cls) {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>((ctx.prime() - 1) / 2));
  for (std::int64_t r = 1; r < ctx.prime(); ++r) {
    if (ctx.classify(r) == cls) out.push_back(r);
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> quadratic_residues(const LegendreContext& ctx) {
  return collect(ctx, ResidueClass::Residue);
}

std::vector<std::int64_t> quadratic_nonresidues(const LegendreContext& ctx) {
  return collect(ctx, ResidueClass::NonResidue);
}

int two_symbol_rule(std::int64_t p) {
  if (!is_odd_prime(p)) {
    throw InvalidArgument(std::to_string(p) + " is not an odd prime");
  }
  const std::int64_t r = p % 8;
  return (r == 1 || r == 7) ? 1 : -1;
}

}  // namespace lcord

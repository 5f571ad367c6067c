#include "nlk3/picard.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <type_traits>
#include <utility>

namespace nlk3 {

namespace {

// Binary Jacobi algorithm: strip factors of 2 with the second supplement
// ((2|b) = -1 iff b = 3, 5 mod 8), swap with quadratic reciprocity (sign
// flips iff both = 3 mod 4), reduce. Preconditions: b odd >= 1, 0 <= a < b
// or b == 1. Word-sized operands strip all trailing twos in one step; only
// the parity of the count matters for the sign.
template <typename T>
int jacobi_core(T a, T b) {
  int sign = 1;
  while (a != 0) {
    if constexpr (std::is_integral_v<T>) {
      int twos = std::countr_zero(static_cast<std::make_unsigned_t<T>>(a));
      a >>= twos;
      T m8 = b & 7;
      if ((twos & 1) && (m8 == 3 || m8 == 5)) sign = -sign;
    } else {
      while ((a & 1) == 0) {
        a >>= 1;
        T m8 = b & 7;
        if (m8 == 3 || m8 == 5) sign = -sign;
      }
    }
    std::swap(a, b);
    if ((a & 3) == 3 && (b & 3) == 3) sign = -sign;
    a %= b;
  }
  return b == 1 ? sign : 0;
}

constexpr std::int64_t kWordMax = std::numeric_limits<std::int64_t>::max() / 2;

}  // namespace

int jacobi_symbol(const Int& a, const Int& b) {
  if (b < 1 || is_even(b))
    throw DomainError("Jacobi symbol needs odd b >= 1, got " + b.str());
  if (b == 1) return 1;
  Int r = mod_floor(a, b);
  if (b <= kWordMax)
    return jacobi_core<std::int64_t>(r.convert_to<std::int64_t>(),
                                     b.convert_to<std::int64_t>());
  return jacobi_core<Int>(std::move(r), Int(b));
}

int jacobi_symbol(long long a, long long b) {
  if (b < 1 || (b & 1) == 0)
    throw DomainError("Jacobi symbol needs odd b >= 1, got " +
                      std::to_string(b));
  if (b == 1) return 1;
  long long r = a % b;
  if (r < 0) r += b;
  return jacobi_core<long long>(r, b);
}

int alpha_term(const Int& g) {
  if (g < 2) throw DomainError("genus must be at least 2, got " + g.str());
  if (is_even(g)) return 0;
  return jacobi_symbol(2 * g - 2, 2 * g - 3);
}

int beta_term(const Int& g) {
  if (g < 2) throw DomainError("genus must be at least 2, got " + g.str());
  int main = jacobi_symbol(g - 1, 4 * g - 5);
  if (mod_floor(g, 3) == 1) return main - 1;
  return main + jacobi_symbol(g - 1, 3);
}

Rat square_fraction_sum(const Int& g) {
  if (g < 2) throw DomainError("genus must be at least 2, got " + g.str());
  const Int m = 4 * g - 4;
  Int acc = 0;  // numerator over the common denominator m
  for (Int k = 0; k < g; ++k) acc += mod_floor(k * k, m);
  return Rat(acc, m);
}

Int integral_square_count(const Int& g) {
  if (g < 2) throw DomainError("genus must be at least 2, got " + g.str());
  const Int m = 4 * g - 4;
  Int count = 0;
  for (Int k = 0; k < g; ++k)
    if (mod_floor(k * k, m) == 0) ++count;
  return count;
}

RhoBreakdown picard_rank(const Int& g) {
  if (g < 2) throw DomainError("genus must be at least 2, got " + g.str());
  RhoBreakdown out;
  out.g = g;
  out.leading = Rat(31 * g + 24, 24);
  out.alpha = alpha_term(g);
  out.beta = beta_term(g);
  out.frac_sum = square_fraction_sum(g);
  out.square_count = integral_square_count(g);
  Rat total = out.leading - Rat(out.alpha, 4) - Rat(out.beta, 6) -
              out.frac_sum - Rat(out.square_count);
  if (denominator(total) != 1)
    throw NonIntegralRho("rank formula gave non-integer " + rat_str(total) +
                             " at genus " + g.str(),
                         total);
  out.rho = numerator(total);
  return out;
}

Int betti2(const Int& g) { return picard_rank(g).rho; }

}  // namespace nlk3

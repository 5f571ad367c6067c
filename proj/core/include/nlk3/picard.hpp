#pragma once

// Closed-form rank of the subgroup of Pic_Q(K_g) spanned by
// Noether-Lefschetz divisors, with every intermediate term exposed as an
// exact rational.

#include "nlk3/arith.hpp"
#include "nlk3/errors.hpp"

namespace nlk3 {

// Jacobi symbol (a | b) for odd b >= 1. Extends the Legendre symbol
// multiplicatively over the factorization of b; equals 0 iff gcd(a, b) > 1;
// (a | 1) = 1 for every a, including a = 0. Throws DomainError for even or
// nonpositive b. Computed by the binary algorithm (no factoring), with a
// machine-word fast path.
int jacobi_symbol(const Int& a, const Int& b);

// Same contract without the big-integer round trip, for hot loops.
int jacobi_symbol(long long a, long long b);

// alpha_g: 0 for even g, the symbol (2g-2 | 2g-3) for odd g.
int alpha_term(const Int& g);

// beta_g: (g-1 | 4g-5) - 1 when g = 1 (mod 3), otherwise
// (g-1 | 4g-5) + (g-1 | 3).
int beta_term(const Int& g);

// sum_{k=0}^{g-1} {k^2 / (4g-4)}, fractional parts summed exactly.
Rat square_fraction_sum(const Int& g);

// #{k in [0, g-1] : (4g-4) divides k^2}. At least 1 (k = 0).
Int integral_square_count(const Int& g);

// The rank formula term by term. rho is the assembled total
//   (31g + 24)/24 - alpha/4 - beta/6 - frac_sum - square_count
// which is an integer for every g >= 2.
struct RhoBreakdown {
  Int g;
  Rat leading;  // (31g + 24)/24
  int alpha;
  int beta;
  Rat frac_sum;
  Int square_count;
  Int rho;
};

// Throws DomainError for g < 2 and NonIntegralRho should the total ever
// fail to be integral.
RhoBreakdown picard_rank(const Int& g);

// Second Betti number of the smooth model attached to genus g; coincides
// with the divisor rank rho_g.
Int betti2(const Int& g);

}  // namespace nlk3

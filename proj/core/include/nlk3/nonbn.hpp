#pragma once

// Which divisors D_{d,n} parametrize K3 surfaces that are not
// Brill-Noether general: a closed-form double bound on d, and the raw
// linear-system counting inequality it was folded from. The two agree for
// every genus; the test suite compares them range-wide.

#include <utility>
#include <vector>

#include "nlk3/arith.hpp"
#include "nlk3/errors.hpp"

namespace nlk3 {

enum class NonBNMethod { closed_form, system };

const char* to_string(NonBNMethod method);

// All (d, n) with n even >= 0 whose divisor lies in the non-BN locus,
// sorted by (n, d). The pairs are exactly the standard representatives in
// range, so the list is duplicate-free as divisors.
struct NonBNList {
  Int g;
  std::vector<std::pair<Int, Int>> pairs;
  NonBNMethod method;
};

// Pairs with sqrt(2(g-1)n) < d <= min{g-1, (n+2)/2 + g - (2g+2)/(n+4)}.
// Both bounds are evaluated exactly (integer squaring / one rational
// comparison); no rounding is involved.
NonBNList nonbn_closed_form(const Int& g);

// Pairs satisfying the underlying system: d <= g-1, d^2 > (2g-2)n, and
// with h = n/2 the section count (h+2)(g+h+1-d) >= g+1.
NonBNList nonbn_system(const Int& g);

// Membership test for a single label. Throws InvalidDivisor when (d, n) is
// not a valid divisor label.
bool is_nonbn(const Int& g, const Int& d, const Int& n);

}  // namespace nlk3

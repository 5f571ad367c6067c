#include "nlk3/nonbn.hpp"

#include <algorithm>

#include "nlk3/lattice.hpp"

namespace nlk3 {

const char* to_string(NonBNMethod method) {
  return method == NonBNMethod::closed_form ? "closed_form" : "system";
}

namespace {

void require_genus(const Int& g) {
  if (g < 2) throw DomainError("genus must be at least 2, got " + g.str());
}

// Any qualifying pair has (2g-2) n < d^2 <= (g-1)^2, hence n <= (g-1)/2;
// scanning n up to 2g is therefore slack by a wide margin, and the last
// rows of the scan stay empty rather than being cut off.
Int scan_ceiling(const Int& g) { return 2 * g; }

}  // namespace

NonBNList nonbn_closed_form(const Int& g) {
  require_genus(g);
  const Int m = 2 * g - 2;
  NonBNList out{g, {}, NonBNMethod::closed_form};
  for (Int n = 0; n <= scan_ceiling(g); n += 2) {
    for (Int d = 1; d <= g - 1; ++d) {
      // sqrt(2(g-1)n) < d, compared by squaring.
      if (d * d <= m * n) continue;
      // d <= (n+2)/2 + g - (2g+2)/(n+4), cleared of denominators by the
      // positive factor 2(n+4).
      Int lhs = 2 * d * (n + 4);
      Int rhs = (n + 2) * (n + 4) + 2 * g * (n + 4) - 2 * (2 * g + 2);
      if (lhs > rhs) continue;
      out.pairs.emplace_back(d, n);
    }
  }
  return out;
}

NonBNList nonbn_system(const Int& g) {
  require_genus(g);
  const Int m = 2 * g - 2;
  NonBNList out{g, {}, NonBNMethod::system};
  for (Int n = 0; n <= scan_ceiling(g); n += 2) {
    const Int h = n / 2;
    for (Int d = 1; d <= g - 1; ++d) {
      if (d * d <= m * n) continue;
      if ((h + 2) * (g + h + 1 - d) < g + 1) continue;
      out.pairs.emplace_back(d, n);
    }
  }
  return out;
}

bool is_nonbn(const Int& g, const Int& d, const Int& n) {
  CanonicalDivisor c = canonicalize(NLPair(g, d, n));  // validates the label
  NonBNList list = nonbn_closed_form(g);
  return std::any_of(list.pairs.begin(), list.pairs.end(),
                     [&](const std::pair<Int, Int>& p) {
                       return canonicalize(NLPair(g, p.first, p.second)) == c;
                     });
}

}  // namespace nlk3

#pragma once

// Rank-2 even lattices [[2g-2, d], [d, n]] attached to Noether-Lefschetz
// divisors on the moduli space K_g of quasi-polarized K3 surfaces of genus
// g: discriminants, canonical forms, and representation of vectors with
// prescribed invariants.

#include <string>
#include <vector>

#include "nlk3/arith.hpp"
#include "nlk3/errors.hpp"

namespace nlk3 {

// A genus g >= 2 together with the derived constants used everywhere:
// L^2 = 2g-2 and the modulus 4g-4 discriminants are folded by.
struct GenusContext {
  Int g;
  Int ell_sq;   // L^2 = 2g-2
  Int evenmod;  // 4g-4

  explicit GenusContext(Int genus);

  friend bool operator==(const GenusContext& a, const GenusContext& b) {
    return a.g == b.g;
  }
};

// A curve-class label (d, n): d = L.beta and n = beta^2 for a class beta
// in the Picard lattice. Construction does not validate; whether a pair
// names an irreducible divisor is decided by canonicalize().
struct NLPair {
  GenusContext ctx;
  Int d;
  Int n;

  NLPair(GenusContext c, Int dd, Int nn)
      : ctx(std::move(c)), d(std::move(dd)), n(std::move(nn)) {}
  NLPair(const Int& g, Int dd, Int nn)
      : ctx(g), d(std::move(dd)), n(std::move(nn)) {}
};

// d^2 - (2g-2) n, the (negated) determinant of the lattice [[2g-2, d], [d, n]].
Int discriminant(const NLPair& p);

// True iff n is even and the discriminant is positive, i.e. the pair names
// an irreducible Noether-Lefschetz divisor.
bool is_valid_divisor(const NLPair& p);

// The canonical form of an irreducible divisor: discriminant delta > 0 and
// folded residue r in [0, g-1] with r = +-d (mod 2g-2). Two labels name the
// same divisor iff their canonical forms agree. A consequence of n being
// even is r^2 = delta (mod 4g-4), which the constructor enforces.
class CanonicalDivisor {
 public:
  CanonicalDivisor(GenusContext ctx, Int delta, Int r);

  const GenusContext& ctx() const { return ctx_; }
  const Int& delta() const { return delta_; }
  const Int& r() const { return r_; }

  // The standard representative (d, n) = (r, (r^2 - delta)/(2g-2)); the
  // unique label with 0 <= d <= g-1 in the divisor's class.
  Int rep_d() const { return r_; }
  Int rep_n() const;
  NLPair standard_rep() const;

  // "D_{d,n}" with the standard representative.
  std::string label() const;

  friend bool operator==(const CanonicalDivisor& a, const CanonicalDivisor& b);
  friend bool operator<(const CanonicalDivisor& a, const CanonicalDivisor& b);

 private:
  GenusContext ctx_;
  Int delta_;
  Int r_;
};

// Canonical form of a label. Throws InvalidDivisor when n is odd or the
// discriminant is nonpositive.
CanonicalDivisor canonicalize(const NLPair& p);

// Whether two labels name the same divisor. Throws GenusMismatch when the
// genera differ, InvalidDivisor when either label is invalid.
bool equivalent(const NLPair& a, const NLPair& b);

// An integer vector v = x L + y beta' in the host divisor's lattice
// (beta' the standard representative) with v.L = target.d, v^2 = target.n.
struct Representation {
  Int x;
  Int y;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.x == b.x && a.y == b.y;
  }
};

// All representations with |x| <= bound and |y| <= bound, ordered by
// (|y|, y, x). Every solution satisfies
//   discriminant(target) = y^2 * delta(host),
// so nonempty output certifies the target discriminant is delta(host)
// times a square. Throws GenusMismatch for mixed genera and DomainError
// for bound < 1. Solves the linear equation per y, so runs in O(bound).
std::vector<Representation> represent(const CanonicalDivisor& host,
                                      const NLPair& target, const Int& bound);

// Same contract by exhaustive scan of the (x, y) box; O(bound^2). Kept as
// an independent route for cross-checking represent().
std::vector<Representation> represent_brute_force(const CanonicalDivisor& host,
                                                  const NLPair& target,
                                                  const Int& bound);

}  // namespace nlk3

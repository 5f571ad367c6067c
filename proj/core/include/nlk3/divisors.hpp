#pragma once

// Support of curve-class loci C_{d,n} as unions of Noether-Lefschetz
// divisors, the Picard-group generator sets for the genera with a
// homogeneous-space model, and the one known genus-12 relation.

#include <string>
#include <vector>

#include "nlk3/arith.hpp"
#include "nlk3/errors.hpp"
#include "nlk3/lattice.hpp"
#include "nlk3/picard.hpp"

namespace nlk3 {

// The set of divisors whose generic lattice represents the source
// invariants, i.e. the components of the locus C_{d,n}. Members are
// sorted by (delta, r). Multiplicities are out of scope; this is support
// only.
struct SupportSet {
  Int g;
  NLPair source;
  std::vector<CanonicalDivisor> members;

  bool contains(const CanonicalDivisor& c) const;
};

// Decompose C_{d,n} at genus g. The source must have even n and positive
// discriminant (InvalidSource otherwise). A divisor with invariants
// (delta', r') can contribute only when delta = k^2 delta' for some k >= 1
// with k r' = +-d (mod 2g-2); candidates are enumerated from the square
// divisors of delta and confirmed by an explicit vector search.
//
// The search box is max(bound, max(4, delta)); at that size the scan is
// exhaustive (a representing vector x L + y beta' has |y| <= sqrt(delta)
// and |x| <= (1 + sqrt(delta))/2), so larger bounds never add members.
// Passing bound = 0 (the default) just uses the proven box.
SupportSet decompose(const Int& g, const Int& d, const Int& n,
                     const Int& bound = 0);

// Generating set of Pic_Q(K_g) by Noether-Lefschetz divisors: D_{0,-2}
// together with the non-BN-general divisors, plus D_{4,0} at genus 6 (the
// locus of quasi-polarizations failing very-ampleness conditions beyond
// Brill-Noether). Defined for g in {6, ..., 10, 12}; UnsupportedGenus
// otherwise. At these genera the members span, so the dimension of the
// relation space is |members| - rho_g: zero except at g = 12, where the
// twelve generators satisfy a single relation.
struct GeneratorSet {
  Int g;
  std::vector<CanonicalDivisor> members;  // sorted by (delta, r)
  Int expected_rank;                      // rho_g
  Int relation_dim;                       // |members| - rho_g
};

GeneratorSet generator_set(const Int& g);

// A formal integer combination sum coeff * D_{d,n} declared to vanish.
struct RelationTerm {
  Int coeff;
  Int d;
  Int n;
};

struct Relation {
  Int g;
  std::vector<RelationTerm> terms;
};

// The genus-12 relation (A. Peterson, via vector-valued cusp forms of
// weight 21/2):
//   3 D_{8,2} - D_{9,2} - 4 D_{10,4} + 2 D_{11,4}
//     + 8 D_{4,0} - 5 D_{5,0} + D_{6,0} = 0.
// The coefficients are recorded data; check_relation verifies structure,
// not the vanishing itself (that lives in the space of cusp forms).
Relation peterson_relation();

struct StructureCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct RelationReport {
  std::vector<StructureCheck> checks;
  bool all_pass;
};

// Three structural checks on a relation at genus g:
//   labels_valid             every term names a valid divisor,
//   labels_among_generators  every valid term is a generator of Pic_Q(K_g),
//   relation_space_dim_1     the generator set leaves exactly a line of
//                            relations, so a single relation can be it.
RelationReport check_relation(const Relation& rel);
RelationReport check_peterson_relation();

// Canonical forms of the elliptic labels D_{d,0} for d = 1..d_max, in
// order of d, duplicates dropped. Once d > g-1 a label's canonical class
// can fall outside the n = 0 family; such labels are set aside in
// `excluded` (with their canonical form) rather than silently dropped.
struct EllipticDivisors {
  std::vector<CanonicalDivisor> members;
  std::vector<std::pair<Int, CanonicalDivisor>> excluded;  // (d, canonical)
};

EllipticDivisors elliptic_divisors(const Int& g, const Int& d_max);

}  // namespace nlk3

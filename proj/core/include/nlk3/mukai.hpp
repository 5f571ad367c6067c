#pragma once

// The fixed catalog of homogeneous-space models for general K3 surfaces of
// genus 6..10 and 12, with their GIT parameter spaces, symmetry groups and
// the dimension bookkeeping that pins the 19-dimensional moduli count.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nlk3/arith.hpp"
#include "nlk3/errors.hpp"

namespace nlk3 {

enum class GroupFamily {
  special_linear,             // SL(n), dim n^2 - 1
  projective_linear,          // PGL(n), dim n^2 - 1
  projective_special_linear,  // PSL(n), dim n^2 - 1
  symplectic,                 // Sp(2m) with param 2m, dim m(2m+1)
  spin,                       // Spin(n), dim n(n-1)/2
  g2,                         // exceptional G2, dim 14 (recorded, not derived)
};

const char* to_string(GroupFamily family);

// One genus row of the catalog. A general genus-g K3 arises as the zero
// locus of a section of `bundle` on `ambient`; the parameter space W and
// group G realize the moduli space birationally as W // G (times a
// projective fiber at genus 12). All data is recorded except where a
// recompute is available; validate_catalog() cross-checks everything that
// can be recomputed.
struct MukaiModel {
  Int g;
  std::string ambient_name;
  Int ambient_dim;
  Int section_space_dim;  // dim of the section space V defining W
  std::string bundle_desc;
  Int bundle_rank;
  std::string parameter_space_desc;  // W
  // Set when W = Gr(k, N); empty means W is the projective space P(V).
  std::optional<std::pair<Int, Int>> parameter_grassmannian;
  Int parameter_dim;  // dim W
  std::string group_name;
  GroupFamily group_family;
  Int group_param;  // n of SL(n)/PGL(n)/PSL(n)/Sp(n)/Spin(n); 0 for G2
  Int group_dim;
  Int fiber_dim;  // projective-bundle fiber over the quotient; 13 at g = 12
  // (r, s) with rs = g when the polarization factors through a degree-rs
  // embedding; absent at genus 7 only.
  std::optional<std::pair<Int, Int>> rs_factorization;
  Int section_degree;  // degree of the image of the K3 in P^g; equals 2g-2
  bool section_space_dim_derived;  // dim V back-computed, not recorded
  std::string note;

  // dim W - dim G + fiber; equals 19 for every row.
  Int moduli_dim() const { return parameter_dim - group_dim + fiber_dim; }
};

// The six models, validated (moduli_dim == 19 per row) on first access.
const std::vector<MukaiModel>& mukai_catalog();

// Row lookup; throws UnsupportedGenus outside {6..10, 12}.
const MukaiModel& mukai_model(const Int& g);

// dim Gr(k, n) = k(n - k); throws DomainError unless 0 < k < n.
Int grassmannian_dim(const Int& k, const Int& n);

// Dimension of the family member by formula; nullopt for G2, whose
// dimension is a recorded constant with no parameter to derive it from.
std::optional<Int> recomputed_group_dim(GroupFamily family, const Int& param);

struct CatalogCheck {
  Int g;  // 0 for checks not attached to a genus
  std::string name;
  bool pass;
  std::string detail;
};

// Arithmetic consistency of a catalog: per row, the 19-dimension identity,
// dim W recomputed (Grassmannian formula or dim P(V) = dim V - 1), group
// dimension recomputed, N = dim V for Grassmannian parameter spaces,
// ambient_dim - bundle_rank = 2 + (1 if the row has a projective fiber in
// the surface construction), and rs = g when a factorization is recorded.
std::vector<CatalogCheck> validate_catalog(const std::vector<MukaiModel>& models);

// section_degree == 2g - 2 for one row.
std::vector<CatalogCheck> check_degrees(const MukaiModel& model);
std::vector<CatalogCheck> check_degrees(const Int& g);

// The genus-12 GIT picture: dim Gr(3, 21) = 54, the discriminant boundary
// is a divisor (dim 53), and the incidence variety dominating it has
// dimension 56 with P^3 fibers. Empty for every other genus.
std::vector<CatalogCheck> git_facts(const MukaiModel& model);
std::vector<CatalogCheck> git_facts(const Int& g);

}  // namespace nlk3

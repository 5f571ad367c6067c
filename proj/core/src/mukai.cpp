#include "nlk3/mukai.hpp"

#include <stdexcept>

namespace nlk3 {

const char* to_string(GroupFamily family) {
  switch (family) {
    case GroupFamily::special_linear: return "special_linear";
    case GroupFamily::projective_linear: return "projective_linear";
    case GroupFamily::projective_special_linear: return "projective_special_linear";
    case GroupFamily::symplectic: return "symplectic";
    case GroupFamily::spin: return "spin";
    case GroupFamily::g2: return "g2";
  }
  return "unknown";
}

Int grassmannian_dim(const Int& k, const Int& n) {
  if (k <= 0 || k >= n)
    throw DomainError("Gr(k, n) needs 0 < k < n, got k = " + k.str() +
                      ", n = " + n.str());
  return k * (n - k);
}

std::optional<Int> recomputed_group_dim(GroupFamily family, const Int& param) {
  switch (family) {
    case GroupFamily::special_linear:
    case GroupFamily::projective_linear:
    case GroupFamily::projective_special_linear:
      return Int(param * param - 1);
    case GroupFamily::symplectic: {
      if (is_even(param) && param > 0) {
        Int m = param / 2;
        return Int(m * (2 * m + 1));
      }
      throw DomainError("Sp(n) needs even n > 0, got " + param.str());
    }
    case GroupFamily::spin:
      return Int(param * (param - 1) / 2);
    case GroupFamily::g2:
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

std::vector<MukaiModel> build_catalog() {
  std::vector<MukaiModel> rows;

  rows.push_back(MukaiModel{
      /*g=*/6,
      "Gr(2,5)", 6,
      /*section_space_dim=*/23,
      "O(1)^3 + O(2)", 4,
      "P(H^0(F5, O(2)))", std::nullopt, 22,
      "PSL(2)", GroupFamily::projective_special_linear, 2, 3,
      /*fiber_dim=*/0,
      std::make_pair(Int(2), Int(3)), 10,
      /*section_space_dim_derived=*/true,
      "Gr(2,5) cut by three hyperplanes is the rigid quintic del Pezzo "
      "threefold F5, so the parameter space reduces to its quadric "
      "sections; Aut(F5) = PSL(2). dim H^0(F5, O(2)) = 23 is back-computed "
      "from dim P^22."});

  rows.push_back(MukaiModel{
      7,
      "OGr(5,10)", 10,
      16,
      "O(1)^8", 8,
      "Gr(8,16)", std::make_pair(Int(8), Int(16)), 64,
      "Spin(10)", GroupFamily::spin, 10, 45,
      0,
      std::nullopt, 12,
      false,
      "spinor 10-fold in P^15; no rs factorization (7 is prime)."});

  rows.push_back(MukaiModel{
      8,
      "Gr(2,6)", 8,
      15,
      "O(1)^6", 6,
      "Gr(6,15)", std::make_pair(Int(6), Int(15)), 54,
      "SL(6)", GroupFamily::special_linear, 6, 35,
      0,
      std::make_pair(Int(2), Int(4)), 14,
      false,
      ""});

  rows.push_back(MukaiModel{
      9,
      "LGr(3,6)", 6,
      14,
      "O(1)^4", 4,
      "Gr(4,14)", std::make_pair(Int(4), Int(14)), 40,
      "Sp(6)", GroupFamily::symplectic, 6, 21,
      0,
      std::make_pair(Int(3), Int(3)), 16,
      false,
      ""});

  rows.push_back(MukaiModel{
      10,
      "G2 adjoint fivefold", 5,
      14,
      "O(1)^3", 3,
      "Gr(3,14)", std::make_pair(Int(3), Int(14)), 33,
      "G2", GroupFamily::g2, 0, 14,
      0,
      std::make_pair(Int(2), Int(5)), 18,
      false,
      "the closed orbit of the adjoint representation, a fivefold in "
      "P^13; the acting group is the adjoint form, whose center is "
      "trivial, so dim 14 either way."});

  rows.push_back(MukaiModel{
      12,
      "Gr(3,7)", 12,
      21,
      "(wedge^2 F*)^3", 9,
      "Gr(3,21)", std::make_pair(Int(3), Int(21)), 54,
      "PGL(7)", GroupFamily::projective_linear, 7, 48,
      /*fiber_dim=*/13,
      std::make_pair(Int(3), Int(4)), 22,
      false,
      "a net N of alternating forms on C^7 cuts the degree-22 Fano "
      "threefold Gr(3,V,N); genus-12 K3s are its hyperplane sections, "
      "giving a P^13-bundle over the GIT quotient."});

  for (const MukaiModel& m : rows)
    if (m.moduli_dim() != 19)
      throw std::logic_error("catalog row g = " + m.g.str() +
                             " breaks the 19-dimension identity");
  return rows;
}

}  // namespace

const std::vector<MukaiModel>& mukai_catalog() {
  static const std::vector<MukaiModel> catalog = build_catalog();
  return catalog;
}

const MukaiModel& mukai_model(const Int& g) {
  for (const MukaiModel& m : mukai_catalog())
    if (m.g == g) return m;
  throw UnsupportedGenus("no homogeneous-space model recorded for genus " +
                         g.str() + "; the catalog covers {6..10, 12}");
}

std::vector<CatalogCheck> validate_catalog(const std::vector<MukaiModel>& models) {
  std::vector<CatalogCheck> out;
  for (const MukaiModel& m : models) {
    out.push_back({m.g, "moduli_dim_19", m.moduli_dim() == 19,
                   m.parameter_dim.str() + " - " + m.group_dim.str() +
                       (m.fiber_dim == 0 ? "" : " + " + m.fiber_dim.str()) +
                       " = " + m.moduli_dim().str()});

    if (m.parameter_grassmannian) {
      const auto& [k, n] = *m.parameter_grassmannian;
      Int dim = grassmannian_dim(k, n);
      out.push_back({m.g, "parameter_dim", dim == m.parameter_dim,
                     "dim Gr(" + k.str() + "," + n.str() + ") = " + dim.str()});
      out.push_back({m.g, "section_space_dim", n == m.section_space_dim,
                     "Grassmannian ambient dimension " + n.str() +
                         " vs section space " + m.section_space_dim.str()});
    } else {
      Int dim = m.section_space_dim - 1;
      out.push_back({m.g, "parameter_dim", dim == m.parameter_dim,
                     "dim P(V) = " + m.section_space_dim.str() + " - 1 = " +
                         dim.str()});
    }

    auto redim = recomputed_group_dim(m.group_family, m.group_param);
    out.push_back({m.g, "group_dim",
                   redim ? *redim == m.group_dim : m.group_dim == 14,
                   redim ? "dim " + m.group_name + " = " + redim->str()
                         : "dim G2 = 14, recorded constant"});

    Int locus = m.ambient_dim - m.bundle_rank;
    Int want = m.fiber_dim == 0 ? 2 : 3;
    out.push_back({m.g, "zero_locus_dim", locus == want,
                   m.ambient_dim.str() + " - " + m.bundle_rank.str() + " = " +
                       locus.str() +
                       (want == 2 ? " (the K3 itself)"
                                  : " (a Fano threefold; the K3 is a "
                                    "hyperplane section)")});

    if (m.rs_factorization) {
      const auto& [r, s] = *m.rs_factorization;
      out.push_back({m.g, "rs_product", r * s == m.g,
                     r.str() + " * " + s.str() + " = " + Int(r * s).str()});
    } else {
      out.push_back({m.g, "rs_product", m.g == 7,
                     "no factorization recorded; allowed only at genus 7"});
    }
  }
  return out;
}

std::vector<CatalogCheck> check_degrees(const MukaiModel& m) {
  Int expected = 2 * m.g - 2;
  return {{m.g, "section_degree", m.section_degree == expected,
           "deg = " + m.section_degree.str() + ", 2g-2 = " + expected.str()}};
}

std::vector<CatalogCheck> check_degrees(const Int& g) {
  return check_degrees(mukai_model(g));
}

std::vector<CatalogCheck> git_facts(const MukaiModel& m) {
  if (m.g != 12) return {};
  // Recorded: the discriminant boundary has dim 53; the incidence variety
  // dominating it has dim 56 with P^3 fibers.
  const Int boundary_dim = 53;
  const Int incidence_dim = 56;
  const Int incidence_fiber = 3;
  std::vector<CatalogCheck> out;
  Int dim = grassmannian_dim(3, 21);
  out.push_back({m.g, "parameter_dim", dim == m.parameter_dim,
                 "dim Gr(3,21) = " + dim.str() + " vs recorded " +
                     m.parameter_dim.str()});
  out.push_back({m.g, "boundary_divisor",
                 m.parameter_dim - boundary_dim == 1,
                 "discriminant locus dim 53 has codimension " +
                     Int(m.parameter_dim - boundary_dim).str() +
                     " in the parameter space"});
  out.push_back({m.g, "incidence_fibration",
                 incidence_dim - incidence_fiber == boundary_dim,
                 "incidence variety dim 56 with P^3 fibers: 56 - 3 = 53"});
  return out;
}

std::vector<CatalogCheck> git_facts(const Int& g) {
  if (g < 2) throw DomainError("genus must be at least 2, got " + g.str());
  if (g == 12) return git_facts(mukai_model(g));
  return {};
}

}  // namespace nlk3

#include "nlk3/divisors.hpp"

#include <algorithm>
#include <set>

#include "nlk3/nonbn.hpp"

namespace nlk3 {

bool SupportSet::contains(const CanonicalDivisor& c) const {
  return std::binary_search(members.begin(), members.end(), c);
}

SupportSet decompose(const Int& g, const Int& d, const Int& n,
                     const Int& bound) {
  GenusContext ctx(g);
  NLPair source(ctx, d, n);
  if (!is_even(n))
    throw InvalidSource("source self-intersection must be even, got " +
                        n.str());
  Int delta = discriminant(source);
  if (delta <= 0)
    throw InvalidSource("source discriminant must be positive, got " +
                        delta.str());
  if (bound < 0) throw DomainError("bound must be >= 0, got " + bound.str());

  // Membership depends only on the divisor class of the source (the maps
  // v -> v + mL and v -> -v identify the loci), so search for the standard
  // representative. The box max(4, delta) is exhaustive: see header.
  Int box = std::max(bound, std::max(Int(4), delta));
  NLPair std_src = canonicalize(source).standard_rep();

  std::set<CanonicalDivisor> members;
  for (Int k = 1; k * k <= delta; ++k) {
    Int ksq = k * k;
    if (delta % ksq != 0) continue;
    Int dq = delta / ksq;  // candidate host discriminant
    for (Int rp = 0; rp <= g - 1; ++rp) {
      if (mod_floor(rp * rp - dq, ctx.evenmod) != 0) continue;
      // A vector with v.L = d in the host lattice forces k rp = +-d
      // (mod 2g-2); cheap filter before the vector search.
      Int want = mod_floor(d, ctx.ell_sq);
      if (mod_floor(k * rp, ctx.ell_sq) != want &&
          mod_floor(-k * rp, ctx.ell_sq) != want)
        continue;
      CanonicalDivisor host(ctx, dq, rp);
      if (members.count(host)) continue;
      if (!represent(host, std_src, box).empty()) members.insert(host);
    }
  }
  return SupportSet{g, source,
                    std::vector<CanonicalDivisor>(members.begin(), members.end())};
}

GeneratorSet generator_set(const Int& g) {
  bool supported = (g >= 6 && g <= 10) || g == 12;
  if (!supported)
    throw UnsupportedGenus("generator sets are recorded for g in {6..10, 12}, got " +
                           g.str());
  std::set<CanonicalDivisor> members;
  members.insert(canonicalize(NLPair(g, 0, -2)));
  for (const auto& [d, n] : nonbn_closed_form(g).pairs)
    members.insert(canonicalize(NLPair(g, d, n)));
  if (g == 6) members.insert(canonicalize(NLPair(g, 4, 0)));
  GeneratorSet out;
  out.g = g;
  out.members.assign(members.begin(), members.end());
  out.expected_rank = picard_rank(g).rho;
  out.relation_dim = Int(out.members.size()) - out.expected_rank;
  return out;
}

Relation peterson_relation() {
  return Relation{12,
                  {{3, 8, 2},
                   {-1, 9, 2},
                   {-4, 10, 4},
                   {2, 11, 4},
                   {8, 4, 0},
                   {-5, 5, 0},
                   {1, 6, 0}}};
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += " ";
    out += p;
  }
  return out;
}

}  // namespace

RelationReport check_relation(const Relation& rel) {
  RelationReport report;

  std::vector<CanonicalDivisor> valid;
  std::vector<std::string> bad_labels;
  for (const RelationTerm& t : rel.terms) {
    try {
      valid.push_back(canonicalize(NLPair(rel.g, t.d, t.n)));
    } catch (const InvalidDivisor&) {
      bad_labels.push_back("D_{" + t.d.str() + "," + t.n.str() + "}");
    }
  }
  report.checks.push_back(
      {"labels_valid", bad_labels.empty(),
       bad_labels.empty() ? "all " + std::to_string(rel.terms.size()) +
                                " labels name divisors"
                          : "invalid: " + join(bad_labels)});

  bool members_ok = false;
  std::string member_detail;
  try {
    GeneratorSet gens = generator_set(rel.g);
    std::vector<std::string> outsiders;
    for (const CanonicalDivisor& c : valid)
      if (!std::binary_search(gens.members.begin(), gens.members.end(), c))
        outsiders.push_back(c.label());
    members_ok = outsiders.empty();
    member_detail = members_ok
                        ? "all labels lie in the generator set"
                        : "not generators: " + join(outsiders);

    bool dim_ok = gens.relation_dim == 1;
    report.checks.push_back(
        {"labels_among_generators", members_ok, member_detail});
    report.checks.push_back(
        {"relation_space_dim_1", dim_ok,
         "|generators| - rho = " + gens.relation_dim.str()});
  } catch (const UnsupportedGenus& e) {
    report.checks.push_back({"labels_among_generators", false, e.what()});
    report.checks.push_back({"relation_space_dim_1", false, e.what()});
  }

  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const StructureCheck& c) { return c.pass; });
  return report;
}

RelationReport check_peterson_relation() {
  return check_relation(peterson_relation());
}

EllipticDivisors elliptic_divisors(const Int& g, const Int& d_max) {
  GenusContext ctx(g);
  if (d_max < 1)
    throw DomainError("d_max must be >= 1, got " + d_max.str());
  EllipticDivisors out;
  std::set<CanonicalDivisor> seen;
  for (Int d = 1; d <= d_max; ++d) {
    CanonicalDivisor c = canonicalize(NLPair(ctx, d, 0));
    if (!seen.insert(c).second) continue;
    if (c.rep_n() == 0)
      out.members.push_back(c);
    else
      out.excluded.emplace_back(d, c);
  }
  return out;
}

}  // namespace nlk3

#include "nlk3/report.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace nlk3 {

namespace {

using PairList = std::vector<std::pair<int, int>>;

// Recorded anchor data the report compares its recomputations against.

const std::map<int, int>& rho_anchors() {
  static const std::map<int, int> a = {{6, 6}, {7, 7},  {8, 7},
                                       {9, 8}, {10, 9}, {12, 11}};
  return a;
}

const std::map<int, PairList>& nonbn_anchors() {
  static const std::map<int, PairList> a = {
      {6, {{1, 0}, {2, 0}, {3, 0}, {5, 2}}},
      {7, {{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 2}, {6, 2}}},
      {8, {{1, 0}, {2, 0}, {3, 0}, {4, 0}, {6, 2}, {7, 2}}},
      {9, {{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 2}, {7, 2}}},
      {10, {{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {7, 2}, {8, 2}, {9, 4}}},
      {12,
       {{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0},
        {7, 2}, {8, 2}, {9, 2}, {10, 4}, {11, 4}}},
  };
  return a;
}

// Generators: D_{0,-2} plus the non-BN divisors, plus D_{4,0} at genus 6.
PairList generator_anchor(int g) {
  PairList out = {{0, -2}};
  const PairList& nb = nonbn_anchors().at(g);
  out.insert(out.end(), nb.begin(), nb.end());
  if (g == 6) out.push_back({4, 0});
  return out;
}

// C_{2,0} decomposes into D_{1,0} and D_{2,0} everywhere in the catalog
// range, with D_{5,2} joining at genus 7.
PairList c20_anchor(int g) {
  PairList out = {{1, 0}, {2, 0}};
  if (g == 7) out.push_back({5, 2});
  return out;
}

std::vector<CanonicalDivisor> canonical_set(const Int& g, const PairList& pairs) {
  std::vector<CanonicalDivisor> out;
  for (const auto& [d, n] : pairs) out.push_back(canonicalize(NLPair(g, d, n)));
  std::sort(out.begin(), out.end());
  return out;
}

// Divisor lists in the value/expected columns use compact d:n tokens
// (standard representatives) rather than D_{d,n} labels, keeping the
// columns free of commas so they embed in flat tables downstream.
std::string rep_list(const std::vector<CanonicalDivisor>& divisors) {
  std::string out;
  for (const CanonicalDivisor& c : divisors) {
    if (!out.empty()) out += " ";
    out += c.rep_d().str() + ":" + c.rep_n().str();
  }
  return out;
}

std::string pair_list(const std::vector<std::pair<Int, Int>>& pairs) {
  std::string out;
  for (const auto& [d, n] : pairs) {
    if (!out.empty()) out += " ";
    out += d.str() + ":" + n.str();
  }
  return out;
}

ReportCheck lift(const CatalogCheck& c, const std::string& prefix = "") {
  return ReportCheck{c.g,
                     prefix + c.name,
                     c.pass,
                     c.pass ? "ok" : "fail",
                     "ok",
                     c.detail};
}

ReportCheck lift(const StructureCheck& c) {
  return ReportCheck{12,
                     "peterson_" + c.name,
                     c.pass,
                     c.pass ? "ok" : "fail",
                     "ok",
                     c.detail};
}

const MukaiModel& row_for(const std::vector<MukaiModel>& catalog, const Int& g) {
  for (const MukaiModel& m : catalog)
    if (m.g == g) return m;
  throw DomainError("supplied catalog lacks a row for genus " + g.str());
}

}  // namespace

const std::vector<Int>& report_genera() {
  static const std::vector<Int> gs = {6, 7, 8, 9, 10, 12};
  return gs;
}

FullReport build_report() { return build_report(mukai_catalog()); }

FullReport build_report(const std::vector<MukaiModel>& catalog) {
  FullReport report;
  std::vector<ReportCheck>& checks = report.checks;

  for (const Int& g : report_genera()) {
    const int gi = g.convert_to<int>();

    GenusSection section{picard_rank(g),          generator_set(g),
                         nonbn_closed_form(g),    decompose(g, 1, 0),
                         decompose(g, 2, 0),      row_for(catalog, g)};

    // Rank against the recorded table.
    Int expected_rho = rho_anchors().at(gi);
    checks.push_back({g, "rho", section.rho.rho == expected_rho,
                      section.rho.rho.str(), expected_rho.str(),
                      "(31g+24)/24 - alpha/4 - beta/6 - frac - squares"});

    // Generator count: rho members, one extra at genus 12.
    Int expected_count = expected_rho + (g == 12 ? 1 : 0);
    checks.push_back({g, "generator_count",
                      Int(section.generators.members.size()) == expected_count,
                      std::to_string(section.generators.members.size()),
                      expected_count.str(),
                      "rank-many generators, one extra at genus 12"});

    Int expected_reldim = g == 12 ? 1 : 0;
    checks.push_back({g, "relation_dim",
                      section.generators.relation_dim == expected_reldim,
                      section.generators.relation_dim.str(),
                      expected_reldim.str(),
                      "|generators| - rho"});

    auto expected_gens = canonical_set(g, generator_anchor(gi));
    checks.push_back({g, "generators",
                      section.generators.members == expected_gens,
                      rep_list(section.generators.members),
                      rep_list(expected_gens), "recorded generating set"});

    // Non-BN list against the recorded itemization, and against the raw
    // inequality system.
    PairList expected_nb = nonbn_anchors().at(gi);
    std::vector<std::pair<Int, Int>> expected_pairs;
    for (const auto& [d, n] : expected_nb) expected_pairs.emplace_back(d, n);
    checks.push_back({g, "nonbn_list",
                      section.nonbn.pairs == expected_pairs,
                      pair_list(section.nonbn.pairs),
                      pair_list(expected_pairs), "recorded non-BN labels"});

    NonBNList sys = nonbn_system(g);
    checks.push_back({g, "nonbn_methods_agree",
                      sys.pairs == section.nonbn.pairs,
                      pair_list(sys.pairs), pair_list(section.nonbn.pairs),
                      "closed form vs counting system"});

    // Small curve classes.
    auto expected_c10 = canonical_set(g, {{1, 0}});
    checks.push_back({g, "c10_support", section.c10.members == expected_c10,
                      rep_list(section.c10.members), rep_list(expected_c10),
                      "support of C_{1,0}"});

    auto expected_c20 = canonical_set(g, c20_anchor(gi));
    checks.push_back({g, "c20_support", section.c20.members == expected_c20,
                      rep_list(section.c20.members), rep_list(expected_c20),
                      "support of C_{2,0}"});

    // Catalog arithmetic for this row.
    for (const CatalogCheck& c : validate_catalog({section.model}))
      checks.push_back(lift(c));
    for (const CatalogCheck& c : check_degrees(section.model))
      checks.push_back(lift(c));
    for (const CatalogCheck& c : git_facts(section.model))
      checks.push_back(lift(c, "git_"));

    report.sections.push_back(std::move(section));
  }

  for (const StructureCheck& c : check_peterson_relation().checks)
    checks.push_back(lift(c));

  report.all_pass = std::all_of(checks.begin(), checks.end(),
                                [](const ReportCheck& c) { return c.pass; });
  return report;
}

}  // namespace nlk3

#pragma once

// Whole-catalog consistency report: recomputes every rank, generator set,
// non-BN list, small curve-class decomposition, catalog identity and the
// genus-12 relation, and compares each against its recorded value.

#include <string>
#include <vector>

#include "nlk3/divisors.hpp"
#include "nlk3/mukai.hpp"
#include "nlk3/nonbn.hpp"
#include "nlk3/picard.hpp"

namespace nlk3 {

struct ReportCheck {
  Int g;  // 0 for checks not attached to a single genus
  std::string name;
  bool pass;
  std::string value;     // what was computed
  std::string expected;  // what is recorded
  std::string detail;
};

// Everything computed for one catalog genus, kept for structured output.
struct GenusSection {
  RhoBreakdown rho;
  GeneratorSet generators;
  NonBNList nonbn;
  SupportSet c10;  // decomposition of C_{1,0}
  SupportSet c20;  // decomposition of C_{2,0}
  MukaiModel model;
};

struct FullReport {
  std::vector<GenusSection> sections;  // ascending g
  std::vector<ReportCheck> checks;
  bool all_pass;
};

// Run against the built-in catalog, or against a caller-supplied one (the
// computed columns always come from the library; only catalog-derived
// checks see the substitute, which is how the output layer exercises its
// failure path).
FullReport build_report();
FullReport build_report(const std::vector<MukaiModel>& catalog);

// The genera the report covers: 6..10 and 12.
const std::vector<Int>& report_genera();

}  // namespace nlk3

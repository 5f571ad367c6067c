#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "nlk3/report.hpp"

using namespace nlk3;

TEST_CASE("the full report recomputes everything and agrees") {
  FullReport rep = build_report();
  CHECK(rep.all_pass);
  CHECK(rep.checks.size() == 95);
  REQUIRE(rep.sections.size() == 6);

  const std::vector<Int>& gs = report_genera();
  REQUIRE(gs == std::vector<Int>{6, 7, 8, 9, 10, 12});
  for (size_t i = 0; i < gs.size(); ++i) {
    const GenusSection& s = rep.sections[i];
    CHECK(s.rho.g == gs[i]);
    CHECK(s.model.g == gs[i]);
    CHECK(s.nonbn.g == gs[i]);
    CHECK(s.c10.members.size() == 1);
    CHECK(s.generators.relation_dim == (gs[i] == 12 ? 1 : 0));
  }

  for (const ReportCheck& c : rep.checks) {
    CAPTURE(c.g);
    CAPTURE(c.name);
    CAPTURE(c.value);
    CAPTURE(c.expected);
    CHECK(c.pass);
    CHECK_FALSE(c.name.empty());
    CHECK_FALSE(c.value.empty());
    CHECK_FALSE(c.expected.empty());
  }
}

TEST_CASE("check counts per genus") {
  FullReport rep = build_report();
  std::map<int, int> per_genus;
  int peterson = 0;
  for (const ReportCheck& c : rep.checks) {
    if (c.name.rfind("peterson_", 0) == 0) {
      ++peterson;
      continue;
    }
    ++per_genus[c.g.convert_to<int>()];
  }
  CHECK(peterson == 3);
  CHECK(per_genus ==
        std::map<int, int>{{6, 14}, {7, 15}, {8, 15}, {9, 15}, {10, 15},
                           {12, 18}});
}

TEST_CASE("recorded anchors appear in the value/expected columns") {
  FullReport rep = build_report();
  bool saw_rho12 = false, saw_gens6 = false;
  for (const ReportCheck& c : rep.checks) {
    if (c.g == 12 && c.name == "rho") {
      CHECK(c.value == "11");
      CHECK(c.expected == "11");
      saw_rho12 = true;
    }
    if (c.g == 6 && c.name == "generators") {
      CHECK(c.expected == "1:0 2:0 5:2 3:0 4:0 0:-2");
      saw_gens6 = true;
    }
  }
  CHECK(saw_rho12);
  CHECK(saw_gens6);
}

TEST_CASE("a perturbed catalog fails exactly its own checks") {
  std::vector<MukaiModel> rows = mukai_catalog();
  for (MukaiModel& m : rows)
    if (m.g == 8) m.group_dim += 1;
  FullReport rep = build_report(rows);
  CHECK_FALSE(rep.all_pass);

  std::vector<std::pair<int, std::string>> failing;
  for (const ReportCheck& c : rep.checks)
    if (!c.pass) failing.emplace_back(c.g.convert_to<int>(), c.name);
  CHECK(failing ==
        std::vector<std::pair<int, std::string>>{{8, "moduli_dim_19"},
                                                 {8, "group_dim"}});
  for (const ReportCheck& c : rep.checks)
    if (!c.pass) {
      CHECK(c.value == "fail");
      CHECK(c.expected == "ok");
    }
}

TEST_CASE("a catalog missing a genus is rejected") {
  std::vector<MukaiModel> rows;
  for (const MukaiModel& m : mukai_catalog())
    if (m.g != 12) rows.push_back(m);
  CHECK_THROWS_AS(build_report(rows), DomainError);
}

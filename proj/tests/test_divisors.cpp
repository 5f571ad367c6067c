#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "nlk3/divisors.hpp"
#include "nlk3/nonbn.hpp"
#include "support/oracles.hpp"

using namespace nlk3;

namespace {

std::vector<std::string> labels(const std::vector<CanonicalDivisor>& ds) {
  std::vector<std::string> out;
  for (const CanonicalDivisor& c : ds) out.push_back(c.label());
  return out;
}

}  // namespace

TEST_CASE("support of C_{2,0} at genus 7") {
  SupportSet s = decompose(7, 2, 0);
  CHECK(s.g == 7);
  CHECK(labels(s.members) ==
        std::vector<std::string>{"D_{1,0}", "D_{5,2}", "D_{2,0}"});
  CHECK(s.contains(canonicalize(NLPair(7, 2, 0))));
  CHECK(s.contains(canonicalize(NLPair(7, 5, 2))));
  CHECK_FALSE(s.contains(canonicalize(NLPair(7, 3, 0))));
}

TEST_CASE("support of C_{2,0} at genus 11 picks up D_{9,4}") {
  SupportSet s = decompose(11, 2, 0);
  CHECK(s.contains(canonicalize(NLPair(11, 9, 4))));
  CHECK(labels(s.members) ==
        std::vector<std::string>{"D_{1,0}", "D_{9,4}", "D_{2,0}"});
}

TEST_CASE("support of C_{0,-2} at genus 6") {
  SupportSet s = decompose(6, 0, -2);
  CHECK(labels(s.members) ==
        std::vector<std::string>{"D_{5,2}", "D_{0,-2}"});
}

TEST_CASE("C_{1,0} is irreducible at every genus") {
  for (Int g = 2; g <= 30; ++g) {
    SupportSet s = decompose(g, 1, 0);
    CAPTURE(g);
    REQUIRE(s.members.size() == 1);
    CHECK(s.members[0] == canonicalize(NLPair(g, 1, 0)));
  }
}

TEST_CASE("a valid source always lies in its own support") {
  oracles::Rng rng(0xd1ce);
  for (int i = 0; i < 60; ++i) {
    auto [g, d, n] = oracles::random_valid_pair(rng, 12, 300);
    CAPTURE(g);
    CAPTURE(d);
    CAPTURE(n);
    CHECK(decompose(g, d, n).contains(canonicalize(NLPair(g, d, n))));
  }
}

TEST_CASE("members divide the discriminant by a compatible square") {
  oracles::Rng rng(0xface);
  for (int i = 0; i < 40; ++i) {
    auto [g, d, n] = oracles::random_valid_pair(rng, 12, 300);
    SupportSet s = decompose(g, d, n);
    Int delta = discriminant(s.source);
    Int ell = 2 * g - 2;
    Int prev_delta = 0, prev_r = -1;
    for (const CanonicalDivisor& c : s.members) {
      CAPTURE(g);
      CAPTURE(d);
      CAPTURE(n);
      CAPTURE(c.delta());
      REQUIRE(delta % c.delta() == 0);
      Int q = delta / c.delta();
      Int k = 0;
      while (k * k < q) ++k;
      CHECK(k * k == q);  // quotient is a perfect square
      // k r' = +-d (mod 2g-2)
      bool cong = mod_floor(k * c.r() - d, ell) == 0 ||
                  mod_floor(k * c.r() + d, ell) == 0;
      CHECK(cong);
      // sorted by (delta, r), strictly: members are distinct classes
      bool increasing = c.delta() > prev_delta ||
                        (c.delta() == prev_delta && c.r() > prev_r);
      CHECK(increasing);
      prev_delta = c.delta();
      prev_r = c.r();
    }
  }
}

TEST_CASE("support agrees with the direct lattice-vector oracle") {
  oracles::Rng rng(0x0a11);
  for (int i = 0; i < 60; ++i) {
    auto [g, d, n] = oracles::random_valid_pair(rng, 12, 400);
    CAPTURE(g);
    CAPTURE(d);
    CAPTURE(n);
    CHECK(decompose(g, d, n).members == oracles::decompose_support(g, d, n));
  }
  // and on the C_{2,0} family, where the answer jumps with g mod 4
  for (Int g = 2; g <= 20; ++g) {
    CAPTURE(g);
    CHECK(decompose(g, 2, 0).members == oracles::decompose_support(g, 2, 0));
  }
}

TEST_CASE("raising the search bound never changes the support") {
  SupportSet base = decompose(7, 2, 0);
  CHECK(decompose(7, 2, 0, 500).members == base.members);
  CHECK(decompose(6, 0, -2, 1000).members == decompose(6, 0, -2).members);
}

TEST_CASE("decompose rejects bad sources") {
  CHECK_THROWS_AS(decompose(6, 1, 1), InvalidSource);   // odd n
  CHECK_THROWS_AS(decompose(7, 0, 0), InvalidSource);   // delta = 0
  CHECK_THROWS_AS(decompose(6, 2, 2), InvalidSource);   // delta < 0
  CHECK_THROWS_AS(decompose(1, 1, 0), DomainError);     // genus too small
  CHECK_THROWS_AS(decompose(7, 2, 0, -1), DomainError); // negative bound
}

TEST_CASE("generator set at genus 6") {
  GeneratorSet gs = generator_set(6);
  CHECK(labels(gs.members) ==
        std::vector<std::string>{"D_{1,0}", "D_{2,0}", "D_{5,2}", "D_{3,0}",
                                 "D_{4,0}", "D_{0,-2}"});
  CHECK(gs.expected_rank == 6);
  CHECK(gs.relation_dim == 0);
}

TEST_CASE("generator set at genus 9") {
  GeneratorSet gs = generator_set(9);
  CHECK(labels(gs.members) ==
        std::vector<std::string>{"D_{1,0}", "D_{2,0}", "D_{6,2}", "D_{3,0}",
                                 "D_{4,0}", "D_{7,2}", "D_{5,0}", "D_{0,-2}"});
  CHECK(gs.expected_rank == 8);
  CHECK(gs.relation_dim == 0);
}

TEST_CASE("generator set at genus 12 has one relation") {
  GeneratorSet gs = generator_set(12);
  CHECK(gs.members.size() == 12);
  CHECK(gs.expected_rank == 11);
  CHECK(gs.relation_dim == 1);
  // D_{0,-2} and every non-BN divisor is present
  CHECK(std::binary_search(gs.members.begin(), gs.members.end(),
                           canonicalize(NLPair(12, 0, -2))));
  for (const auto& [d, n] : nonbn_closed_form(12).pairs)
    CHECK(std::binary_search(gs.members.begin(), gs.members.end(),
                             canonicalize(NLPair(12, d, n))));
}

TEST_CASE("generator sets exist only for the catalog genera") {
  CHECK_THROWS_AS(generator_set(5), UnsupportedGenus);
  CHECK_THROWS_AS(generator_set(11), UnsupportedGenus);
  CHECK_THROWS_AS(generator_set(13), UnsupportedGenus);
  for (Int g : {Int(6), Int(7), Int(8), Int(9), Int(10), Int(12)})
    CHECK_NOTHROW(generator_set(g));
}

TEST_CASE("the genus-12 relation passes its structural checks") {
  RelationReport rep = check_peterson_relation();
  REQUIRE(rep.checks.size() == 3);
  CHECK(rep.checks[0].name == "labels_valid");
  CHECK(rep.checks[1].name == "labels_among_generators");
  CHECK(rep.checks[2].name == "relation_space_dim_1");
  for (const StructureCheck& c : rep.checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
  }
  CHECK(rep.all_pass);

  Relation rel = peterson_relation();
  CHECK(rel.g == 12);
  CHECK(rel.terms.size() == 7);
  Int coeff_sum = 0;
  for (const RelationTerm& t : rel.terms) coeff_sum += t.coeff;
  CHECK(coeff_sum == 4);  // 3 - 1 - 4 + 2 + 8 - 5 + 1
}

TEST_CASE("an invalid label in a relation is reported, not fatal") {
  Relation rel = peterson_relation();
  rel.terms[0] = {3, 7, 3};  // odd self-intersection
  RelationReport rep = check_relation(rel);
  CHECK_FALSE(rep.all_pass);
  CHECK_FALSE(rep.checks[0].pass);
  CHECK(rep.checks[0].detail.find("D_{7,3}") != std::string::npos);
  CHECK(rep.checks[1].pass);  // the remaining labels are still generators
  CHECK(rep.checks[2].pass);
}

TEST_CASE("a valid non-generator label fails the membership check") {
  Relation rel = peterson_relation();
  rel.terms[0] = {3, 12, 4};  // reduces to D_{10,2}, not a generator
  RelationReport rep = check_relation(rel);
  CHECK(rep.checks[0].pass);
  CHECK_FALSE(rep.checks[1].pass);
  CHECK(rep.checks[1].detail.find("D_{10,2}") != std::string::npos);
  CHECK_FALSE(rep.all_pass);
}

TEST_CASE("a relation at a genus without generators fails cleanly") {
  Relation rel{11, {{1, 1, 0}}};
  RelationReport rep = check_relation(rel);
  CHECK(rep.checks[0].pass);
  CHECK_FALSE(rep.checks[1].pass);
  CHECK_FALSE(rep.checks[2].pass);
  CHECK_FALSE(rep.all_pass);
}

TEST_CASE("elliptic families") {
  EllipticDivisors small = elliptic_divisors(5, 3);
  CHECK(labels(small.members) ==
        std::vector<std::string>{"D_{1,0}", "D_{2,0}", "D_{3,0}"});
  CHECK(small.excluded.empty());

  EllipticDivisors one = elliptic_divisors(6, 1);
  CHECK(labels(one.members) == std::vector<std::string>{"D_{1,0}"});

  EllipticDivisors g7 = elliptic_divisors(7, 7);
  CHECK(labels(g7.members) ==
        std::vector<std::string>{"D_{1,0}", "D_{2,0}", "D_{3,0}", "D_{4,0}",
                                 "D_{5,0}", "D_{6,0}"});
  REQUIRE(g7.excluded.size() == 1);
  CHECK(g7.excluded[0].first == 7);
  CHECK(g7.excluded[0].second.label() == "D_{5,-2}");
  CHECK(g7.excluded[0].second.delta() == 49);
  CHECK(g7.excluded[0].second.r() == 5);
}

TEST_CASE("elliptic family argument validation") {
  CHECK_THROWS_AS(elliptic_divisors(7, 0), DomainError);
  CHECK_THROWS_AS(elliptic_divisors(1, 3), DomainError);
}

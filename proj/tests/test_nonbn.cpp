#include <doctest.h>

#include <algorithm>
#include <initializer_list>
#include <set>
#include <utility>
#include <vector>

#include "nlk3/lattice.hpp"
#include "nlk3/nonbn.hpp"

using namespace nlk3;

namespace {

using PairList = std::vector<std::pair<Int, Int>>;

PairList pairs_of(std::initializer_list<std::pair<int, int>> raw) {
  PairList out;
  for (const auto& [d, n] : raw) out.emplace_back(d, n);
  return out;
}

}  // namespace

TEST_CASE("non-BN lists for the catalog genera") {
  CHECK(nonbn_closed_form(Int(6)).pairs ==
        pairs_of({{1, 0}, {2, 0}, {3, 0}, {5, 2}}));
  CHECK(nonbn_closed_form(Int(7)).pairs ==
        pairs_of({{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 2}, {6, 2}}));
  CHECK(nonbn_closed_form(Int(8)).pairs ==
        pairs_of({{1, 0}, {2, 0}, {3, 0}, {4, 0}, {6, 2}, {7, 2}}));
  CHECK(nonbn_closed_form(Int(9)).pairs ==
        pairs_of({{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 2}, {7, 2}}));
  CHECK(nonbn_closed_form(Int(10)).pairs ==
        pairs_of({{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0},
                  {7, 2}, {8, 2}, {9, 4}}));
  CHECK(nonbn_closed_form(Int(12)).pairs ==
        pairs_of({{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0},
                  {7, 2}, {8, 2}, {9, 2}, {10, 4}, {11, 4}}));
}

TEST_CASE("small genera have only the elliptic entries") {
  CHECK(nonbn_closed_form(Int(2)).pairs == pairs_of({{1, 0}}));
  CHECK(nonbn_closed_form(Int(3)).pairs == pairs_of({{1, 0}, {2, 0}}));
}

TEST_CASE("method tag travels with the list") {
  CHECK(nonbn_closed_form(Int(6)).method == NonBNMethod::closed_form);
  CHECK(nonbn_system(Int(6)).method == NonBNMethod::system);
  CHECK(std::string(to_string(NonBNMethod::closed_form)) == "closed_form");
  CHECK(std::string(to_string(NonBNMethod::system)) == "system");
}

TEST_CASE("closed form and counting system agree through genus 60") {
  for (Int g = 2; g <= 60; ++g) {
    NonBNList a = nonbn_closed_form(g);
    NonBNList b = nonbn_system(g);
    CAPTURE(g);
    CHECK(a.g == g);
    CHECK(a.pairs == b.pairs);
  }
}

TEST_CASE("the n = 0 stratum has exactly floor((g+1)/2) entries") {
  for (long long g = 2; g <= 40; ++g) {
    NonBNList list = nonbn_closed_form(Int(g));
    long long zeros = 0;
    for (const auto& [d, n] : list.pairs)
      if (n == 0) ++zeros;
    CAPTURE(g);
    CHECK(zeros == (g + 1) / 2);
  }
}

TEST_CASE("every entry is a standard representative inside the bounds") {
  for (Int g : {Int(5), Int(9), Int(16), Int(25), Int(33)}) {
    NonBNList list = nonbn_closed_form(g);
    const Int m = 2 * g - 2;
    std::set<CanonicalDivisor> seen;
    PairList sorted = list.pairs;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) {
                return std::make_pair(a.second, a.first) <
                       std::make_pair(b.second, b.first);
              });
    CHECK(sorted == list.pairs);  // emitted in (n, d) order
    for (const auto& [d, n] : list.pairs) {
      CAPTURE(g);
      CAPTURE(d);
      CAPTURE(n);
      CHECK(n >= 0);
      CHECK(is_even(n));
      CHECK(2 * n <= g - 1);  // n <= (g-1)/2 follows from the two bounds
      CHECK(d >= 1);
      CHECK(d <= g - 1);
      CHECK(d * d > m * n);  // valid divisor label
      CanonicalDivisor c = canonicalize(NLPair(g, d, n));
      CHECK(c.rep_d() == d);  // already in standard form
      CHECK(c.rep_n() == n);
      CHECK(seen.insert(c).second);  // no repeated divisor classes
    }
  }
}

TEST_CASE("membership respects the divisor class, not the label") {
  CHECK(is_nonbn(Int(6), Int(3), Int(0)));
  // (15, 22) at genus 6 reduces to D_{5,2}, which is on the list.
  CHECK(is_nonbn(Int(6), Int(15), Int(22)));
  CHECK(is_nonbn(Int(7), Int(7), Int(4)));  // reduces to D_{5,2}
  CHECK_FALSE(is_nonbn(Int(7), Int(6), Int(0)));
  CHECK_FALSE(is_nonbn(Int(6), Int(0), Int(-2)));
  CHECK_FALSE(is_nonbn(Int(6), Int(4), Int(0)));
}

TEST_CASE("membership rejects labels that are not divisors") {
  CHECK_THROWS_AS(is_nonbn(Int(6), Int(1), Int(1)), InvalidDivisor);
  CHECK_THROWS_AS(is_nonbn(Int(6), Int(0), Int(0)), InvalidDivisor);
  CHECK_THROWS_AS(is_nonbn(Int(1), Int(1), Int(0)), DomainError);
}

TEST_CASE("list construction rejects genus below 2") {
  CHECK_THROWS_AS(nonbn_closed_form(Int(1)), DomainError);
  CHECK_THROWS_AS(nonbn_system(Int(0)), DomainError);
}

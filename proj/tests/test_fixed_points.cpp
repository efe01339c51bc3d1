#include <doctest.h>

#include <map>
#include <set>

#include "betamaps/fixed_points.hpp"
#include "betamaps/involution.hpp"

using namespace betamaps;

namespace {

BetaTree T(const char* s) { return from_text(s); }

std::set<BetaTree> brute_force_fixed(std::size_t n) {
  std::set<BetaTree> out;
  generate_all(n, [&](const BetaTree& t) {
    if (h(t) == t) out.insert(t);
  });
  return out;
}

std::set<BetaTree> enumerated(std::size_t n) {
  std::set<BetaTree> out;
  enumerate_fixed(n, [&](const BetaTree& t) { CHECK(out.insert(t).second); });
  return out;
}

// (1/n) C(3n-2, n-1) in 64-bit arithmetic, fine for n <= 12.
unsigned long long closed_form(unsigned long long n) {
  unsigned long long c = 1;
  for (unsigned long long i = 1; i <= n - 1; ++i) c = c * (2 * n - 1 + i) / i;
  return c / n;
}

}  // namespace

TEST_CASE("is_fixed") {
  CHECK(is_fixed(T("(1)")));
  CHECK(is_fixed(T("(1 (1))")));
  CHECK_FALSE(is_fixed(T("(1 (1 (1)))")));
  CHECK(is_fixed(T("(2 (2 (1) (1)))")));
}

TEST_CASE("build_f1") {
  CHECK(build_f1(T("(1)")) == T("(1 (1))"));
  CHECK(build_f1(T("(1 (1))")) == T("(2 (1) (1 (1)))"));
  for (std::size_t n = 1; n <= 5; ++n) {
    generate_all(n, [&](const BetaTree& a) {
      const BetaTree t = build_f1(a);
      CHECK(t.size() == 2 * n);
      CHECK(is_valid(t));
      CHECK(is_fixed(t));
    });
  }
}

TEST_CASE("build_f2") {
  CHECK(build_f2(T("(1)"), T("(1 (1))"), 2) == T("(2 (2 (1) (1)))"));
  const BetaTree six = build_f2(T("(1)"), T("(2 (1) (1 (1)))"), 2);
  CHECK(six.size() == 6);
  CHECK(is_fixed(six));

  CHECK_THROWS_WITH_AS(build_f2(T("(1)"), T("(1 (1))"), 1), "build_f2: b must be at least 2",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_f2(T("(1)"), T("(1)"), 2),
                       "build_f2: a2 must have at least two nodes", std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_f2(T("(1)"), T("(1 (1))"), 3),
                       "build_f2: root(a2) must be at least b-1", std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_f2(T("(1)"), T("(2 (1) (1))"), 2),
                       "build_f2: a2 must be a fixed point of h", std::invalid_argument);
}

TEST_CASE("every legal build_f2 input up to 10 nodes gives a fixed point") {
  std::size_t built = 0;
  for (std::size_t s = 1; 2 * s + 2 <= 10; ++s) {
    const auto a1s = all_trees(s);
    for (std::size_t m = 2; 2 * s + m <= 10; m += 2) {
      for (const auto& a2 : brute_force_fixed(m)) {
        for (long b = 2; b <= a2.label + 1; ++b) {
          for (const auto& a1 : a1s) {
            const BetaTree t = build_f2(a1, a2, b);
            CHECK(t.size() == 2 * s + m);
            CHECK(is_fixed(t));
            ++built;
          }
        }
      }
    }
  }
  CHECK(built > 0);
}

TEST_CASE("classify") {
  CHECK(std::holds_alternative<F0>(classify(T("(1)"))));
  CHECK(classify(T("(2 (1) (1 (1)))")) == FixedPointStructure{F1{T("(1 (1))")}});
  CHECK(classify(T("(2 (2 (1) (1)))")) == FixedPointStructure{F2{T("(1)"), T("(1 (1))"), 2}});
  CHECK(describe(classify(T("(2 (2 (1) (1)))"))) == "F2\t(1)\t(1 (1))\t2");
  CHECK_THROWS_WITH_AS(classify(T("(1 (1 (1)))")), "not a fixed point", NotFixedPointError);
}

TEST_CASE("structure up to 10 nodes") {
  for (std::size_t n = 2; n <= 10; n += 2) {
    const auto brute = brute_force_fixed(n);
    CHECK(enumerated(n) == brute);
    for (const auto& t : brute) {
      const auto s = classify(t);
      CHECK(build(s) == t);
      CHECK_FALSE(std::holds_alternative<F0>(s));
    }
  }
}

TEST_CASE("odd sizes have no fixed points") {
  CHECK(enumerated(1) == std::set<BetaTree>{BetaTree::node()});
  for (std::size_t n = 3; n <= 9; n += 2) {
    CHECK(brute_force_fixed(n).empty());
    bool visited = false;
    CHECK_FALSE(enumerate_fixed(n, [&](const BetaTree&) { visited = true; }));
    CHECK_FALSE(visited);
  }
}

TEST_CASE("count_fixed") {
  CHECK(count_fixed(1) == 1);
  CHECK(count_fixed(2) == 2);
  CHECK(count_fixed(3) == 7);
  CHECK(count_fixed(4) == 30);
  CHECK(count_fixed(7) == 3876);
  for (unsigned long long n = 1; n <= 12; ++n) CHECK(count_fixed(n) == closed_form(n));
  for (std::size_t n = 1; n <= 5; ++n) CHECK(count_fixed(n) == brute_force_fixed(2 * n).size());
  // C(3n-2, n-1) is always divisible by n; spot-check a large exact value.
  CHECK(count_fixed(20) == BigInt("47365474641870"));
}

TEST_CASE("binomial") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("fixed points by root label") {
  // Root-label census of fixed points on 2n nodes; the displayed prefix of
  // the fixed-point series.
  std::map<std::pair<std::size_t, long>, int> census;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& t : brute_force_fixed(2 * n)) ++census[{n, t.label}];
  }
  const std::map<std::pair<std::size_t, long>, int> expected{
      {{1, 1}, 1}, {{2, 2}, 2}, {{3, 2}, 3}, {{3, 3}, 4}, {{4, 2}, 9}, {{4, 3}, 13}, {{4, 4}, 8}};
  CHECK(census == expected);
}

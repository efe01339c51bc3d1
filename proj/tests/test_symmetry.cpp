#include <doctest.h>

#include <set>

#include "betamaps/symmetry.hpp"

using namespace betamaps;

namespace {

PlaneTree leaf() { return PlaneTree{}; }
PlaneTree node(std::vector<PlaneTree> c) { return PlaneTree{std::move(c)}; }

// (1/(2n+1)) C(3n, n) by the product formula in 64-bit arithmetic.
unsigned long long ternary_oracle(unsigned long long n) {
  unsigned long long c = 1;
  for (unsigned long long i = 1; i <= n; ++i) c = c * (2 * n + i) / i;
  return c / (2 * n + 1);
}

}  // namespace

TEST_CASE("reflect_plane_tree") {
  CHECK(reflect_plane_tree(leaf()) == leaf());
  const PlaneTree a = node({leaf()});
  const PlaneTree b = node({leaf(), node({leaf(), leaf(), leaf()})});
  const PlaneTree c = leaf();
  CHECK(reflect_plane_tree(node({a, b, c})) ==
        node({reflect_plane_tree(c), reflect_plane_tree(b), reflect_plane_tree(a)}));
  CHECK(reflect_plane_tree(reflect_plane_tree(node({a, b, c}))) == node({a, b, c}));
}

TEST_CASE("reflect_noncrossing") {
  const NonCrossingTree path{2, {{0, 1}}};
  CHECK(reflect_noncrossing(path) == path);
  for (int n = 2; n <= 7; ++n) {
    NonCrossingTree star{n, {}};
    for (int i = 1; i < n; ++i) star.edges.emplace_back(0, i);
    CHECK(star.is_valid());
    CHECK(reflect_noncrossing(star) == star);
  }
  const NonCrossingTree zig{4, {{0, 1}, {1, 2}, {2, 3}}};
  CHECK(reflect_noncrossing(zig) == NonCrossingTree{4, {{0, 3}, {1, 2}, {2, 3}}});
}

TEST_CASE("chords_cross") {
  CHECK(chords_cross({0, 2}, {1, 3}));
  CHECK_FALSE(chords_cross({0, 1}, {2, 3}));
  CHECK_FALSE(chords_cross({0, 3}, {1, 2}));
  CHECK_FALSE(chords_cross({0, 2}, {2, 3}));
  CHECK_FALSE(NonCrossingTree({4, {{0, 2}, {1, 3}, {0, 1}}}).is_valid());
  CHECK_FALSE(NonCrossingTree({4, {{0, 1}, {1, 2}}}).is_valid());
}

TEST_CASE("family sizes") {
  for (std::size_t n = 0; n <= 6; ++n) {
    std::size_t t = 0;
    std::size_t e = 0;
    std::size_t nc = 0;
    generate_ternary(n, [&](const PlaneTree& p) {
      CHECK(p.is_ternary());
      CHECK(p.internal_nodes() == n);
      ++t;
    });
    generate_even(2 * n, [&](const PlaneTree& p) {
      CHECK(p.is_even());
      CHECK(p.size() == 2 * n + 1);
      ++e;
    });
    generate_noncrossing(n, [&](const NonCrossingTree& p) {
      CHECK(p.is_valid());
      ++nc;
    });
    CHECK(t == ternary_oracle(n));
    CHECK(e == ternary_oracle(n));
    CHECK(nc == ternary_oracle(n));
    CHECK(ternary_count(n) == ternary_oracle(n));
  }
}

TEST_CASE("symmetric counts") {
  CHECK(count_symmetric(Family::kTernary, 1).symmetric == 1);
  CHECK(count_symmetric(Family::kTernary, 3).symmetric == 2);
  CHECK(count_symmetric(Family::kTernary, 5).symmetric == 7);
  CHECK(count_symmetric(Family::kTernary, 2).symmetric == 1);
  CHECK(count_symmetric(Family::kTernary, 4).symmetric == 3);

  for (std::size_t n = 1; n <= 6; ++n) {
    const auto t = count_symmetric(Family::kTernary, n);
    const auto e = count_symmetric(Family::kEven, n);
    const auto c = count_symmetric(Family::kNonCrossing, n);
    CHECK(t.total == ternary_oracle(n));
    CHECK(e.total == t.total);
    CHECK(c.total == t.total);
    CHECK(t.symmetric == expected_symmetric(n));
    CHECK(e.symmetric == t.symmetric);
    CHECK(c.symmetric == t.symmetric);
  }
}

TEST_CASE("parse_family") {
  CHECK(parse_family("ternary") == Family::kTernary);
  CHECK(parse_family("even") == Family::kEven);
  CHECK(parse_family("noncrossing") == Family::kNonCrossing);
  CHECK(parse_family("non-crossing") == Family::kNonCrossing);
  CHECK(family_name(Family::kNonCrossing) == "noncrossing");
  CHECK_THROWS_WITH_AS(parse_family("binary"), "unknown family: binary", std::invalid_argument);
}

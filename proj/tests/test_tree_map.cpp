#include <doctest.h>

#include <set>

#include "betamaps/fixed_points.hpp"
#include "betamaps/tree_map.hpp"

using namespace betamaps;

namespace {

BetaTree T(const char* s) { return from_text(s); }

}  // namespace

TEST_CASE("tree_to_map examples") {
  CHECK(isomorphic(tree_to_map(T("(1)")), RootedMap::single_edge()));

  const RootedMap d = tree_to_map(T("(1 (1))"));
  CHECK(d.edge_count() == 2);
  CHECK(d.vertices().size() == 2);
  CHECK(d.faces().size() == 2);
  CHECK(d.root_face_degree() == 2);
  CHECK(isomorphic(d, RootedMap::from_one_based({3, 4, 1, 2}, {2, 1, 4, 3}, 1)));
}

TEST_CASE("tree_to_map is injective into non-separable maps") {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 22, 91, 408};
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<CanonicalMapCode> codes;
    generate_all(n, [&](const BetaTree& t) {
      const RootedMap m = tree_to_map(t);
      REQUIRE_FALSE(validate_map(m));
      CHECK(m.edge_count() == n);
      CHECK(is_nonseparable(m));
      CHECK(m.root_face_degree() == static_cast<std::size_t>(t.label) + 1);
      codes.insert(canonical_code(m));
    });
    CHECK(codes.size() == expected[n - 1]);
  }
}

TEST_CASE("map_to_tree") {
  CHECK(map_to_tree(RootedMap::single_edge()) == T("(1)"));
  CHECK(map_to_tree(RootedMap::from_one_based({3, 4, 1, 2}, {2, 1, 4, 3}, 1)) == T("(1 (1))"));

  const MapPreimageIndex index(6);
  for (std::size_t n = 1; n <= 6; ++n) {
    generate_all(n, [&](const BetaTree& t) {
      CHECK(index.map_to_tree(tree_to_map(t)) == t);
    });
  }
  CHECK_THROWS_WITH_AS(index.map_to_tree(tree_to_map(all_trees(7).front())), "no preimage",
                       NoPreimageError);

  // Separable maps are outside the image.
  const RootedMap path = RootedMap::from_one_based({2, 1, 4, 3}, {1, 3, 2, 4}, 1);
  REQUIRE_FALSE(validate_map(path));
  CHECK_THROWS_AS(index.map_to_tree(path), NoPreimageError);
  const RootedMap loop = RootedMap::from_one_based({2, 1}, {2, 1}, 1);
  CHECK_THROWS_AS(map_to_tree(loop), NoPreimageError);
}

TEST_CASE("fixed points need not map to self-dual maps") {
  CHECK_FALSE(witness_noncorrespondence(3));
  CHECK_FALSE(witness_noncorrespondence(0));
  const auto w = witness_noncorrespondence(6);
  REQUIRE(w);
  CHECK(w->size() >= 4);
  CHECK(w->size() <= 6);
  CHECK(is_fixed(*w));
  CHECK_FALSE(is_self_dual(tree_to_map(*w)));
}

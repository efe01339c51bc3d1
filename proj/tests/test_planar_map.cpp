#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "betamaps/planar_map.hpp"
#include "betamaps/tree_map.hpp"

using namespace betamaps;

namespace {

// Darts 2i and 2i+1 form edge i; `rotations` lists the ccw cycles at each
// vertex.
RootedMap from_rotations(std::size_t edges, const std::vector<std::vector<int>>& rotations,
                         int root) {
  RootedMap m;
  m.alpha.resize(2 * edges);
  m.sigma.assign(2 * edges, -1);
  for (std::size_t i = 0; i < 2 * edges; i += 2) {
    m.alpha[i] = static_cast<int>(i) + 1;
    m.alpha[i + 1] = static_cast<int>(i);
  }
  for (const auto& c : rotations) {
    for (std::size_t i = 0; i < c.size(); ++i) m.sigma[c[i]] = c[(i + 1) % c.size()];
  }
  m.root = root;
  return m;
}

RootedMap digon() { return RootedMap::from_one_based({3, 4, 1, 2}, {2, 1, 4, 3}, 1); }

RootedMap two_triangles() {
  // Triangles c-a-b and c-d-e sharing the vertex c.
  return from_rotations(6, {{0, 5, 6, 11}, {1, 2}, {3, 4}, {7, 8}, {9, 10}}, 0);
}

RootedMap random_relabel(const RootedMap& m, std::mt19937& rng) {
  std::vector<int> perm(m.dart_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(m, perm);
}

}  // namespace

TEST_CASE("validate_map") {
  const RootedMap edge = RootedMap::single_edge();
  CHECK_FALSE(validate_map(edge));
  CHECK(edge.vertices().size() == 2);
  CHECK(edge.faces().size() == 1);
  CHECK(edge.alpha_one_based() == std::vector<int>{2, 1});
  CHECK(edge.sigma_one_based() == std::vector<int>{1, 2});

  const RootedMap d = digon();
  CHECK_FALSE(validate_map(d));
  CHECK(d.vertices().size() == 2);
  CHECK(d.faces().size() == 2);

  const RootedMap torus = RootedMap::from_one_based({3, 4, 1, 2}, {2, 3, 4, 1}, 1);
  const auto v = validate_map(torus);
  REQUIRE(v);
  CHECK(v->kind == MapViolation::Kind::kNonplanar);
  CHECK(v->message.rfind("nonplanar", 0) == 0);

  RootedMap bad = d;
  bad.alpha[0] = 0;
  CHECK(validate_map(bad)->kind == MapViolation::Kind::kAlpha);
  bad = d;
  bad.sigma[0] = bad.sigma[1];
  CHECK(validate_map(bad)->kind == MapViolation::Kind::kSigma);
  bad = d;
  bad.root = 4;
  CHECK(validate_map(bad)->kind == MapViolation::Kind::kRoot);
  bad = d;
  bad.sigma.pop_back();
  CHECK(validate_map(bad)->kind == MapViolation::Kind::kShape);

  // Two disjoint edges.
  const RootedMap split = from_rotations(2, {{0}, {1}, {2}, {3}}, 0);
  CHECK(validate_map(split)->kind == MapViolation::Kind::kDisconnected);
}

TEST_CASE("is_nonseparable") {
  CHECK(is_nonseparable(RootedMap::single_edge()));
  CHECK(is_nonseparable(digon()));
  const RootedMap loop = RootedMap::from_one_based({2, 1}, {2, 1}, 1);
  CHECK_FALSE(validate_map(loop));
  CHECK_FALSE(is_nonseparable(loop));

  const RootedMap tt = two_triangles();
  CHECK_FALSE(validate_map(tt));
  CHECK_FALSE(is_nonseparable(tt));

  const RootedMap triangle = from_rotations(3, {{0, 5}, {1, 2}, {3, 4}}, 0);
  CHECK_FALSE(validate_map(triangle));
  CHECK(is_nonseparable(triangle));

  // A path of two edges has a cut vertex.
  CHECK_FALSE(is_nonseparable(from_rotations(2, {{0}, {1, 2}, {3}}, 0)));
}

TEST_CASE("dual") {
  CHECK_THROWS_WITH_AS(dual(RootedMap::single_edge()), "degenerate dual", DegenerateDualError);
  const RootedMap d = digon();
  CHECK(isomorphic(dual(d), d));
  CHECK(is_self_dual(d));

  const RootedMap triangle = from_rotations(3, {{0, 5}, {1, 2}, {3, 4}}, 0);
  const RootedMap tri_dual = dual(triangle);
  CHECK_FALSE(validate_map(tri_dual));
  CHECK(tri_dual.vertices().size() == triangle.faces().size());
  CHECK(tri_dual.faces().size() == triangle.vertices().size());
  CHECK(isomorphic(dual(tri_dual), triangle));
  CHECK_FALSE(is_self_dual(triangle));

  for (std::size_t n = 2; n <= 6; ++n) {
    generate_all(n, [&](const BetaTree& t) {
      const RootedMap m = tree_to_map(t);
      const RootedMap md = dual(m);
      CHECK_FALSE(validate_map(md));
      CHECK(is_nonseparable(md));
      CHECK(isomorphic(dual(md), m));
      CHECK(md.root_face_degree() == m.root_vertex_degree());
      CHECK(md.root_vertex_degree() == m.root_face_degree());
      if (n % 2 == 1) CHECK_FALSE(is_self_dual(m));
    });
  }
}

TEST_CASE("canonical codes") {
  std::mt19937 rng(99);
  for (std::size_t n = 1; n <= 6; ++n) {
    generate_all(n, [&](const BetaTree& t) {
      const RootedMap m = tree_to_map(t);
      for (int i = 0; i < 3; ++i) {
        const RootedMap r = random_relabel(m, rng);
        CHECK_FALSE(validate_map(r));
        CHECK(canonical_code(r) == canonical_code(m));
      }
    });
  }

  // Rerooting a triangle is always an isomorphism; rerooting a map without
  // symmetry is not.
  const RootedMap triangle = from_rotations(3, {{0, 5}, {1, 2}, {3, 4}}, 0);
  for (int d = 0; d < 6; ++d) {
    RootedMap r = triangle;
    r.root = d;
    CHECK(isomorphic(triangle, r));
  }
  const RootedMap m = tree_to_map(from_text("(2 (1 (1)) (1 (1)))"));
  std::set<CanonicalMapCode> rerooted;
  for (int d = 0; d < static_cast<int>(m.dart_count()); ++d) {
    RootedMap r = m;
    r.root = d;
    rerooted.insert(canonical_code(r));
  }
  CHECK(rerooted.size() > 1);

  CHECK(canonical_code(RootedMap::single_edge()).to_string() == "2,1,0,0,1");
}

TEST_CASE("self-dual census") {
  const std::vector<std::size_t> expected{1, 2, 7, 30};
  for (std::size_t e = 2; e <= 8; e += 2) {
    std::size_t c = 0;
    generate_all(e, [&](const BetaTree& t) {
      if (is_self_dual(tree_to_map(t))) ++c;
    });
    CHECK(c == expected[e / 2 - 1]);
  }
}

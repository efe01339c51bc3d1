#include "betamaps/tree_map.hpp"

#include "betamaps/fixed_points.hpp"

namespace betamaps {

namespace {

// A map under construction with its two marked boundary vertices. `root`
// leaves R along the root face; `star` leaves * along the root face.
struct MarkedMap {
  RootedMap map;
  int star = 1;
};

int sigma_pred(const RootedMap& m, int d) {
  int p = d;
  while (m.sigma[p] != d) p = m.sigma[p];
  return p;
}

// Inserts the block of darts around `into_out` so that the rotation at the
// corner (pred(into_out), into_out) becomes pred -> first ... last -> into_out.
// Here the block is another vertex's rotation opened at its own corner.
void merge_corners(RootedMap& m, int out_a, int out_b) {
  const int in_a = sigma_pred(m, out_a);
  const int in_b = sigma_pred(m, out_b);
  m.sigma[in_a] = out_b;
  m.sigma[in_b] = out_a;
}

MarkedMap leaf_map() { return MarkedMap{RootedMap::single_edge(), 1}; }

MarkedMap build(const BetaTree& t) {
  if (t.is_leaf()) return leaf_map();

  // Disjoint union of the children's maps, darts renumbered consecutively.
  RootedMap m;
  std::vector<int> roots;
  std::vector<int> stars;
  for (const auto& child : t.children) {
    MarkedMap c = build(child);
    const int offset = static_cast<int>(m.dart_count());
    for (std::size_t d = 0; d < c.map.dart_count(); ++d) {
      m.alpha.push_back(c.map.alpha[d] + offset);
      m.sigma.push_back(c.map.sigma[d] + offset);
    }
    roots.push_back(c.map.root + offset);
    stars.push_back(c.star + offset);
  }

  // Glue * of child i onto R of child i+1 at their root-face corners.
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) merge_corners(m, stars[i], roots[i + 1]);

  // New root edge from the last * to the first R. The new root face runs
  // along the glued R -> * boundary paths.
  const int e_out = static_cast<int>(m.dart_count());
  const int e_in = e_out + 1;
  m.alpha.push_back(e_in);
  m.alpha.push_back(e_out);
  m.sigma.push_back(e_out);
  m.sigma.push_back(e_in);
  merge_corners(m, stars.back(), e_out);
  merge_corners(m, roots.front(), e_in);
  m.root = e_out;

  int star = m.root;
  for (long i = 0; i < t.label; ++i) star = m.phi(star);
  return MarkedMap{std::move(m), star};
}

}  // namespace

RootedMap tree_to_map(const BetaTree& t) { return build(t).map; }

MapPreimageIndex::MapPreimageIndex(std::size_t max_edges) : max_edges_(max_edges) {
  for (std::size_t n = 1; n <= max_edges; ++n) {
    generate_all(n, [&](const BetaTree& t) { table_.emplace(canonical_code(tree_to_map(t)), t); });
  }
}

BetaTree MapPreimageIndex::map_to_tree(const RootedMap& m) const {
  if (m.edge_count() > max_edges_) throw NoPreimageError();
  auto it = table_.find(canonical_code(m));
  if (it == table_.end()) throw NoPreimageError();
  return it->second;
}

BetaTree map_to_tree(const RootedMap& m) {
  return MapPreimageIndex(m.edge_count()).map_to_tree(m);
}

std::optional<BetaTree> witness_noncorrespondence(std::size_t max_nodes) {
  std::optional<BetaTree> witness;
  for (std::size_t n = 4; n <= max_nodes && !witness; n += 2) {
    enumerate_fixed(n, [&](const BetaTree& t) {
      if (!witness && !is_self_dual(tree_to_map(t))) witness = t;
    });
  }
  return witness;
}

}  // namespace betamaps

#ifndef BETAMAPS_TREE_MAP_HPP_
#define BETAMAPS_TREE_MAP_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>

#include "betamaps/planar_map.hpp"
#include "betamaps/tree.hpp"

namespace betamaps {

/// The standard bijection from beta(1,0)-trees on n nodes to rooted
/// non-separable planar maps with n edges.
///
/// Leaves become a single edge R -> *. An internal node glues its children's
/// maps left to right (* of one onto R of the next), adds a new root edge
/// from the last * to the first R, and marks as * the vertex `label` steps
/// along the new root face from the new root vertex. The root face of the
/// final map has degree root(t) + 1.
RootedMap tree_to_map(const BetaTree& t);

class NoPreimageError : public std::runtime_error {
 public:
  NoPreimageError() : std::runtime_error("no preimage") {}
};

/// Inverse of tree_to_map by lookup. The table for each edge count is built
/// on first use from all trees of that size and is read-only afterwards.
class MapPreimageIndex {
 public:
  explicit MapPreimageIndex(std::size_t max_edges);

  std::size_t max_edges() const { return max_edges_; }
  /// Throws NoPreimageError when the map is not an image, or when its edge
  /// count exceeds the index budget.
  BetaTree map_to_tree(const RootedMap& m) const;
  std::size_t size() const { return table_.size(); }

 private:
  std::size_t max_edges_;
  std::map<CanonicalMapCode, BetaTree> table_;
};

BetaTree map_to_tree(const RootedMap& m);

/// First fixed point of h (4 to max_nodes nodes) whose image is not
/// self-dual, or nullopt when none exists in that range.
std::optional<BetaTree> witness_noncorrespondence(std::size_t max_nodes);

}  // namespace betamaps

#endif  // BETAMAPS_TREE_MAP_HPP_

#ifndef BETAMAPS_SYMMETRY_HPP_
#define BETAMAPS_SYMMETRY_HPP_

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "betamaps/fixed_points.hpp"

namespace betamaps {

/// Unlabelled rooted plane tree.
struct PlaneTree {
  std::vector<PlaneTree> children;

  std::size_t size() const;
  std::size_t internal_nodes() const;
  bool is_ternary() const;
  bool is_even() const;

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
};

/// Reverses the children at every node.
PlaneTree reflect_plane_tree(const PlaneTree& t);

/// Spanning tree on polygon vertices 0..vertex_count-1 (root 0) with no
/// crossing chords. Edges are stored as (low, high) pairs in sorted order.
struct NonCrossingTree {
  int vertex_count = 1;
  std::vector<std::pair<int, int>> edges;

  bool is_valid() const;
  friend bool operator==(const NonCrossingTree&, const NonCrossingTree&) = default;
};

bool chords_cross(std::pair<int, int> a, std::pair<int, int> b);

/// Reflection in the polygon bisector through the root: i -> (-i) mod count.
NonCrossingTree reflect_noncrossing(const NonCrossingTree& t);

void generate_ternary(std::size_t internal_nodes, const std::function<void(const PlaneTree&)>& visit);
void generate_even(std::size_t edges, const std::function<void(const PlaneTree&)>& visit);
void generate_noncrossing(std::size_t edges,
                          const std::function<void(const NonCrossingTree&)>& visit);

enum class Family { kTernary, kEven, kNonCrossing };

/// Accepts "ternary", "even", "noncrossing" (also "non-crossing").
Family parse_family(std::string_view name);
std::string family_name(Family f);

struct SymmetryCount {
  BigInt total;
  BigInt symmetric;
};

/// Size n means internal nodes (ternary), 2n edges (even) or n edges
/// (non-crossing).
SymmetryCount count_symmetric(Family family, std::size_t n);

/// 1/(2n+1) C(3n, n).
BigInt ternary_count(std::size_t n);
/// a_{(n+1)/2} for odd n, 1/(n+1) C(3n/2, n/2) for even n.
BigInt expected_symmetric(std::size_t n);

}  // namespace betamaps

#endif  // BETAMAPS_SYMMETRY_HPP_

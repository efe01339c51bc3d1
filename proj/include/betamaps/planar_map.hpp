#ifndef BETAMAPS_PLANAR_MAP_HPP_
#define BETAMAPS_PLANAR_MAP_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace betamaps {

/// A rooted map as a rotation system on darts 0..2m-1.
///
/// alpha pairs the two darts of each edge; sigma sends a dart to the next
/// dart counterclockwise around its vertex. Vertices are sigma-orbits and
/// faces are orbits of phi = sigma o alpha; the phi-orbit of a dart is the
/// face on its right. The root dart points away from the root vertex and
/// has the root face on its right.
///
/// The external file format numbers darts from 1; see from_one_based().
struct RootedMap {
  std::vector<int> alpha;
  std::vector<int> sigma;
  int root = 0;

  std::size_t dart_count() const { return alpha.size(); }
  std::size_t edge_count() const { return alpha.size() / 2; }

  int phi(int d) const { return sigma[alpha[d]]; }

  std::vector<std::vector<int>> vertices() const;
  std::vector<std::vector<int>> faces() const;
  /// Vertex index of each dart (tail), indexing into vertices().
  std::vector<int> vertex_of() const;

  std::size_t root_face_degree() const;
  std::size_t root_vertex_degree() const;

  static RootedMap from_one_based(const std::vector<int>& alpha, const std::vector<int>& sigma,
                                  int root);
  std::vector<int> alpha_one_based() const;
  std::vector<int> sigma_one_based() const;

  /// Single edge: darts 0 -> 1, both vertices of degree 1.
  static RootedMap single_edge();

  friend bool operator==(const RootedMap&, const RootedMap&) = default;
};

struct MapViolation {
  enum class Kind { kShape, kAlpha, kSigma, kRoot, kDisconnected, kNonplanar };
  Kind kind;
  std::string message;
};

std::optional<MapViolation> validate_map(const RootedMap& m);

/// Loopless and free of cut vertices.
bool is_nonseparable(const RootedMap& m);

class DegenerateDualError : public std::invalid_argument {
 public:
  DegenerateDualError() : std::invalid_argument("degenerate dual") {}
};

/// Dual map on the same darts. The dual rotation at a face is phi^-1 (phi
/// runs clockwise around the face it bounds). The dual root leaves the
/// vertex of the old root face: it is the dual edge following the one that
/// crosses the old root edge, counterclockwise. Requires >= 2 edges.
RootedMap dual(const RootedMap& m);

/// Root-anchored breadth-first relabelling; equal codes iff the rooted maps
/// are isomorphic.
struct CanonicalMapCode {
  std::vector<int> values;

  std::string to_string() const;
  friend bool operator==(const CanonicalMapCode&, const CanonicalMapCode&) = default;
  friend auto operator<=>(const CanonicalMapCode&, const CanonicalMapCode&) = default;
};

CanonicalMapCode canonical_code(const RootedMap& m);

bool isomorphic(const RootedMap& a, const RootedMap& b);

/// Requires >= 2 edges.
bool is_self_dual(const RootedMap& m);

/// Renames dart d to perm[d]. The result is isomorphic to m.
RootedMap relabel(const RootedMap& m, const std::vector<int>& perm);

}  // namespace betamaps

#endif  // BETAMAPS_PLANAR_MAP_HPP_

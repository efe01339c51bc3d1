#ifndef BETAMAPS_INVOLUTION_HPP_
#define BETAMAPS_INVOLUTION_HPP_

#include <optional>
#include <vector>

#include "betamaps/tree.hpp"

namespace betamaps {

/// The involution h on beta(1,0)-trees.
///
/// The single node and the single edge are fixed. An indecomposable tree
/// with root label r is sent to h(A) with a new rightmost leaf hung at depth
/// r on the rightmost path, every ancestor of that leaf gaining 1; here A is
/// the root's only subtree with its root relabelled. A decomposable tree
/// split into (A, B) is sent to h(B) with h(A) glued onto its rightmost leaf.
///
/// h exchanges root <-> rpath and sub <-> rsub, and h(h(t)) == t.
BetaTree h(const BetaTree& t);

/// root(t) = rpath(h t), root(h t) = rpath(t), sub(t) = rsub(h t) and
/// sub(h t) = rsub(t). Requires at least two nodes.
bool check_theorem1(const BetaTree& t);

/// Checks the stacking property behind the involution proof: for
/// T = C_1 o C_2 o ... o C_k o S (o is right-path gluing, C_i
/// right-indecomposable, S optional), h(T) is the root-join of
/// h(S), h(C_k), ..., h(C_1). In particular the rightmost root subtree of
/// h(T) is the image of the topmost component.
///
/// Throws std::invalid_argument when the pieces do not assemble into a tree
/// with that right-decomposition prefix.
bool check_figure5_property(const std::vector<BetaTree>& components,
                            const std::optional<BetaTree>& trailing = std::nullopt);

}  // namespace betamaps

#endif  // BETAMAPS_INVOLUTION_HPP_

#ifndef BETAMAPS_FIXED_POINTS_HPP_
#define BETAMAPS_FIXED_POINTS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "betamaps/tree.hpp"

namespace betamaps {

using BigInt = boost::multiprecision::cpp_int;

/// Shapes of the fixed points of h.
struct F0 {
  friend bool operator==(const F0&, const F0&) = default;
};
struct F1 {
  BetaTree a;
  friend bool operator==(const F1&, const F1&) = default;
};
struct F2 {
  BetaTree a1;
  BetaTree a2;  // fixed by h, at least two nodes, root(a2) >= b - 1
  long b = 2;
  friend bool operator==(const F2&, const F2&) = default;
};

using FixedPointStructure = std::variant<F0, F1, F2>;

std::string describe(const FixedPointStructure& s);

class NotFixedPointError : public std::invalid_argument {
 public:
  NotFixedPointError() : std::invalid_argument("not a fixed point") {}
};

bool is_fixed(const BetaTree& t);

/// F1: hang h(a), root relabelled 1, as a new rightmost subtree of a's root.
BetaTree build_f1(const BetaTree& a);

/// F2: graft h(a1) under position b-1 of a2's rightmost path (root is
/// position 1), bump the path labels at positions 2..b-1, set the graft's
/// root to 1 and a2's root to b, then hang the result to the right of a1's
/// root. Throws std::invalid_argument naming the violated precondition.
BetaTree build_f2(const BetaTree& a1, const BetaTree& a2, long b);

BetaTree build(const FixedPointStructure& s);

/// Recovers the structure data of a fixed point; throws NotFixedPointError
/// if t is not fixed. The result always rebuilds to t.
FixedPointStructure classify(const BetaTree& t);

/// Streams every fixed point on n nodes, generated from F1/F2 data rather
/// than by filtering. Returns false (and visits nothing) for odd n > 1.
bool enumerate_fixed(std::size_t n, const TreeVisitor& visit);

/// (1/n) * C(3n-2, n-1): the number of fixed points on 2n nodes.
BigInt count_fixed(std::size_t n);

BigInt binomial(std::size_t n, std::size_t k);

}  // namespace betamaps

#endif  // BETAMAPS_FIXED_POINTS_HPP_

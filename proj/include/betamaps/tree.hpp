#ifndef BETAMAPS_TREE_HPP_
#define BETAMAPS_TREE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace betamaps {

/// A rooted plane tree with integer labels. Valid beta(1,0)-trees satisfy the
/// rules checked by validate(): leaves carry 1, the root carries the sum of
/// its children's labels, and every other node lies between 1 and that sum.
///
/// Trees are plain values. Every operation in this library returns a fresh
/// tree and leaves its arguments untouched.
struct BetaTree {
  long label = 1;
  std::vector<BetaTree> children;

  BetaTree() = default;
  explicit BetaTree(long l, std::vector<BetaTree> c = {})
      : label(l), children(std::move(c)) {}

  static BetaTree node() { return BetaTree{1}; }
  static BetaTree edge() { return BetaTree{1, {BetaTree{1}}}; }

  bool is_leaf() const { return children.empty(); }
  std::size_t size() const;
  long child_label_sum() const;

  friend bool operator==(const BetaTree&, const BetaTree&) = default;
  friend auto operator<=>(const BetaTree& a, const BetaTree& b) {
    if (auto c = a.label <=> b.label; c != 0) return c;
    return a.children <=> b.children;
  }
};

struct TreeStats {
  long root_label = 0;
  std::size_t sub = 0;
  std::size_t rpath = 0;
  std::size_t rsub = 0;

  friend bool operator==(const TreeStats&, const TreeStats&) = default;
};

/// First rule violation found in depth-first (preorder) order. `path` lists
/// child indices from the root; empty means the root itself.
struct Violation {
  std::vector<std::size_t> path;
  std::string message;

  std::string describe() const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Raised by operations that need a tree on at least two nodes.
class AtomicTreeError : public std::invalid_argument {
 public:
  AtomicTreeError() : std::invalid_argument("atomic") {}
};

std::optional<Violation> validate(const BetaTree& t);
bool is_valid(const BetaTree& t);

TreeStats stats(const BetaTree& t);

// ---------------------------------------------------------------------------
// Decompositions.

/// sub(t) = 1: the child subtree with its root relabelled to the sum of its
/// children (1 for a leaf), plus the label the child had inside t.
struct Indecomposable {
  BetaTree a;
  long child_label = 1;
};

/// sub(t) > 1: `a` keeps all root subtrees but the rightmost, `b` keeps only
/// the rightmost one. Both roots are relabelled by the root-sum rule.
struct Decomposable {
  BetaTree a;
  BetaTree b;
};

using Decomposition = std::variant<Indecomposable, Decomposable>;

Decomposition decompose(const BetaTree& t);
BetaTree recompose(const Decomposition& d);

/// Root-joins `a` and `b`: the root's children are a's followed by b's.
BetaTree join(const BetaTree& a, const BetaTree& b);

/// Identifies the rightmost leaf of `upper` with the root of `lower`. The
/// glued node keeps label 1.
BetaTree glue_right(const BetaTree& upper, const BetaTree& lower);

/// Splits t at every label-1 node strictly below the root on the rightmost
/// path. Returns rsub(t) right-indecomposable components, topmost first;
/// folding them with glue_right reproduces t.
std::vector<BetaTree> right_decompose(const BetaTree& t);
BetaTree right_compose(const std::vector<BetaTree>& components);

// ---------------------------------------------------------------------------
// Rightmost-path helpers shared by the involution and fixed-point code.

/// Nodes on the rightmost path, root first.
std::vector<const BetaTree*> rightmost_path(const BetaTree& t);
std::vector<BetaTree*> rightmost_path(BetaTree& t);

/// Relabels the root by the root-sum rule (1 for a single node).
BetaTree with_root_sum(BetaTree t);

// ---------------------------------------------------------------------------
// Text form: tree ::= "(" INT { tree } ")"

std::string to_text(const BetaTree& t);
BetaTree from_text(std::string_view s);

// ---------------------------------------------------------------------------
// Exhaustive generation.

using TreeVisitor = std::function<void(const BetaTree&)>;

/// Calls `visit` once for every valid tree with n nodes. Order is
/// deterministic: the first root subtree grows from small to large, and
/// labels ascend within each shape.
void generate_all(std::size_t n, const TreeVisitor& visit);
std::vector<BetaTree> all_trees(std::size_t n);

/// Trees on n nodes whose non-root labels are all 1 (one per plane tree, so
/// Catalan(n-1) of them).
void generate_unit_labelled(std::size_t n, const TreeVisitor& visit);
std::size_t count_trees(std::size_t n);

}  // namespace betamaps

#endif  // BETAMAPS_TREE_HPP_

#include "betamaps/involution.hpp"

#include <stdexcept>
#include <utility>

namespace betamaps {

namespace {

bool is_edge(const BetaTree& t) {
  return t.children.size() == 1 && t.children.front().is_leaf();
}

// Same recursion as decompose/glue_right, but consumes its argument so no
// subtree is copied.
BetaTree h_owned(BetaTree t) {
  if (t.is_leaf() || is_edge(t)) return t;
  if (t.children.size() == 1) {
    BetaTree child = std::move(t.children.front());
    const long child_label = child.label;
    BetaTree image = h_owned(with_root_sum(std::move(child)));
    // rpath(h(A)) = root(A) >= child_label, so depth child_label - 1 exists.
    auto path = rightmost_path(image);
    const auto depth = static_cast<std::size_t>(child_label - 1);
    if (depth >= path.size()) throw std::logic_error("h: rightmost path too short");
    path[depth]->children.push_back(BetaTree::node());
    for (std::size_t i = 0; i <= depth; ++i) path[i]->label += 1;
    return image;
  }
  BetaTree b{0, {}};
  b.children.push_back(std::move(t.children.back()));
  t.children.pop_back();
  BetaTree upper = h_owned(with_root_sum(std::move(b)));
  BetaTree lower = h_owned(with_root_sum(std::move(t)));
  BetaTree* leaf = rightmost_path(upper).back();
  leaf->children = std::move(lower.children);
  leaf->label = 1;
  return upper;
}

}  // namespace

BetaTree h(const BetaTree& t) { return h_owned(t); }

bool check_theorem1(const BetaTree& t) {
  if (t.is_leaf()) throw AtomicTreeError();
  const TreeStats st = stats(t);
  const TreeStats si = stats(h(t));
  return st.root_label == static_cast<long>(si.rpath) &&
         si.root_label == static_cast<long>(st.rpath) && st.sub == si.rsub &&
         si.sub == st.rsub;
}

bool check_figure5_property(const std::vector<BetaTree>& components,
                            const std::optional<BetaTree>& trailing) {
  if (components.empty()) throw std::invalid_argument("stacking: no components");
  for (const auto& c : components) {
    if (!is_valid(c)) throw std::invalid_argument("stacking: invalid component " + to_text(c));
    if (c.is_leaf() || stats(c).rsub != 1) {
      throw std::invalid_argument("stacking: component is not right-indecomposable: " +
                                  to_text(c));
    }
  }
  std::vector<BetaTree> pieces = components;
  const bool has_tail = trailing.has_value() && !trailing->is_leaf();
  if (has_tail) {
    if (!is_valid(*trailing)) {
      throw std::invalid_argument("stacking: invalid trailing tree " + to_text(*trailing));
    }
    pieces.push_back(*trailing);
  }
  const BetaTree whole = right_compose(pieces);
  if (!is_valid(whole)) throw std::invalid_argument("stacking: assembly is not a valid tree");

  // Stack the images: h(S) first (leftmost), then h(C_k), ..., h(C_1).
  BetaTree expected = has_tail ? h(*trailing) : BetaTree::node();
  for (auto it = components.rbegin(); it != components.rend(); ++it) {
    expected = join(expected, h(*it));
  }
  return h(whole) == expected;
}

}  // namespace betamaps

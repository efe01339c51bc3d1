#include "betamaps/fixed_points.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include "betamaps/involution.hpp"

namespace betamaps {

std::string describe(const FixedPointStructure& s) {
  std::ostringstream os;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, F0>) {
          os << "F0";
        } else if constexpr (std::is_same_v<T, F1>) {
          os << "F1\t" << to_text(v.a);
        } else {
          os << "F2\t" << to_text(v.a1) << '\t' << to_text(v.a2) << '\t' << v.b;
        }
      },
      s);
  return os.str();
}

bool is_fixed(const BetaTree& t) { return h(t) == t; }

namespace {

// Root of `left` with `right` hung as its new rightmost subtree.
BetaTree hang_right(const BetaTree& left, BetaTree right) {
  BetaTree r{0, left.children};
  r.children.push_back(std::move(right));
  return with_root_sum(std::move(r));
}

BetaTree build_f2_with_image(const BetaTree& a1, const BetaTree& image_a1,
                             const BetaTree& a2, long b) {
  BetaTree a2p = a2;
  auto path = rightmost_path(a2p);
  const auto parent = static_cast<std::size_t>(b - 2);  // position b-1
  path[parent]->children.push_back(image_a1);
  for (std::size_t i = 1; i <= parent; ++i) path[i]->label += 1;
  path[parent]->children.back().label = 1;
  a2p.label = b;
  return hang_right(a1, std::move(a2p));
}

}  // namespace

BetaTree build_f1(const BetaTree& a) {
  BetaTree image = h(a);
  image.label = 1;
  return hang_right(a, std::move(image));
}

BetaTree build_f2(const BetaTree& a1, const BetaTree& a2, long b) {
  if (b < 2) throw std::invalid_argument("build_f2: b must be at least 2");
  if (a2.is_leaf()) throw std::invalid_argument("build_f2: a2 must have at least two nodes");
  if (a2.label < b - 1) throw std::invalid_argument("build_f2: root(a2) must be at least b-1");
  if (!is_fixed(a2)) throw std::invalid_argument("build_f2: a2 must be a fixed point of h");
  return build_f2_with_image(a1, h(a1), a2, b);
}

BetaTree build(const FixedPointStructure& s) {
  if (std::holds_alternative<F0>(s)) return BetaTree::node();
  if (const auto* f1 = std::get_if<F1>(&s)) return build_f1(f1->a);
  const auto& f2 = std::get<F2>(s);
  return build_f2(f2.a1, f2.a2, f2.b);
}

FixedPointStructure classify(const BetaTree& t) {
  if (!is_fixed(t)) throw NotFixedPointError();
  if (t.is_leaf()) return F0{};

  const BetaTree& right = t.children.back();
  const BetaTree left =
      with_root_sum(BetaTree{0, std::vector<BetaTree>(t.children.begin(), t.children.end() - 1)});

  FixedPointStructure s;
  if (right.label == 1) {
    s = F1{left};
  } else {
    const long b = right.label;
    BetaTree a2 = right;
    auto path = rightmost_path(a2);
    const auto parent = static_cast<std::size_t>(b - 2);
    if (path.size() < static_cast<std::size_t>(b)) {
      throw std::logic_error("classify: rightmost path shorter than b in " + to_text(t));
    }
    path[parent]->children.pop_back();
    for (std::size_t i = 1; i <= parent; ++i) path[i]->label -= 1;
    s = F2{left, with_root_sum(std::move(a2)), b};
  }
  if (build(s) != t) {
    throw std::logic_error("classify: structure " + describe(s) + " does not rebuild " +
                           to_text(t));
  }
  return s;
}

namespace {

struct TreeWithImage {
  BetaTree tree;
  BetaTree image;
};

void enumerate_fixed_even(std::size_t n, const TreeVisitor& visit) {
  if (n == 2) {
    visit(BetaTree::edge());
    return;
  }
  // F1: any tree on n/2 nodes.
  generate_all(n / 2, [&](const BetaTree& a) { visit(build_f1(a)); });

  // F2: a1 on s nodes, a2 a fixed point on n - 2s >= 2 nodes.
  for (std::size_t s = 1; 2 * s + 2 <= n; ++s) {
    std::vector<TreeWithImage> firsts;
    generate_all(s, [&](const BetaTree& a1) { firsts.push_back({a1, h(a1)}); });
    enumerate_fixed_even(n - 2 * s, [&](const BetaTree& a2) {
      for (long b = 2; b <= a2.label + 1; ++b) {
        for (const auto& a1 : firsts) visit(build_f2_with_image(a1.tree, a1.image, a2, b));
      }
    });
  }
}

}  // namespace

bool enumerate_fixed(std::size_t n, const TreeVisitor& visit) {
  if (n == 0) return false;
  if (n == 1) {
    visit(BetaTree::node());
    return true;
  }
  if (n % 2 != 0) return false;
  enumerate_fixed_even(n, visit);
  return true;
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt count_fixed(std::size_t n) {
  if (n == 0) return 0;
  return binomial(3 * n - 2, n - 1) / n;
}

}  // namespace betamaps

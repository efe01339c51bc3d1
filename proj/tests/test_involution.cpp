#include <doctest.h>

#include "betamaps/involution.hpp"

using namespace betamaps;

namespace {

BetaTree T(const char* s) { return from_text(s); }

}  // namespace

TEST_CASE("h on small trees") {
  CHECK(h(T("(1)")) == T("(1)"));
  CHECK(h(T("(1 (1))")) == T("(1 (1))"));
  CHECK(h(T("(1 (1 (1)))")) == T("(2 (1) (1))"));
  CHECK(h(T("(2 (1) (1))")) == T("(1 (1 (1)))"));
  CHECK(h(T("(2 (2 (1) (1)))")) == T("(2 (2 (1) (1)))"));
}

TEST_CASE("h is a size-preserving involution up to 9 nodes") {
  for (std::size_t n = 1; n <= 9; ++n) {
    generate_all(n, [&](const BetaTree& t) {
      const BetaTree image = h(t);
      REQUIRE(is_valid(image));
      CHECK(image.size() == n);
      CHECK(h(image) == t);
    });
  }
}

TEST_CASE("h does not modify its argument") {
  const BetaTree t = T("(3 (1 (1)) (2 (1) (1)))");
  const BetaTree copy = t;
  (void)h(t);
  CHECK(t == copy);
}

TEST_CASE("statistic swap") {
  CHECK(check_theorem1(T("(1 (1))")));
  CHECK(check_theorem1(T("(1 (1 (1)))")));
  CHECK(stats(T("(1 (1 (1)))")) == TreeStats{1, 1, 2, 2});
  CHECK(stats(h(T("(1 (1 (1)))"))) == TreeStats{2, 2, 1, 1});
  CHECK_THROWS_AS(check_theorem1(T("(1)")), AtomicTreeError);
  for (std::size_t n = 2; n <= 9; ++n) {
    generate_all(n, [&](const BetaTree& t) { CHECK(check_theorem1(t)); });
  }
}

TEST_CASE("stacking property") {
  CHECK(check_figure5_property({T("(1 (1))")}));
  CHECK(check_figure5_property({T("(1 (1))"), T("(1 (1))")}));
  CHECK(check_figure5_property({T("(1 (1))")}, T("(2 (1) (1))")));
  // A one-node tail is the same as no tail.
  CHECK(check_figure5_property({T("(2 (1) (1))")}, BetaTree::node()));

  CHECK_THROWS_AS(check_figure5_property({}), std::invalid_argument);
  // Not right-indecomposable.
  CHECK_THROWS_AS(check_figure5_property({T("(1 (1 (1)))")}), std::invalid_argument);
  CHECK_THROWS_AS(check_figure5_property({T("(3 (1) (1))")}), std::invalid_argument);
  CHECK_THROWS_AS(check_figure5_property({BetaTree::node()}), std::invalid_argument);

  // Every component sequence drawn from small right-indecomposable trees.
  std::vector<BetaTree> pieces;
  for (std::size_t n = 2; n <= 4; ++n) {
    generate_all(n, [&](const BetaTree& t) {
      if (stats(t).rsub == 1) pieces.push_back(t);
    });
  }
  for (const auto& a : pieces) {
    for (const auto& b : pieces) {
      CHECK(check_figure5_property({a, b}));
      CHECK(check_figure5_property({a}, b));
      for (const auto& c : pieces) CHECK(check_figure5_property({a, b}, c));
    }
  }
}

#include "betamaps/symmetry.hpp"

#include <algorithm>
#include <numeric>

namespace betamaps {

std::size_t PlaneTree::size() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.size();
  return n;
}

std::size_t PlaneTree::internal_nodes() const {
  if (children.empty()) return 0;
  std::size_t n = 1;
  for (const auto& c : children) n += c.internal_nodes();
  return n;
}

bool PlaneTree::is_ternary() const {
  if (!children.empty() && children.size() != 3) return false;
  return std::all_of(children.begin(), children.end(),
                     [](const PlaneTree& c) { return c.is_ternary(); });
}

bool PlaneTree::is_even() const {
  if (children.size() % 2 != 0) return false;
  return std::all_of(children.begin(), children.end(),
                     [](const PlaneTree& c) { return c.is_even(); });
}

PlaneTree reflect_plane_tree(const PlaneTree& t) {
  PlaneTree r;
  r.children.reserve(t.children.size());
  for (auto it = t.children.rbegin(); it != t.children.rend(); ++it) {
    r.children.push_back(reflect_plane_tree(*it));
  }
  return r;
}

bool chords_cross(std::pair<int, int> a, std::pair<int, int> b) {
  auto [p, q] = a;
  auto [r, s] = b;
  if (p > q) std::swap(p, q);
  if (r > s) std::swap(r, s);
  return (p < r && r < q && q < s) || (r < p && p < s && s < q);
}

bool NonCrossingTree::is_valid() const {
  if (vertex_count < 1 || edges.size() != static_cast<std::size_t>(vertex_count - 1)) return false;
  std::vector<int> comp(vertex_count);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count || a == b) return false;
    const int ra = find(a);
    const int rb = find(b);
    if (ra == rb) return false;
    comp[ra] = rb;
    for (std::size_t j = 0; j < i; ++j) {
      if (chords_cross(edges[i], edges[j])) return false;
    }
  }
  return true;
}

NonCrossingTree reflect_noncrossing(const NonCrossingTree& t) {
  NonCrossingTree r{t.vertex_count, {}};
  const int n = t.vertex_count;
  for (auto [a, b] : t.edges) {
    int ra = (n - a) % n;
    int rb = (n - b) % n;
    if (ra > rb) std::swap(ra, rb);
    r.edges.emplace_back(ra, rb);
  }
  std::sort(r.edges.begin(), r.edges.end());
  return r;
}

// ---------------------------------------------------------------------------

void generate_ternary(std::size_t internal_nodes,
                      const std::function<void(const PlaneTree&)>& visit) {
  if (internal_nodes == 0) {
    visit(PlaneTree{});
    return;
  }
  const std::size_t rest = internal_nodes - 1;
  for (std::size_t i = 0; i <= rest; ++i) {
    for (std::size_t j = 0; i + j <= rest; ++j) {
      const std::size_t k = rest - i - j;
      generate_ternary(i, [&](const PlaneTree& a) {
        generate_ternary(j, [&](const PlaneTree& b) {
          generate_ternary(k, [&](const PlaneTree& c) { visit(PlaneTree{{a, b, c}}); });
        });
      });
    }
  }
}

namespace {

void even_subtrees(std::size_t nodes, const std::function<void(const PlaneTree&)>& visit);

void even_forests(std::size_t nodes, std::vector<PlaneTree>& prefix,
                  const std::function<void(const std::vector<PlaneTree>&)>& visit) {
  if (nodes == 0) {
    if (prefix.size() % 2 == 0) visit(prefix);
    return;
  }
  for (std::size_t first = 1; first <= nodes; ++first) {
    even_subtrees(first, [&](const PlaneTree& t) {
      prefix.push_back(t);
      even_forests(nodes - first, prefix, visit);
      prefix.pop_back();
    });
  }
}

void even_subtrees(std::size_t nodes, const std::function<void(const PlaneTree&)>& visit) {
  std::vector<PlaneTree> prefix;
  even_forests(nodes - 1, prefix,
               [&](const std::vector<PlaneTree>& forest) { visit(PlaneTree{forest}); });
}

struct NonCrossingSearch {
  int vertices;
  std::size_t need;
  std::vector<std::pair<int, int>> candidates;
  std::vector<std::pair<int, int>> chosen;
  const std::function<void(const NonCrossingTree&)>& visit;

  void run(std::size_t next, std::vector<int> comp) {
    if (chosen.size() == need) {
      visit(NonCrossingTree{vertices, chosen});
      return;
    }
    if (candidates.size() - next < need - chosen.size()) return;
    const auto e = candidates[next];
    // Exclude e.
    run(next + 1, comp);
    // Include e if it closes no cycle and crosses nothing chosen.
    const int ca = comp[e.first];
    const int cb = comp[e.second];
    if (ca == cb) return;
    for (const auto& c : chosen) {
      if (chords_cross(c, e)) return;
    }
    for (int& c : comp) {
      if (c == cb) c = ca;
    }
    chosen.push_back(e);
    run(next + 1, std::move(comp));
    chosen.pop_back();
  }
};

}  // namespace

void generate_even(std::size_t edges, const std::function<void(const PlaneTree&)>& visit) {
  even_subtrees(edges + 1, visit);
}

void generate_noncrossing(std::size_t edges,
                          const std::function<void(const NonCrossingTree&)>& visit) {
  const int vertices = static_cast<int>(edges) + 1;
  NonCrossingSearch search{vertices, edges, {}, {}, visit};
  for (int a = 0; a < vertices; ++a) {
    for (int b = a + 1; b < vertices; ++b) search.candidates.emplace_back(a, b);
  }
  std::vector<int> comp(vertices);
  std::iota(comp.begin(), comp.end(), 0);
  search.run(0, std::move(comp));
}

Family parse_family(std::string_view name) {
  if (name == "ternary") return Family::kTernary;
  if (name == "even") return Family::kEven;
  if (name == "noncrossing" || name == "non-crossing") return Family::kNonCrossing;
  throw std::invalid_argument("unknown family: " + std::string(name));
}

std::string family_name(Family f) {
  switch (f) {
    case Family::kTernary:
      return "ternary";
    case Family::kEven:
      return "even";
    case Family::kNonCrossing:
      return "noncrossing";
  }
  return "?";
}

SymmetryCount count_symmetric(Family family, std::size_t n) {
  SymmetryCount c{0, 0};
  switch (family) {
    case Family::kTernary:
      generate_ternary(n, [&](const PlaneTree& t) {
        c.total += 1;
        if (reflect_plane_tree(t) == t) c.symmetric += 1;
      });
      break;
    case Family::kEven:
      generate_even(2 * n, [&](const PlaneTree& t) {
        c.total += 1;
        if (reflect_plane_tree(t) == t) c.symmetric += 1;
      });
      break;
    case Family::kNonCrossing:
      generate_noncrossing(n, [&](const NonCrossingTree& t) {
        c.total += 1;
        if (reflect_noncrossing(t) == t) c.symmetric += 1;
      });
      break;
  }
  return c;
}

BigInt ternary_count(std::size_t n) { return binomial(3 * n, n) / (2 * n + 1); }

BigInt expected_symmetric(std::size_t n) {
  if (n % 2 == 1) return count_fixed((n + 1) / 2);
  return binomial(3 * n / 2, n / 2) / (n + 1);
}

}  // namespace betamaps

#include "betamaps/planar_map.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace betamaps {

namespace {

std::vector<std::vector<int>> orbits(std::size_t n, const std::function<int(int)>& next) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit;
    int d = static_cast<int>(start);
    while (!seen[d]) {
      seen[d] = true;
      orbit.push_back(d);
      d = next(d);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_permutation(const std::vector<int>& p) {
  std::vector<bool> hit(p.size(), false);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::vector<int> inverse(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

}  // namespace

std::vector<std::vector<int>> RootedMap::vertices() const {
  return orbits(dart_count(), [this](int d) { return sigma[d]; });
}

std::vector<std::vector<int>> RootedMap::faces() const {
  return orbits(dart_count(), [this](int d) { return phi(d); });
}

std::vector<int> RootedMap::vertex_of() const {
  std::vector<int> owner(dart_count(), -1);
  const auto vs = vertices();
  for (std::size_t v = 0; v < vs.size(); ++v) {
    for (int d : vs[v]) owner[d] = static_cast<int>(v);
  }
  return owner;
}

std::size_t RootedMap::root_face_degree() const {
  std::size_t deg = 0;
  int d = root;
  do {
    ++deg;
    d = phi(d);
  } while (d != root);
  return deg;
}

std::size_t RootedMap::root_vertex_degree() const {
  std::size_t deg = 0;
  int d = root;
  do {
    ++deg;
    d = sigma[d];
  } while (d != root);
  return deg;
}

RootedMap RootedMap::from_one_based(const std::vector<int>& alpha, const std::vector<int>& sigma,
                                    int root) {
  RootedMap m;
  m.alpha.reserve(alpha.size());
  m.sigma.reserve(sigma.size());
  for (int a : alpha) m.alpha.push_back(a - 1);
  for (int s : sigma) m.sigma.push_back(s - 1);
  m.root = root - 1;
  return m;
}

std::vector<int> RootedMap::alpha_one_based() const {
  std::vector<int> out;
  for (int a : alpha) out.push_back(a + 1);
  return out;
}

std::vector<int> RootedMap::sigma_one_based() const {
  std::vector<int> out;
  for (int s : sigma) out.push_back(s + 1);
  return out;
}

RootedMap RootedMap::single_edge() { return RootedMap{{1, 0}, {0, 1}, 0}; }

std::optional<MapViolation> validate_map(const RootedMap& m) {
  using K = MapViolation::Kind;
  const std::size_t n = m.dart_count();
  if (n == 0 || n % 2 != 0 || m.sigma.size() != n) {
    return MapViolation{K::kShape, "dart arrays must have equal, even, positive length"};
  }
  if (!is_permutation(m.alpha)) return MapViolation{K::kAlpha, "alpha is not a permutation"};
  for (std::size_t d = 0; d < n; ++d) {
    if (m.alpha[d] == static_cast<int>(d) || m.alpha[m.alpha[d]] != static_cast<int>(d)) {
      return MapViolation{K::kAlpha, "alpha is not a fixed-point-free involution at dart " +
                                         std::to_string(d + 1)};
    }
  }
  if (!is_permutation(m.sigma)) return MapViolation{K::kSigma, "sigma is not a permutation"};
  if (m.root < 0 || static_cast<std::size_t>(m.root) >= n) {
    return MapViolation{K::kRoot, "root dart out of range"};
  }

  std::vector<bool> seen(n, false);
  std::vector<int> stack{m.root};
  seen[m.root] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    for (int e : {m.alpha[d], m.sigma[d]}) {
      if (!seen[e]) {
        seen[e] = true;
        ++reached;
        stack.push_back(e);
      }
    }
  }
  if (reached != n) return MapViolation{K::kDisconnected, "disconnected"};

  const long v = static_cast<long>(m.vertices().size());
  const long f = static_cast<long>(m.faces().size());
  const long e = static_cast<long>(m.edge_count());
  if (v - e + f != 2) {
    return MapViolation{K::kNonplanar, "nonplanar: V - E + F = " + std::to_string(v - e + f)};
  }
  return std::nullopt;
}

bool is_nonseparable(const RootedMap& m) {
  const auto owner = m.vertex_of();
  const std::size_t nv = m.vertices().size();
  std::vector<std::vector<int>> adj(nv);
  for (std::size_t d = 0; d < m.dart_count(); ++d) {
    const int u = owner[d];
    const int w = owner[m.alpha[d]];
    if (u == w) return false;  // loop
    adj[u].push_back(w);
  }

  // Articulation points by DFS lowpoints; parallel edges are harmless here.
  std::vector<int> disc(nv, -1);
  std::vector<int> low(nv, 0);
  int timer = 0;
  bool cut = false;
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (int w : adj[u]) {
      if (w == parent) continue;
      if (disc[w] >= 0) {
        low[u] = std::min(low[u], disc[w]);
        continue;
      }
      ++children;
      dfs(w, u);
      low[u] = std::min(low[u], low[w]);
      if (parent >= 0 && low[w] >= disc[u]) cut = true;
    }
    if (parent < 0 && children > 1) cut = true;
  };
  dfs(0, -1);
  if (std::any_of(disc.begin(), disc.end(), [](int x) { return x < 0; })) return false;
  return !cut;
}

RootedMap dual(const RootedMap& m) {
  if (m.edge_count() < 2) throw DegenerateDualError();
  RootedMap d;
  d.alpha = m.alpha;
  // sigma* = phi^-1 = alpha o sigma^-1
  const auto sigma_inv = inverse(m.sigma);
  d.sigma.resize(m.dart_count());
  for (std::size_t i = 0; i < m.dart_count(); ++i) d.sigma[i] = m.alpha[sigma_inv[i]];
  d.root = d.sigma[m.root];
  return d;
}

std::string CanonicalMapCode::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  return os.str();
}

CanonicalMapCode canonical_code(const RootedMap& m) {
  const std::size_t n = m.dart_count();
  std::vector<int> label(n, -1);
  std::vector<int> order;
  order.reserve(n);
  label[m.root] = 0;
  order.push_back(m.root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int d = order[i];
    for (int e : {m.alpha[d], m.sigma[d]}) {
      if (label[e] < 0) {
        label[e] = static_cast<int>(order.size());
        order.push_back(e);
      }
    }
  }
  CanonicalMapCode code;
  code.values.reserve(2 * order.size() + 1);
  code.values.push_back(static_cast<int>(n));
  for (int d : order) {
    code.values.push_back(label[m.alpha[d]]);
    code.values.push_back(label[m.sigma[d]]);
  }
  return code;
}

bool isomorphic(const RootedMap& a, const RootedMap& b) {
  return canonical_code(a) == canonical_code(b);
}

bool is_self_dual(const RootedMap& m) { return isomorphic(m, dual(m)); }

RootedMap relabel(const RootedMap& m, const std::vector<int>& perm) {
  RootedMap r;
  r.alpha.resize(m.dart_count());
  r.sigma.resize(m.dart_count());
  for (std::size_t d = 0; d < m.dart_count(); ++d) {
    r.alpha[perm[d]] = perm[m.alpha[d]];
    r.sigma[perm[d]] = perm[m.sigma[d]];
  }
  r.root = perm[m.root];
  return r;
}

}  // namespace betamaps

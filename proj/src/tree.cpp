#include "betamaps/tree.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace betamaps {

std::size_t BetaTree::size() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.size();
  return n;
}

long BetaTree::child_label_sum() const {
  long s = 0;
  for (const auto& c : children) s += c.label;
  return s;
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << "node ";
  if (path.empty()) {
    os << "root";
  } else {
    os << "root";
    for (auto i : path) os << '.' << i;
  }
  os << ": " << message;
  return os.str();
}

ParseError::ParseError(std::size_t offset, const std::string& what)
    : std::runtime_error("parse error at byte " + std::to_string(offset) + ": " + what),
      offset_(offset) {}

namespace {

std::optional<Violation> validate_node(const BetaTree& t, bool is_root,
                                       std::vector<std::size_t>& path) {
  if (t.label <= 0) {
    return Violation{path, "nonpositive label " + std::to_string(t.label)};
  }
  if (t.is_leaf()) {
    if (t.label != 1) {
      return Violation{path, "leaf has label " + std::to_string(t.label) + ", expected 1"};
    }
  } else {
    const long sum = t.child_label_sum();
    if (is_root && t.label != sum) {
      return Violation{path, "root label " + std::to_string(t.label) +
                                 " differs from children's sum " + std::to_string(sum)};
    }
    if (!is_root && t.label > sum) {
      return Violation{path, "label " + std::to_string(t.label) +
                                 " exceeds children's sum " + std::to_string(sum)};
    }
  }
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    path.push_back(i);
    if (auto v = validate_node(t.children[i], false, path)) return v;
    path.pop_back();
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> validate(const BetaTree& t) {
  std::vector<std::size_t> path;
  return validate_node(t, true, path);
}

bool is_valid(const BetaTree& t) { return !validate(t).has_value(); }

TreeStats stats(const BetaTree& t) {
  TreeStats s;
  s.root_label = t.label;
  s.sub = t.children.size();
  const BetaTree* node = &t;
  while (!node->is_leaf()) {
    node = &node->children.back();
    ++s.rpath;
    if (node->label == 1) ++s.rsub;
  }
  return s;
}

BetaTree with_root_sum(BetaTree t) {
  t.label = t.is_leaf() ? 1 : t.child_label_sum();
  return t;
}

Decomposition decompose(const BetaTree& t) {
  if (t.is_leaf()) throw AtomicTreeError();
  if (t.children.size() == 1) {
    const BetaTree& child = t.children.front();
    return Indecomposable{with_root_sum(child), child.label};
  }
  BetaTree a{0, std::vector<BetaTree>(t.children.begin(), t.children.end() - 1)};
  BetaTree b{0, {t.children.back()}};
  return Decomposable{with_root_sum(std::move(a)), with_root_sum(std::move(b))};
}

BetaTree join(const BetaTree& a, const BetaTree& b) {
  BetaTree r{0, a.children};
  r.children.insert(r.children.end(), b.children.begin(), b.children.end());
  return with_root_sum(std::move(r));
}

BetaTree recompose(const Decomposition& d) {
  if (const auto* ind = std::get_if<Indecomposable>(&d)) {
    BetaTree child = ind->a;
    child.label = ind->child_label;
    return BetaTree{ind->child_label, {std::move(child)}};
  }
  const auto& dec = std::get<Decomposable>(d);
  return join(dec.a, dec.b);
}

std::vector<const BetaTree*> rightmost_path(const BetaTree& t) {
  std::vector<const BetaTree*> path{&t};
  while (!path.back()->is_leaf()) path.push_back(&path.back()->children.back());
  return path;
}

std::vector<BetaTree*> rightmost_path(BetaTree& t) {
  std::vector<BetaTree*> path{&t};
  while (!path.back()->is_leaf()) path.push_back(&path.back()->children.back());
  return path;
}

BetaTree glue_right(const BetaTree& upper, const BetaTree& lower) {
  BetaTree result = upper;
  BetaTree* leaf = rightmost_path(result).back();
  leaf->children = lower.children;
  leaf->label = 1;
  return result;
}

std::vector<BetaTree> right_decompose(const BetaTree& t) {
  if (t.is_leaf()) throw AtomicTreeError();
  std::vector<BetaTree> components;
  BetaTree rest = t;
  for (;;) {
    // Cut at the first label-1 node strictly below the current root.
    BetaTree* node = &rest;
    do {
      node = &node->children.back();
    } while (node->label != 1);
    if (node->is_leaf()) {
      components.push_back(std::move(rest));
      break;
    }
    BetaTree lower = with_root_sum(BetaTree{0, std::move(node->children)});
    node->children.clear();
    components.push_back(std::move(rest));
    rest = std::move(lower);
  }
  return components;
}

BetaTree right_compose(const std::vector<BetaTree>& components) {
  if (components.empty()) throw std::invalid_argument("right_compose: no components");
  BetaTree result = components.back();
  for (auto it = components.rbegin() + 1; it != components.rend(); ++it) {
    result = glue_right(*it, result);
  }
  return result;
}

// ---------------------------------------------------------------------------

namespace {

void write_text(const BetaTree& t, std::string& out) {
  out += '(';
  out += std::to_string(t.label);
  for (const auto& c : t.children) {
    out += ' ';
    write_text(c, out);
  }
  out += ')';
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  BetaTree parse() {
    skip_ws();
    BetaTree t = parse_tree();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(pos_, "trailing input");
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  BetaTree parse_tree() {
    if (pos_ >= s_.size() || s_[pos_] != '(') throw ParseError(pos_, "expected '('");
    ++pos_;
    skip_ws();
    BetaTree t{parse_int()};
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
      if (s_[pos_] == ')') {
        ++pos_;
        return t;
      }
      t.children.push_back(parse_tree());
    }
  }

  long parse_int() {
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const long digit = s_[pos_] - '0';
      if (value > (std::numeric_limits<long>::max() - digit) / 10) {
        throw ParseError(start, "integer out of range");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected integer label");
    return value;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const BetaTree& t) {
  std::string out;
  write_text(t, out);
  return out;
}

BetaTree from_text(std::string_view s) { return Parser(s).parse(); }

// ---------------------------------------------------------------------------

namespace {

using ForestVisitor = std::function<void(const std::vector<BetaTree>&)>;

void generate_subtrees(std::size_t size, const TreeVisitor& visit);

void generate_forests(std::size_t size, std::vector<BetaTree>& prefix,
                      const ForestVisitor& visit) {
  if (size == 0) {
    visit(prefix);
    return;
  }
  for (std::size_t first = 1; first <= size; ++first) {
    generate_subtrees(first, [&](const BetaTree& t) {
      prefix.push_back(t);
      generate_forests(size - first, prefix, visit);
      prefix.pop_back();
    });
  }
}

// Non-root subtrees: label anywhere in [1, children's sum].
void generate_subtrees(std::size_t size, const TreeVisitor& visit) {
  if (size == 1) {
    visit(BetaTree::node());
    return;
  }
  std::vector<BetaTree> prefix;
  generate_forests(size - 1, prefix, [&](const std::vector<BetaTree>& forest) {
    BetaTree t{1, forest};
    const long sum = t.child_label_sum();
    for (long l = 1; l <= sum; ++l) {
      t.label = l;
      visit(t);
    }
  });
}

}  // namespace

void generate_all(std::size_t n, const TreeVisitor& visit) {
  if (n == 0) return;
  if (n == 1) {
    visit(BetaTree::node());
    return;
  }
  std::vector<BetaTree> prefix;
  generate_forests(n - 1, prefix, [&](const std::vector<BetaTree>& forest) {
    BetaTree t{0, forest};
    t.label = t.child_label_sum();
    visit(t);
  });
}

namespace {

void unit_forests(std::size_t size, std::vector<BetaTree>& prefix, const ForestVisitor& visit) {
  if (size == 0) {
    visit(prefix);
    return;
  }
  for (std::size_t first = 1; first <= size; ++first) {
    std::vector<BetaTree> inner;
    unit_forests(first - 1, inner, [&](const std::vector<BetaTree>& kids) {
      prefix.push_back(BetaTree{1, kids});
      unit_forests(size - first, prefix, visit);
      prefix.pop_back();
    });
  }
}

}  // namespace

void generate_unit_labelled(std::size_t n, const TreeVisitor& visit) {
  if (n == 0) return;
  std::vector<BetaTree> prefix;
  unit_forests(n - 1, prefix, [&](const std::vector<BetaTree>& forest) {
    visit(with_root_sum(BetaTree{0, forest}));
  });
}

std::vector<BetaTree> all_trees(std::size_t n) {
  std::vector<BetaTree> out;
  generate_all(n, [&](const BetaTree& t) { out.push_back(t); });
  return out;
}

std::size_t count_trees(std::size_t n) {
  if (n == 0) return 0;
  if (n == 1) return 1;
  // forests[m][s]: forests of m nodes whose root labels sum to s.
  // subtrees[m][k]: non-root subtrees of m nodes with label k.
  const std::size_t m_max = n - 1;
  std::vector<std::vector<std::size_t>> forests(m_max + 1, std::vector<std::size_t>(n + 1, 0));
  std::vector<std::vector<std::size_t>> subtrees(m_max + 1, std::vector<std::size_t>(n + 1, 0));
  forests[0][0] = 1;
  for (std::size_t m = 1; m <= m_max; ++m) {
    if (m == 1) {
      subtrees[1][1] = 1;
    } else {
      for (std::size_t k = 1; k <= n; ++k) {
        std::size_t c = 0;
        for (std::size_t s = k; s <= n; ++s) c += forests[m - 1][s];
        subtrees[m][k] = c;
      }
    }
    for (std::size_t first = 1; first <= m; ++first) {
      for (std::size_t k = 1; k <= n; ++k) {
        if (subtrees[first][k] == 0) continue;
        for (std::size_t s = 0; s + k <= n; ++s) {
          forests[m][s + k] += subtrees[first][k] * forests[m - first][s];
        }
      }
    }
  }
  return std::accumulate(forests[m_max].begin(), forests[m_max].end(), std::size_t{0});
}

}  // namespace betamaps

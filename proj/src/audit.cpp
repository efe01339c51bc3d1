#include "betamaps/audit.hpp"

#include <atomic>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "betamaps/fixed_points.hpp"
#include "betamaps/involution.hpp"
#include "betamaps/series.hpp"
#include "betamaps/symmetry.hpp"
#include "betamaps/tree_map.hpp"

namespace betamaps {

namespace {

constexpr std::size_t kBatch = 4096;
constexpr std::size_t kMaxQueuedBatches = 16;

class BatchQueue {
 public:
  void push(std::vector<BetaTree> batch) {
    std::unique_lock lock(mu_);
    not_full_.wait(lock, [&] { return queue_.size() < kMaxQueuedBatches; });
    queue_.push_back(std::move(batch));
    not_empty_.notify_one();
  }

  void close() {
    std::lock_guard lock(mu_);
    closed_ = true;
    not_empty_.notify_all();
  }

  bool pop(std::vector<BetaTree>& out) {
    std::unique_lock lock(mu_);
    not_empty_.wait(lock, [&] { return closed_ || !queue_.empty(); });
    if (queue_.empty()) return false;
    out = std::move(queue_.front());
    queue_.pop_front();
    not_full_.notify_one();
    return true;
  }

 private:
  std::mutex mu_;
  std::condition_variable not_empty_;
  std::condition_variable not_full_;
  std::deque<std::vector<BetaTree>> queue_;
  bool closed_ = false;
};

}  // namespace

ScanResult scan_trees(std::size_t n, unsigned threads,
                      const std::function<bool(const BetaTree&)>& check) {
  ScanResult result;
  if (threads <= 1) {
    generate_all(n, [&](const BetaTree& t) {
      ++result.scanned;
      if (!check(t)) {
        if (result.failures++ == 0) result.first_failure = t;
      }
    });
    return result;
  }

  BatchQueue queue;
  std::mutex result_mu;
  std::atomic<std::size_t> scanned{0};
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&] {
      std::vector<BetaTree> batch;
      while (queue.pop(batch)) {
        for (const auto& t : batch) {
          if (check(t)) continue;
          std::lock_guard lock(result_mu);
          if (result.failures++ == 0) result.first_failure = t;
        }
        scanned += batch.size();
      }
    });
  }
  std::vector<BetaTree> batch;
  batch.reserve(kBatch);
  generate_all(n, [&](const BetaTree& t) {
    batch.push_back(t);
    if (batch.size() == kBatch) {
      queue.push(std::move(batch));
      batch = {};
      batch.reserve(kBatch);
    }
  });
  if (!batch.empty()) queue.push(std::move(batch));
  queue.close();
  for (auto& w : workers) w.join();
  result.scanned = scanned;
  return result;
}

namespace {

AuditLine scan_audit(const std::string& name, std::size_t from, const AuditOptions& opt,
                     const std::function<bool(const BetaTree&)>& check) {
  AuditLine line;
  line.name = name;
  std::size_t total = 0;
  for (std::size_t n = from; n <= opt.max_nodes; ++n) {
    const ScanResult r = scan_trees(n, opt.threads, check);
    total += r.scanned;
    if (!r.ok()) {
      line.pass = false;
      line.detail = std::to_string(r.failures) + " failures at n=" + std::to_string(n) +
                    ", e.g. " + to_text(*r.first_failure);
      return line;
    }
  }
  line.detail = std::to_string(total) + " trees, n<=" + std::to_string(opt.max_nodes);
  return line;
}

AuditLine fail(AuditLine line, const std::string& detail) {
  line.pass = false;
  line.detail = detail;
  return line;
}

}  // namespace

AuditLine audit_involution(const AuditOptions& opt) {
  return scan_audit("involution", 1, opt, [](const BetaTree& t) {
    const BetaTree image = h(t);
    return image.size() == t.size() && is_valid(image) && h(image) == t;
  });
}

AuditLine audit_statistic_swap(const AuditOptions& opt) {
  return scan_audit("statistic-swap", 2, opt, [](const BetaTree& t) { return check_theorem1(t); });
}

AuditLine audit_stacking(const AuditOptions& opt) {
  return scan_audit("stacking", 2, opt, [](const BetaTree& t) {
    const auto parts = right_decompose(t);
    for (std::size_t j = 1; j <= parts.size(); ++j) {
      std::vector<BetaTree> head(parts.begin(), parts.begin() + j);
      std::optional<BetaTree> tail;
      if (j < parts.size()) {
        tail = right_compose(std::vector<BetaTree>(parts.begin() + j, parts.end()));
      }
      if (!check_figure5_property(head, tail)) return false;
    }
    return true;
  });
}

AuditLine audit_catalan_restriction(const AuditOptions& opt) {
  AuditLine line;
  line.name = "catalan-restriction";
  const std::size_t max_n = opt.max_nodes + 2;
  std::size_t total = 0;
  auto unit = [](const BetaTree& t) {
    for (const auto& c : t.children) {
      std::vector<const BetaTree*> stack{&c};
      while (!stack.empty()) {
        const BetaTree* node = stack.back();
        stack.pop_back();
        if (node->label != 1) return false;
        for (const auto& g : node->children) stack.push_back(&g);
      }
    }
    return true;
  };
  for (std::size_t n = 1; n <= max_n; ++n) {
    bool ok = true;
    generate_unit_labelled(n, [&](const BetaTree& t) {
      ++total;
      if (ok && !unit(h(t))) {
        ok = false;
        line = fail(line, "image leaves the family: " + to_text(t));
      }
    });
    if (!ok) return line;
  }
  line.detail = std::to_string(total) + " trees, n<=" + std::to_string(max_n);
  return line;
}

AuditLine audit_fixed_counts(const AuditOptions& opt) {
  AuditLine line;
  line.name = "fixed-counts";
  std::ostringstream os;
  for (std::size_t n = 1; n <= opt.max_nodes; ++n) {
    const ScanResult r = scan_trees(n, opt.threads, [](const BetaTree& t) { return !is_fixed(t); });
    const BigInt expected = n == 1 ? BigInt(1) : (n % 2 ? BigInt(0) : count_fixed(n / 2));
    if (BigInt(r.failures) != expected) {
      return fail(line, "n=" + std::to_string(n) + ": " + std::to_string(r.failures) +
                            " fixed points, expected " + expected.str());
    }
    if (n % 2 == 0) os << (n == 2 ? "" : ",") << r.failures;
  }
  line.detail = "even n: " + os.str();
  return line;
}

AuditLine audit_structure(const AuditOptions& opt) {
  AuditLine line;
  line.name = "structure";
  std::size_t total = 0;
  for (std::size_t n = 2; n <= opt.max_nodes; n += 2) {
    std::set<std::string> brute;
    generate_all(n, [&](const BetaTree& t) {
      if (is_fixed(t)) brute.insert(to_text(t));
    });
    std::set<std::string> direct;
    std::size_t direct_count = 0;
    std::string problem;
    enumerate_fixed(n, [&](const BetaTree& t) {
      ++direct_count;
      direct.insert(to_text(t));
      if (!problem.empty()) return;
      try {
        const auto s = classify(t);
        if (build(s) != t || classify(build(s)) != s) problem = "round trip fails for " + to_text(t);
      } catch (const std::exception& e) {
        problem = to_text(t) + ": " + e.what();
      }
    });
    if (!problem.empty()) return fail(line, problem);
    if (direct_count != direct.size()) return fail(line, "duplicates at n=" + std::to_string(n));
    if (brute != direct) return fail(line, "brute force and F1/F2 enumeration differ at n=" + std::to_string(n));
    total += direct.size();
  }
  line.detail = std::to_string(total) + " fixed points classified and rebuilt";
  return line;
}

AuditLine audit_small_fixed_points(const AuditOptions& opt) {
  AuditLine line;
  line.name = "small-fixed-points";
  for (std::size_t n = 3; n <= opt.max_nodes; ++n) {
    const ScanResult r = scan_trees(n, opt.threads, [](const BetaTree& t) {
      return !(t.label == 1 && is_fixed(t));
    });
    if (!r.ok()) return fail(line, "fixed point with root label 1: " + to_text(*r.first_failure));
  }
  line.detail = "only the node and the edge";
  return line;
}

AuditLine audit_series(const AuditOptions& opt) {
  AuditLine line;
  line.name = "series";
  const std::size_t bi = opt.series_order;
  const std::size_t uni = opt.univariate_order;
  for (const auto& r : {verify_eq1(bi), verify_eq2(bi), verify_theorem4(bi),
                        verify_ternary_link(uni)}) {
    if (!r.pass) {
      std::ostringstream os;
      os << r.name << ": " << r.failing_identity << " fails at x^" << r.first_failure->n << " y^"
         << r.first_failure->k << " (residual " << r.first_failure->value << ")";
      return fail(line, os.str());
    }
  }
  line.detail = "eq1, eq2, thm4, kernel at order " + std::to_string(bi) + "; ternary at order " +
                std::to_string(uni);
  return line;
}

AuditLine audit_closed_form(const AuditOptions& opt) {
  AuditLine line;
  line.name = "closed-form";
  const auto u = lagrange_u(opt.univariate_order);
  const auto iterated = iterate_u(opt.univariate_order);
  for (std::size_t n = 1; n <= opt.univariate_order; ++n) {
    if (u.coeff(n, 0) != count_fixed(n) || iterated.coeff(n, 0) != count_fixed(n)) {
      return fail(line, "coefficient " + std::to_string(n) + " disagrees");
    }
  }
  line.detail = "a_" + std::to_string(opt.univariate_order) + " = " +
                count_fixed(opt.univariate_order).str();
  return line;
}

BijectionSizeReport audit_bijection_size(std::size_t nodes) {
  BijectionSizeReport rep;
  rep.nodes = nodes;
  std::set<CanonicalMapCode> codes;
  const MapPreimageIndex index(nodes);
  generate_all(nodes, [&](const BetaTree& t) {
    ++rep.trees;
    const RootedMap m = tree_to_map(t);
    if (m.edge_count() == nodes && !validate_map(m) && is_nonseparable(m)) ++rep.nonseparable;
    if (static_cast<long>(m.root_face_degree()) == t.label + 1) ++rep.degree_law;
    codes.insert(canonical_code(m));
    try {
      if (index.map_to_tree(m) == t) ++rep.round_trips;
    } catch (const NoPreimageError&) {
    }
  });
  rep.distinct_images = codes.size();
  return rep;
}

AuditLine audit_bijection(const AuditOptions& opt) {
  AuditLine line;
  line.name = "bijection";
  std::size_t total = 0;
  for (std::size_t n = 1; n <= opt.max_map_edges; ++n) {
    const auto rep = audit_bijection_size(n);
    if (!rep.ok()) return fail(line, "n=" + std::to_string(n) + " fails");
    total += rep.trees;
  }
  line.detail = std::to_string(total) + " maps, injective, non-separable, degree law";
  return line;
}

AuditLine audit_duality(const AuditOptions& opt) {
  AuditLine line;
  line.name = "duality";
  std::ostringstream census;
  for (std::size_t n = 2; n <= opt.max_map_edges; ++n) {
    std::size_t self_dual = 0;
    std::string problem;
    generate_all(n, [&](const BetaTree& t) {
      const RootedMap m = tree_to_map(t);
      const RootedMap d = dual(m);
      if (problem.empty() && (!isomorphic(dual(d), m) || validate_map(d) ||
                              d.root_face_degree() != m.root_vertex_degree())) {
        problem = "duality fails for image of " + to_text(t);
      }
      if (isomorphic(m, d)) ++self_dual;
    });
    if (!problem.empty()) return fail(line, problem);
    const BigInt expected = n % 2 ? BigInt(0) : count_fixed(n / 2);
    if (BigInt(self_dual) != expected) {
      return fail(line, std::to_string(self_dual) + " self-dual maps with " + std::to_string(n) +
                            " edges, expected " + expected.str());
    }
    if (n % 2 == 0) census << (n == 2 ? "" : ",") << self_dual;
  }
  line.detail = "dual involution; self-dual census " + census.str();
  return line;
}

AuditLine audit_witness(const AuditOptions& opt) {
  AuditLine line;
  line.name = "noncorrespondence";
  const auto w = witness_noncorrespondence(std::max<std::size_t>(6, std::min<std::size_t>(opt.max_nodes, 8)));
  if (!w) return fail(line, "every fixed point maps to a self-dual map");
  line.detail = "witness " + to_text(*w);
  return line;
}

AuditLine audit_symmetry(const AuditOptions& opt) {
  AuditLine line;
  line.name = "symmetry";
  for (std::size_t n = 1; n <= opt.symmetry_size; ++n) {
    const BigInt expected = expected_symmetric(n);
    for (Family f : {Family::kTernary, Family::kEven, Family::kNonCrossing}) {
      const auto c = count_symmetric(f, n);
      if (c.total != ternary_count(n) || c.symmetric != expected) {
        return fail(line, family_name(f) + " n=" + std::to_string(n) + ": " + c.symmetric.str() +
                              " symmetric, expected " + expected.str());
      }
    }
  }
  line.detail = "ternary, even, noncrossing agree for n<=" + std::to_string(opt.symmetry_size);
  return line;
}

std::vector<AuditLine> run_all_audits(const AuditOptions& opt) {
  return {audit_involution(opt),  audit_statistic_swap(opt),     audit_stacking(opt),
          audit_catalan_restriction(opt), audit_fixed_counts(opt), audit_structure(opt),
          audit_small_fixed_points(opt),      audit_series(opt),       audit_closed_form(opt),
          audit_bijection(opt),   audit_duality(opt),      audit_witness(opt),
          audit_symmetry(opt)};
}

}  // namespace betamaps

#ifndef BETAMAPS_AUDIT_HPP_
#define BETAMAPS_AUDIT_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "betamaps/tree.hpp"

namespace betamaps {

struct ScanResult {
  std::size_t scanned = 0;
  std::size_t failures = 0;
  std::optional<BetaTree> first_failure;

  bool ok() const { return failures == 0; }
};

/// Runs `check` on every tree with n nodes. With threads > 1 the generator
/// feeds batches to worker threads; `check` must be safe to call
/// concurrently. first_failure is some failing tree, not necessarily the
/// first in generation order when threads > 1.
ScanResult scan_trees(std::size_t n, unsigned threads,
                      const std::function<bool(const BetaTree&)>& check);

struct AuditLine {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct AuditOptions {
  std::size_t max_nodes = 10;
  std::size_t series_order = 10;
  std::size_t univariate_order = 20;
  std::size_t max_map_edges = 8;
  std::size_t symmetry_size = 7;
  unsigned threads = 1;
};

AuditLine audit_involution(const AuditOptions& opt);
AuditLine audit_statistic_swap(const AuditOptions& opt);
AuditLine audit_stacking(const AuditOptions& opt);
AuditLine audit_catalan_restriction(const AuditOptions& opt);
AuditLine audit_fixed_counts(const AuditOptions& opt);
AuditLine audit_structure(const AuditOptions& opt);
AuditLine audit_small_fixed_points(const AuditOptions& opt);
AuditLine audit_series(const AuditOptions& opt);
AuditLine audit_closed_form(const AuditOptions& opt);
AuditLine audit_bijection(const AuditOptions& opt);
AuditLine audit_duality(const AuditOptions& opt);
AuditLine audit_witness(const AuditOptions& opt);
AuditLine audit_symmetry(const AuditOptions& opt);

std::vector<AuditLine> run_all_audits(const AuditOptions& opt);

/// Per-size injectivity, non-separability and root-face degree results.
struct BijectionSizeReport {
  std::size_t nodes = 0;
  std::size_t trees = 0;
  std::size_t distinct_images = 0;
  std::size_t nonseparable = 0;
  std::size_t degree_law = 0;
  std::size_t round_trips = 0;

  bool ok() const {
    return distinct_images == trees && nonseparable == trees && degree_law == trees &&
           round_trips == trees;
  }
};

BijectionSizeReport audit_bijection_size(std::size_t nodes);

}  // namespace betamaps

#endif  // BETAMAPS_AUDIT_HPP_

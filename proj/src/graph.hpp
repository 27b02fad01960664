#pragma once

#include <optional>
#include <string>
#include <vector>

#include "transforms.hpp"

namespace iterpoly {

struct ComponentInfo {
  std::uint32_t id = 0;
  std::uint32_t cycle_length = 0;
  std::uint64_t size = 0;
};

/// Functional graph of the x-only duplication map on P^1(F_q): one node per
/// element of F_q plus infinity, each with a single outgoing edge.  Node 0 is
/// infinity; node 1+i is the field element with canonical index i.
class FunctionalGraph {
public:
  const ExtField& field() const { return *K_; }
  std::uint64_t node_count() const { return succ_.size(); }
  std::uint32_t successor(std::uint32_t v) const { return succ_[v]; }
  bool periodic(std::uint32_t v) const { return periodic_[v] != 0; }
  std::uint32_t component_of(std::uint32_t v) const { return comp_[v]; }
  const std::vector<ComponentInfo>& components() const { return components_; }

  /// Predecessors of v (reversed edges).
  std::pair<const std::uint32_t*, const std::uint32_t*> preds(std::uint32_t v) const {
    return {pred_data_.data() + pred_off_[v], pred_data_.data() + pred_off_[v + 1]};
  }
  std::uint32_t in_degree(std::uint32_t v) const { return pred_off_[v + 1] - pred_off_[v]; }

  std::uint32_t node_of(const ProjPoint& x) const;
  ProjPoint point_of(std::uint32_t v) const;
  std::string node_name(std::uint32_t v) const;  // "inf" or the coefficient list

private:
  friend FunctionalGraph build_graph(const ExtField& K, std::uint64_t cap, unsigned workers);
  const ExtField* K_ = nullptr;
  std::vector<std::uint32_t> succ_;
  std::vector<std::uint8_t> periodic_;
  std::vector<std::uint32_t> comp_;
  std::vector<ComponentInfo> components_;
  std::vector<std::uint32_t> pred_off_, pred_data_;
};

/// Builds the graph; requires p^n + 1 <= cap.  The successor computation may
/// be partitioned over workers; node order is fixed, so the result does not
/// depend on the worker count.
FunctionalGraph build_graph(const ExtField& K, std::uint64_t cap, unsigned workers = 1);

struct TreeStats {
  std::uint32_t root = 0;
  unsigned depth = 0;
  std::vector<std::uint64_t> level_sizes;  // level 0 is the root itself
  std::vector<unsigned> leaf_heights;      // ascending
};

/// Statistics of the reversed tree hanging off a periodic node; the root's
/// predecessor on its cycle is not part of the tree.
TreeStats tree_stats(const FunctionalGraph& g, std::uint32_t root);

/// Number of distinct preimages of a point under the duplication map in the
/// algebraic closure: 2 above 0 and the square roots of -1, 4 elsewhere.
unsigned preimage_count_closure(const ExtField& K, const ProjPoint& x);

/// Number of graph predecessors the point has over F_q itself.
std::uint64_t preimage_count_in_field(const ExtField& K, const ProjPoint& x);

enum class DotLabels { raw, dlog };

std::string to_dot(const FunctionalGraph& g, DotLabels labels);
std::string to_json(const FunctionalGraph& g);
std::string summary_table(const FunctionalGraph& g);

struct DepthCheck {
  unsigned tower = 0;
  std::string root;
  unsigned predicted = 0;
  unsigned measured = 0;
  bool depth_ok = false;
  bool heights_ok = true;            // ordinary case: leaf heights >= depth - 1
  std::optional<bool> part2_ok;      // children of leaves are leaves one tower up
};

struct DepthReport {
  std::uint64_t p = 0;
  unsigned m = 1;
  bool supersingular = false;
  std::vector<DepthCheck> checks;
  std::vector<std::string> notes;
  bool all_ok = true;
};

/// Measures every tree of the duplication graph over F_{q^{2^i}} rooted at a
/// periodic point of P^1(F_q), q = p^m, for each tower i in [lo, hi], and
/// compares against the valuation-based predictions.
DepthReport verify_depth(std::uint64_t p, unsigned m, unsigned tower_lo, unsigned tower_hi,
                         std::uint64_t cap);

}  // namespace iterpoly

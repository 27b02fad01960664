#include "graph.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <sstream>
#include <thread>

#include "gaussian.hpp"
#include "json.hpp"

namespace iterpoly {

std::uint32_t FunctionalGraph::node_of(const ProjPoint& x) const {
  if (x.infinite) return 0;
  return static_cast<std::uint32_t>(1 + K_->index_of(x.v));
}

ProjPoint FunctionalGraph::point_of(std::uint32_t v) const {
  if (v == 0) return ProjPoint::inf();
  return ProjPoint::finite(K_->elem_at(v - 1));
}

std::string FunctionalGraph::node_name(std::uint32_t v) const {
  if (v == 0) return "inf";
  return K_->elem_name(K_->elem_at(v - 1));
}

FunctionalGraph build_graph(const ExtField& K, std::uint64_t cap, unsigned workers) {
  auto q = K.order_u64();
  if (!q || *q + 1 > cap)
    fail(Errc::scale_limit, "graph would exceed the enumeration cap");
  const std::uint64_t n = *q + 1;
  FunctionalGraph g;
  g.K_ = &K;
  g.succ_.assign(n, 0);

  auto fill = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t v = lo; v < hi; ++v) {
      ProjPoint img = xdbl(K, ProjPoint::finite(K.elem_at(v - 1)));
      g.succ_[v] = img.infinite ? 0 : static_cast<std::uint32_t>(1 + K.index_of(img.v));
    }
  };
  g.succ_[0] = 0;
  if (workers <= 1 || n < 4096) {
    fill(1, n);
  } else {
    unsigned nw = std::min<unsigned>(workers, 16);
    std::vector<std::thread> pool;
    std::uint64_t chunk = (n - 1 + nw - 1) / nw;
    for (unsigned w = 0; w < nw; ++w) {
      std::uint64_t lo = 1 + w * chunk;
      std::uint64_t hi = std::min<std::uint64_t>(n, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(fill, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  // Cycle/tree decomposition: walk unvisited nodes, detect the cycle each
  // path runs into, and propagate component ids back over the path.
  g.periodic_.assign(n, 0);
  g.comp_.assign(n, UINT32_MAX);
  std::vector<std::uint8_t> state(n, 0);  // 0 new, 1 on current path, 2 done
  std::vector<std::uint32_t> path;
  for (std::uint64_t v0 = 0; v0 < n; ++v0) {
    if (state[v0] != 0) continue;
    path.clear();
    std::uint32_t u = static_cast<std::uint32_t>(v0);
    while (state[u] == 0) {
      state[u] = 1;
      path.push_back(u);
      u = g.succ_[u];
    }
    std::uint32_t cid;
    if (state[u] == 1) {
      cid = static_cast<std::uint32_t>(g.components_.size());
      std::uint32_t len = 0;
      std::uint32_t w = u;
      do {
        g.periodic_[w] = 1;
        g.comp_[w] = cid;
        ++len;
        w = g.succ_[w];
      } while (w != u);
      g.components_.push_back({cid, len, 0});
    } else {
      cid = g.comp_[u];
    }
    for (std::uint32_t w : path) {
      if (g.comp_[w] == UINT32_MAX) g.comp_[w] = cid;
      state[w] = 2;
    }
  }
  for (std::uint64_t v = 0; v < n; ++v) g.components_[g.comp_[v]].size += 1;

  // Reversed edges, CSR layout.
  g.pred_off_.assign(n + 1, 0);
  for (std::uint64_t v = 0; v < n; ++v) g.pred_off_[g.succ_[v] + 1] += 1;
  for (std::uint64_t v = 0; v < n; ++v) g.pred_off_[v + 1] += g.pred_off_[v];
  g.pred_data_.assign(n, 0);
  std::vector<std::uint32_t> cursor(g.pred_off_.begin(), g.pred_off_.end() - 1);
  for (std::uint64_t v = 0; v < n; ++v) g.pred_data_[cursor[g.succ_[v]]++] = static_cast<std::uint32_t>(v);
  return g;
}

TreeStats tree_stats(const FunctionalGraph& g, std::uint32_t root) {
  if (root >= g.node_count() || !g.periodic(root))
    fail(Errc::invalid_root, "tree statistics need a periodic root");
  TreeStats ts;
  ts.root = root;
  ts.level_sizes = {1};
  std::deque<std::pair<std::uint32_t, unsigned>> queue{{root, 0}};
  while (!queue.empty()) {
    auto [v, level] = queue.front();
    queue.pop_front();
    auto [b, e] = g.preds(v);
    bool leaf = true;
    for (const std::uint32_t* it = b; it != e; ++it) {
      if (g.periodic(*it)) continue;  // the cycle predecessor is not a tree edge
      leaf = false;
      if (ts.level_sizes.size() <= level + 1) ts.level_sizes.push_back(0);
      ts.level_sizes[level + 1] += 1;
      queue.emplace_back(*it, level + 1);
    }
    if (leaf) ts.leaf_heights.push_back(level);
  }
  std::sort(ts.leaf_heights.begin(), ts.leaf_heights.end());
  ts.depth = static_cast<unsigned>(ts.level_sizes.size() - 1);
  return ts;
}

namespace {

// T^4 - 2T^2 + 1 - 4x(T^3 + T) over K, the fiber polynomial of the
// duplication map above a finite point x.
ExtPoly fiber_quartic(const ExtField& K, const ExtElem& x) {
  ExtElem m4x = K.neg(K.mul_base(x, 4 % K.p()));
  ExtPoly g(5, K.zero());
  g[0] = K.one();
  g[1] = m4x;
  g[2] = K.from_base(K.base().neg(2 % K.p()));
  g[3] = m4x;
  g[4] = K.one();
  return g;
}

ExtPoly squarefree_part(const ExtField& K, const ExtPoly& g) {
  ExtPoly d = extpoly::gcd(K, g, extpoly::derivative(K, g));
  if (extpoly::degree(K, d) <= 0) return extpoly::make_monic(K, g);
  return extpoly::make_monic(K, extpoly::div_exact(K, extpoly::make_monic(K, g), d));
}

}  // namespace

unsigned preimage_count_closure(const ExtField& K, const ProjPoint& x) {
  if (x.infinite) return 4;  // 0, the two square roots of -1, and infinity
  ExtPoly s = squarefree_part(K, fiber_quartic(K, x.v));
  return static_cast<unsigned>(extpoly::degree(K, s));
}

std::uint64_t preimage_count_in_field(const ExtField& K, const ProjPoint& x) {
  auto q = K.order_u64();
  if (!q) fail(Errc::scale_limit, "field too large");
  if (x.infinite) {
    // infinity itself, zero, and the square roots of -1 when present.
    return *q % 4 == 1 ? 4 : 2;
  }
  ExtPoly sqfree = squarefree_part(K, fiber_quartic(K, x.v));
  ExtPoly tq = extpoly::powmod(K, ExtPoly{K.zero(), K.one()}, BigInt(*q), sqfree);
  if (tq.size() < 2) tq.resize(2, K.zero());
  tq[1] = K.sub(tq[1], K.one());
  extpoly::trim(K, tq);
  ExtPoly r = extpoly::gcd(K, tq, sqfree);
  int deg = extpoly::degree(K, r);
  return deg < 0 ? 0 : static_cast<std::uint64_t>(deg);
}

std::string to_dot(const FunctionalGraph& g, DotLabels labels) {
  std::ostringstream out;
  out << "digraph duplication {\n";
  std::vector<std::string> names(g.node_count());
  if (labels == DotLabels::raw) {
    for (std::uint64_t v = 0; v < g.node_count(); ++v)
      names[v] = g.node_name(static_cast<std::uint32_t>(v));
  } else {
    const ExtField& K = g.field();
    ExtElem alpha = K.primitive();
    std::uint64_t q = *K.order_u64();
    std::vector<std::uint64_t> dlog(q, 0);
    ExtElem cur = K.one();
    for (std::uint64_t e = 0; e + 1 < q; ++e) {
      dlog[K.index_of(cur)] = e;
      cur = K.mul(cur, alpha);
    }
    names[0] = "inf";
    for (std::uint64_t v = 1; v < g.node_count(); ++v) {
      std::uint64_t idx = v - 1;
      names[v] = idx == 0 ? "0" : std::to_string(dlog[idx]);
    }
  }
  for (std::uint64_t v = 0; v < g.node_count(); ++v)
    out << "  n" << v << " [label=\"" << names[v] << "\"];\n";
  for (std::uint64_t v = 0; v < g.node_count(); ++v)
    out << "  n" << v << " -> n" << g.successor(static_cast<std::uint32_t>(v)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_json(const FunctionalGraph& g) {
  nlohmann::ordered_json j;
  j["q"] = *g.field().order_u64();
  std::vector<std::string> nodes(g.node_count());
  std::vector<std::uint32_t> succ(g.node_count());
  std::vector<std::uint32_t> comps(g.node_count());
  for (std::uint64_t v = 0; v < g.node_count(); ++v) {
    auto u = static_cast<std::uint32_t>(v);
    nodes[v] = g.node_name(u);
    succ[v] = g.successor(u);
    comps[v] = g.component_of(u);
  }
  j["nodes"] = nodes;
  j["successor"] = succ;
  j["components"] = comps;
  return j.dump();
}

std::string summary_table(const FunctionalGraph& g) {
  std::ostringstream out;
  out << "component  size  cycle_length  tree_depths\n";
  for (const auto& comp : g.components()) {
    std::string depths;
    for (std::uint64_t v = 0; v < g.node_count(); ++v) {
      auto u = static_cast<std::uint32_t>(v);
      if (g.component_of(u) == comp.id && g.periodic(u)) {
        if (!depths.empty()) depths += "+";
        depths += std::to_string(tree_stats(g, u).depth);
      }
    }
    out << comp.id << "  " << comp.size << "  " << comp.cycle_length << "  " << depths << "\n";
  }
  return out.str();
}

DepthReport verify_depth(std::uint64_t p, unsigned m, unsigned tower_lo, unsigned tower_hi,
                         std::uint64_t cap) {
  if (m == 0 || tower_lo == 0) fail(Errc::invalid_input, "m and the tower range must be positive");
  DepthReport report;
  report.p = p;
  report.m = m;
  report.supersingular = (p % 4 == 3);
  if (tower_hi < tower_lo) return report;

  auto tower_nodes = [&](unsigned i) {
    BigInt sz = 1;
    for (unsigned j = 0; j < m * (1u << i); ++j) sz *= p;
    return sz + 1;
  };
  std::uint64_t q_base = 1;
  for (unsigned j = 0; j < m; ++j) q_base *= p;

  std::unique_ptr<ExtField> cur_field, next_field;
  std::unique_ptr<FunctionalGraph> cur_graph, next_graph;
  unsigned next_tower = 0;

  auto build_tower = [&](unsigned i, std::unique_ptr<ExtField>& fld,
                         std::unique_ptr<FunctionalGraph>& gr) {
    fld = std::make_unique<ExtField>(p, m * (1u << i));
    gr = std::make_unique<FunctionalGraph>(
        build_graph(*fld, cap, std::thread::hardware_concurrency()));
  };

  for (unsigned i = tower_lo; i <= tower_hi; ++i) {
    if (tower_nodes(i) > cap) fail(Errc::scale_limit, "tower exceeds the enumeration cap");
    if (!cur_graph) build_tower(i, cur_field, cur_graph);
    const ExtField& K = *cur_field;
    const FunctionalGraph& G = *cur_graph;

    // Nodes of P^1(F_q) inside the tower: fixed points of the q-power map.
    std::vector<std::uint32_t> base_nodes{0};
    for (std::uint64_t v = 1; v < G.node_count(); ++v) {
      ExtElem e = K.elem_at(v - 1);
      if (K.pow_u64(e, q_base) == e) base_nodes.push_back(static_cast<std::uint32_t>(v));
    }
    if (base_nodes.size() != q_base + 1) {
      report.notes.push_back("subfield size mismatch in tower " + std::to_string(i));
      report.all_ok = false;
    }

    unsigned predicted = report.supersingular ? supersingular_valuation(p, m, i).e
                                              : (ordinary_valuation(p, m, i).e + 1) / 2;

    const bool part2_possible = tower_nodes(i + 1) <= cap;
    if (part2_possible && !next_graph) {
      build_tower(i + 1, next_field, next_graph);
      next_tower = i + 1;
    }
    if (!part2_possible)
      report.notes.push_back("tower " + std::to_string(i + 1) +
                             " exceeds the cap; leaf-children check skipped");

    // Children-of-leaves condition, evaluated once over the whole next tower:
    // every subfield tree node (rooted over the base line) without subfield
    // tree children must have only preimages of in-degree zero above it.
    std::optional<bool> part2;
    if (part2_possible) {
      const ExtField& K2 = *next_field;
      const FunctionalGraph& G2 = *next_graph;
      std::uint64_t q_i = 1;
      for (unsigned j = 0; j < m * (1u << i); ++j) q_i *= p;
      bool ok = true;
      std::vector<std::uint8_t> sub(G2.node_count(), 0), base2(G2.node_count(), 0);
      sub[0] = base2[0] = 1;
      for (std::uint64_t v = 1; v < G2.node_count(); ++v) {
        ExtElem e = K2.elem_at(v - 1);
        if (K2.pow_u64(e, q_i) == e) sub[v] = 1;
        if (K2.pow_u64(e, q_base) == e) base2[v] = 1;
      }
      for (std::uint64_t v = 0; v < G2.node_count() && ok; ++v) {
        auto u = static_cast<std::uint32_t>(v);
        if (G2.periodic(u) || !sub[u]) continue;
        std::uint32_t w = u;
        while (!G2.periodic(w)) w = G2.successor(w);
        if (!base2[w]) continue;
        auto [b, e] = G2.preds(u);
        bool subfield_leaf = true;
        for (const std::uint32_t* it = b; it != e; ++it)
          if (!G2.periodic(*it) && sub[*it]) subfield_leaf = false;
        if (subfield_leaf)
          for (const std::uint32_t* it = b; it != e; ++it) {
            if (G2.periodic(*it) || sub[*it]) continue;
            if (G2.in_degree(*it) != 0) ok = false;
          }
      }
      part2 = ok;
    }

    for (std::uint32_t root : base_nodes) {
      if (!G.periodic(root)) continue;
      TreeStats ts = tree_stats(G, root);
      DepthCheck check;
      check.tower = i;
      check.root = G.node_name(root);
      check.predicted = predicted;
      check.measured = ts.depth;
      check.depth_ok = ts.depth == predicted;
      if (!report.supersingular) {
        for (unsigned h : ts.leaf_heights)
          if (h + 1 < predicted) check.heights_ok = false;
      }
      check.part2_ok = part2;
      if (!check.depth_ok || !check.heights_ok || (check.part2_ok && !*check.part2_ok))
        report.all_ok = false;
      report.checks.push_back(std::move(check));
    }

    // Slide the window: the next tower (if built) becomes the current one.
    cur_field.reset();
    cur_graph.reset();
    if (next_graph && next_tower == i + 1) {
      cur_field = std::move(next_field);
      cur_graph = std::move(next_graph);
    }
    next_field.reset();
    next_graph.reset();
  }
  return report;
}

}  // namespace iterpoly

#include "multispace/graphphase.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>

namespace multispace::graphphase {
namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

EdgeKey canonical(const VertexId& a, const VertexId& b) {
  return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

// Index lookup for the sorted vertex list.
std::map<VertexId, std::size_t> index_of(const GraphPhase& g) {
  std::map<VertexId, std::size_t> idx;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) idx[g.vertices[i]] = i;
  return idx;
}

BoostGraph to_boost(const std::vector<EdgeKey>& edges,
                    const std::map<VertexId, std::size_t>& idx, std::size_t n_vertices) {
  BoostGraph bg(n_vertices);
  int edge_id = 0;
  for (const EdgeKey& e : edges) {
    boost::add_edge(idx.at(e.first), idx.at(e.second), edge_id++, bg);
  }
  return bg;
}

bool boost_is_planar(const std::vector<EdgeKey>& edges,
                     const std::map<VertexId, std::size_t>& idx, std::size_t n_vertices) {
  BoostGraph bg = to_boost(edges, idx, n_vertices);
  return boost::boyer_myrvold_planarity_test(bg);
}

// Union-find over vertex indices, used for component bookkeeping.
struct DisjointSet {
  std::vector<std::size_t> parent;
  explicit DisjointSet(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Returns false when x and y were already connected.
  bool unite(std::size_t x, std::size_t y) {
    const std::size_t rx = find(x), ry = find(y);
    if (rx == ry) return false;
    parent[rx] = ry;
    return true;
  }
};

}  // namespace

GraphPhase build_graph_phase(const std::vector<Brane>& branes,
                             const std::vector<Interaction>& interactions) {
  GraphPhase g;
  for (const Brane& b : branes) {
    require(g.omega.find(b.id) == g.omega.end(), "build_graph_phase: duplicate brane id");
    g.omega[b.id] = b.omega;
  }
  if (!branes.empty()) {
    g.p_dim = static_cast<int>(branes.front().omega.size());
    for (const Brane& b : branes) {
      require(static_cast<int>(b.omega.size()) == g.p_dim,
              "build_graph_phase: all vibration labels must share one length");
    }
  }
  for (const auto& [id, label] : g.omega) {
    (void)label;
    g.vertices.push_back(id);
  }

  for (const Interaction& it : interactions) {
    require(it.a != it.b, "build_graph_phase: self-interactions are not allowed");
    require(g.omega.count(it.a) == 1 && g.omega.count(it.b) == 1,
            "build_graph_phase: interaction endpoint names no declared brane");
    const EdgeKey key = canonical(it.a, it.b);
    require(g.lambda.find(key) == g.lambda.end(),
            "build_graph_phase: duplicate interaction for the same pair");
    g.lambda[key] = it.lambda;
  }
  if (!interactions.empty()) {
    g.q_dim = static_cast<int>(interactions.front().lambda.size());
    for (const Interaction& it : interactions) {
      require(static_cast<int>(it.lambda.size()) == g.q_dim,
              "build_graph_phase: all force labels must share one length");
    }
  }
  for (const auto& [key, label] : g.lambda) {
    (void)label;
    g.edges.push_back(key);
  }
  return g;
}

EmbeddingVerdict is_embeddable(const GraphPhase& g, int n) {
  require(n >= 1, "is_embeddable: target dimension must be >= 1");

  EmbeddingVerdict verdict;
  if (n >= 3) {
    // Every finite graph embeds in 3-space; no certificate is produced.
    verdict.embeddable = true;
    return verdict;
  }

  const auto idx = index_of(g);

  if (n == 1) {
    // Disjoint union of paths: every degree <= 2 and no cycles.
    std::map<VertexId, int> degree;
    for (const EdgeKey& e : g.edges) {
      ++degree[e.first];
      ++degree[e.second];
    }
    bool ok = true;
    for (const auto& [v, d] : degree) {
      (void)v;
      if (d > 2) ok = false;
    }
    DisjointSet ds(g.vertices.size());
    for (const EdgeKey& e : g.edges) {
      if (!ds.unite(idx.at(e.first), idx.at(e.second))) ok = false;  // cycle
    }
    verdict.embeddable = ok;
    return verdict;
  }

  // n == 2: planarity with a certificate either way.
  BoostGraph bg = to_boost(g.edges, idx, g.vertices.size());
  std::vector<std::vector<BoostEdge>> embedding(g.vertices.size());
  std::vector<BoostEdge> kuratowski;
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = embedding.data(),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

  if (planar) {
    RotationSystem rs;
    for (std::size_t vi = 0; vi < g.vertices.size(); ++vi) {
      std::vector<VertexId>& around = rs.order[g.vertices[vi]];
      for (const BoostEdge& e : embedding[vi]) {
        const std::size_t s = boost::source(e, bg), t = boost::target(e, bg);
        around.push_back(g.vertices[s == vi ? t : s]);
      }
    }
    verdict.embeddable = true;
    verdict.witness = std::move(rs);
    return verdict;
  }

  // Shrink the reported non-planar subgraph until every edge is critical
  // (single pass in lexicographic order: once an edge survives, all later
  // deletions only shrink the set, and subgraphs of planar graphs stay
  // planar, so survivors remain critical). The result, minus isolated
  // vertices, is a subdivided K5 or K3,3.
  std::set<EdgeKey> sub;
  for (const BoostEdge& e : kuratowski) {
    sub.insert(canonical(g.vertices[boost::source(e, bg)], g.vertices[boost::target(e, bg)]));
  }
  for (const EdgeKey& e : std::vector<EdgeKey>(sub.begin(), sub.end())) {
    std::set<EdgeKey> trial = sub;
    trial.erase(e);
    if (!boost_is_planar({trial.begin(), trial.end()}, idx, g.vertices.size())) {
      sub = std::move(trial);
    }
  }

  Obstruction obs;
  obs.edges.assign(sub.begin(), sub.end());
  std::map<VertexId, int> degree;
  for (const EdgeKey& e : obs.edges) {
    ++degree[e.first];
    ++degree[e.second];
  }
  int deg3 = 0, deg4 = 0;
  for (const auto& [v, d] : degree) {
    (void)v;
    if (d == 3) ++deg3;
    if (d == 4) ++deg4;
  }
  // A minimal non-planar subgraph is a subdivision of K5 (five degree-4
  // branch vertices) or of K3,3 (six degree-3 branch vertices).
  if (deg4 == 5 && deg3 == 0) {
    obs.kind = ObstructionKind::k5;
  } else if (deg3 == 6 && deg4 == 0) {
    obs.kind = ObstructionKind::k33;
  } else {
    throw std::logic_error("is_embeddable: minimized obstruction has an impossible shape");
  }
  verdict.embeddable = false;
  verdict.obstruction = std::move(obs);
  return verdict;
}

int count_faces(const GraphPhase& g, const RotationSystem& rs) {
  const auto idx = index_of(g);
  // Validate the rotation system: per vertex, the neighbor list must be a
  // permutation of the adjacency.
  std::map<VertexId, std::multiset<VertexId>> adjacency;
  for (const VertexId& v : g.vertices) adjacency[v];
  for (const EdgeKey& e : g.edges) {
    adjacency[e.first].insert(e.second);
    adjacency[e.second].insert(e.first);
  }
  for (const auto& [v, neighbors] : adjacency) {
    const auto it = rs.order.find(v);
    require(it != rs.order.end(), "count_faces: rotation system misses a vertex");
    std::multiset<VertexId> listed(it->second.begin(), it->second.end());
    require(listed == neighbors,
            "count_faces: rotation at a vertex is not a permutation of its neighbors");
  }

  // Trace faces: directed edge (u -> v) continues as (v -> w) where w follows
  // u in the cyclic order around v. Orbits of this successor map are faces.
  std::set<std::pair<VertexId, VertexId>> unvisited;
  for (const EdgeKey& e : g.edges) {
    unvisited.insert({e.first, e.second});
    unvisited.insert({e.second, e.first});
  }
  int orbits = 0;
  while (!unvisited.empty()) {
    auto [u, v] = *unvisited.begin();
    ++orbits;
    while (unvisited.erase({u, v}) == 1) {
      const std::vector<VertexId>& around = rs.order.at(v);
      const auto pos = std::find(around.begin(), around.end(), u);
      const std::size_t i = static_cast<std::size_t>(pos - around.begin());
      const VertexId w = around[(i + 1) % around.size()];
      u = v;
      v = w;
    }
  }

  // One face per edgeless component.
  DisjointSet ds(g.vertices.size());
  for (const EdgeKey& e : g.edges) ds.unite(idx.at(e.first), idx.at(e.second));
  std::set<std::size_t> with_edges;
  for (const EdgeKey& e : g.edges) with_edges.insert(ds.find(idx.at(e.first)));
  std::set<std::size_t> all_roots;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) all_roots.insert(ds.find(i));
  const int edgeless =
      static_cast<int>(all_roots.size()) - static_cast<int>(with_edges.size());
  return orbits + edgeless;
}

bool euler_check(const GraphPhase& g, const RotationSystem& rs) {
  const auto idx = index_of(g);
  DisjointSet ds(g.vertices.size());
  for (const EdgeKey& e : g.edges) ds.unite(idx.at(e.first), idx.at(e.second));

  // Per-component vertex and edge counts.
  std::map<std::size_t, int> v_count, e_count, f_count;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) ++v_count[ds.find(i)];
  for (const EdgeKey& e : g.edges) ++e_count[ds.find(idx.at(e.first))];

  // Count face orbits per component (same walk as count_faces).
  std::set<std::pair<VertexId, VertexId>> unvisited;
  for (const EdgeKey& e : g.edges) {
    unvisited.insert({e.first, e.second});
    unvisited.insert({e.second, e.first});
  }
  while (!unvisited.empty()) {
    auto [u, v] = *unvisited.begin();
    ++f_count[ds.find(idx.at(u))];
    while (unvisited.erase({u, v}) == 1) {
      const std::vector<VertexId>& around = rs.order.at(v);
      const auto pos = std::find(around.begin(), around.end(), u);
      require(pos != around.end(), "euler_check: rotation system misses an adjacency");
      const std::size_t i = static_cast<std::size_t>(pos - around.begin());
      const VertexId w = around[(i + 1) % around.size()];
      u = v;
      v = w;
    }
  }

  for (const auto& [root, vc] : v_count) {
    const int ec = e_count.count(root) ? e_count.at(root) : 0;
    const int fc = f_count.count(root) ? f_count.at(root) : 1;  // edgeless: one face
    if (vc - ec + fc != 2) return false;
  }
  return true;
}

GraphPhase transform_phase(const GraphPhase& g, const LabelTransform& tau, int n) {
  require(static_cast<bool>(tau.tau_omega) && static_cast<bool>(tau.tau_lambda),
          "transform_phase: both label maps must be callable");
  EmbeddingVerdict verdict = is_embeddable(g, n);
  if (!verdict.embeddable) {
    std::string msg = "transform_phase: phase does not embed in dimension " + std::to_string(n);
    if (verdict.obstruction) {
      msg += verdict.obstruction->kind == ObstructionKind::k5
                 ? " (contains a subdivided K5)"
                 : " (contains a subdivided K3,3)";
    }
    throw NotEmbeddable(msg, std::move(verdict));
  }

  GraphPhase out;
  out.vertices = g.vertices;
  out.edges = g.edges;
  out.p_dim = g.p_dim;
  out.q_dim = g.q_dim;
  bool first = true;
  for (const VertexId& v : g.vertices) {
    Label mapped = tau.tau_omega(g.omega.at(v));
    if (first) {
      out.p_dim = static_cast<int>(mapped.size());
      first = false;
    }
    require(static_cast<int>(mapped.size()) == out.p_dim,
            "transform_phase: vibration map produced ragged label lengths");
    out.omega[v] = std::move(mapped);
  }
  first = true;
  for (const EdgeKey& e : g.edges) {
    Label mapped = tau.tau_lambda(g.lambda.at(e));
    if (first) {
      out.q_dim = static_cast<int>(mapped.size());
      first = false;
    }
    require(static_cast<int>(mapped.size()) == out.q_dim,
            "transform_phase: force map produced ragged label lengths");
    out.lambda[e] = std::move(mapped);
  }
  return out;
}

bool round_trip_check(const GraphPhase& g, const LabelTransform& tau,
                      const LabelTransform& tau_inverse, int n) {
  const GraphPhase back = transform_phase(transform_phase(g, tau, n), tau_inverse, n);
  const double tol = 1e-9;
  if (back.p_dim != g.p_dim || back.q_dim != g.q_dim) return false;
  for (const VertexId& v : g.vertices) {
    const Label& a = g.omega.at(v);
    const Label& b = back.omega.at(v);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!(std::fabs(a[i] - b[i]) <= tol)) return false;
    }
  }
  for (const EdgeKey& e : g.edges) {
    const Label& a = g.lambda.at(e);
    const Label& b = back.lambda.at(e);
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!(std::fabs(a[i] - b[i]) <= tol)) return false;
    }
  }
  return true;
}

}  // namespace multispace::graphphase

#include "support/planarity_oracle.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>

namespace testsupport {
namespace {

// Backtracking search for a prescribed set of internally-disjoint paths.
// Branch vertices are fixed; path interiors may only use "spare" vertices
// (non-branch vertices), each consumed by at most one path. Internally
// disjoint paths with distinct endpoint pairs are automatically edge
// disjoint in a simple graph, so no edge bookkeeping is needed.
struct SubdivisionSearch {
  int n = 0;
  std::array<std::uint32_t, 16> adj{};

  bool connected(int a, int b) const { return (adj[static_cast<std::size_t>(a)] >> b) & 1u; }

  // Try to realize pairs[idx..] with the given pool of unused spare vertices.
  bool place_paths(const std::vector<std::pair<int, int>>& pairs, std::size_t idx,
                   std::uint32_t spare) const {
    if (idx == pairs.size()) return true;
    return extend(pairs[idx].first, pairs[idx].second, spare, pairs, idx);
  }

  // Grow a path from `cur` toward `target` through spare vertices only.
  bool extend(int cur, int target, std::uint32_t spare,
              const std::vector<std::pair<int, int>>& pairs, std::size_t idx) const {
    if (connected(cur, target) && place_paths(pairs, idx + 1, spare)) return true;
    for (int w = 0; w < n; ++w) {
      if (!((spare >> w) & 1u)) continue;
      if (!connected(cur, w)) continue;
      if (extend(w, target, spare & ~(1u << w), pairs, idx)) return true;
    }
    return false;
  }

  bool has_k5_subdivision() const {
    if (n < 5) return false;
    std::array<int, 5> b{};
    for (b[0] = 0; b[0] < n; ++b[0])
      for (b[1] = b[0] + 1; b[1] < n; ++b[1])
        for (b[2] = b[1] + 1; b[2] < n; ++b[2])
          for (b[3] = b[2] + 1; b[3] < n; ++b[3])
            for (b[4] = b[3] + 1; b[4] < n; ++b[4]) {
              std::uint32_t spare = (1u << n) - 1u;
              std::vector<std::pair<int, int>> pairs;
              for (int i = 0; i < 5; ++i) {
                spare &= ~(1u << b[static_cast<std::size_t>(i)]);
                for (int j = i + 1; j < 5; ++j) {
                  pairs.emplace_back(b[static_cast<std::size_t>(i)],
                                     b[static_cast<std::size_t>(j)]);
                }
              }
              if (place_paths(pairs, 0, spare)) return true;
            }
    return false;
  }

  bool has_k33_subdivision() const {
    if (n < 6) return false;
    std::array<int, 6> b{};
    for (b[0] = 0; b[0] < n; ++b[0])
      for (b[1] = b[0] + 1; b[1] < n; ++b[1])
        for (b[2] = b[1] + 1; b[2] < n; ++b[2])
          for (b[3] = b[2] + 1; b[3] < n; ++b[3])
            for (b[4] = b[3] + 1; b[4] < n; ++b[4])
              for (b[5] = b[4] + 1; b[5] < n; ++b[5]) {
                std::uint32_t spare = (1u << n) - 1u;
                for (int v : b) spare &= ~(1u << v);
                // Enumerate each bipartition once by keeping b[0] on the
                // left side; choose its two companions.
                for (int i = 1; i < 6; ++i)
                  for (int j = i + 1; j < 6; ++j) {
                    std::array<int, 3> left{b[0], b[static_cast<std::size_t>(i)],
                                            b[static_cast<std::size_t>(j)]};
                    std::array<int, 3> right{};
                    int r = 0;
                    for (int k = 1; k < 6; ++k) {
                      if (k != i && k != j) right[static_cast<std::size_t>(r++)] = b[static_cast<std::size_t>(k)];
                    }
                    std::vector<std::pair<int, int>> pairs;
                    for (int l : left)
                      for (int rr : right) pairs.emplace_back(l, rr);
                    if (place_paths(pairs, 0, spare)) return true;
                  }
              }
    return false;
  }
};

}  // namespace

bool brute_force_planar(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1 || n > 16) throw std::invalid_argument("brute_force_planar: n out of range");
  SubdivisionSearch s;
  s.n = n;
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
      throw std::invalid_argument("brute_force_planar: bad edge");
    }
    s.adj[static_cast<std::size_t>(a)] |= 1u << b;
    s.adj[static_cast<std::size_t>(b)] |= 1u << a;
  }
  // A subdivided K5 needs 10 edges and a subdivided K3,3 needs 9, so
  // sparser graphs are planar outright.
  if (edges.size() < 9) return true;
  return !s.has_k5_subdivision() && !s.has_k33_subdivision();
}

}  // namespace testsupport

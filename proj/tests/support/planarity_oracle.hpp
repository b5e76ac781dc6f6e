#pragma once

#include <utility>
#include <vector>

namespace testsupport {

// Decides planarity of a simple undirected graph by exhaustively searching
// for a subdivided K5 or K3,3 (Kuratowski's criterion), with no shared code
// or theory with the library's embedding routine. Vertices are 0..n-1.
// Intended for small graphs (n <= 10); cost grows combinatorially.
bool brute_force_planar(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace testsupport

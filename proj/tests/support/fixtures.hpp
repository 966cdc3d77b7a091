#pragma once
// Small complexes and coordinates shared by the unit and acceptance tests.

#include <algorithm>
#include <string>

#include "surfenum/geometry.hpp"
#include "surfenum/text_format.hpp"

namespace surfenum::test {

inline TriangleSet tetrahedron() { return parse_complex("1,2,3;1,2,4;1,3,4;2,3,4"); }

inline TriangleSet five_vertex_sphere() { return parse_complex("1,2,3;1,2,4;1,3,4;2,3,5;2,4,5;3,4,5"); }

// 7-vertex torus with Császár's coordinates, triangle list as printed with its figure.
inline TriangleSet mobius_torus() {
  return parse_complex("1,2,3;1,2,4;1,3,7;1,4,5;1,5,6;1,6,7;2,3,6;2,4,7;2,5,6;2,5,7;3,4,5;3,4,6;3,5,7;4,6,7");
}

inline CoordinateAssignment csaszar_coordinates() {
  return {{{3, -3, 0}, {-3, 3, 0}, {-3, -3, 1}, {3, 3, 1}, {-1, -2, 3}, {1, 2, 3}, {0, 0, 15}}};
}

// Half-icosahedron: the 6-vertex projective plane.
inline TriangleSet rp2_6() { return parse_complex("1,2,4;1,2,6;1,3,5;1,3,6;1,4,5;2,3,4;2,3,5;2,5,6;3,4,6;4,5,6"); }

// Two tetrahedron boundaries glued at vertex 1; its link is two disjoint triangles.
inline TriangleSet pinched_tetrahedra() {
  return parse_complex("1,2,3;1,2,4;1,3,4;1,5,6;1,5,7;1,6,7;2,3,4;5,6,7");
}

inline TriangleSet disjoint_tetrahedra() {
  return parse_complex("1,2,3;1,2,4;1,3,4;2,3,4;5,6,7;5,6,8;5,7,8;6,7,8");
}

inline TriangleSet octahedron() {
  return parse_complex("1,2,3;1,2,4;1,3,5;1,4,5;2,3,6;2,4,6;3,5,6;4,5,6");
}

}  // namespace surfenum::test

#include <map>
#include <random>
#include <vector>

#include "surfenum/enumerator.hpp"

namespace surfenum::test {

/// All surfaces on n vertices, one per class, memoised for the test run.
inline const std::vector<TriangleSet>& surfaces(int n) {
  static std::map<int, std::vector<TriangleSet>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    EnumerationConfig config;
    config.n = n;
    it = cache.emplace(n, enumerate(config)).first;
  }
  return it->second;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n + 1);
  for (int v = 0; v <= n; ++v) perm[v] = v;
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  return perm;
}

}  // namespace surfenum::test

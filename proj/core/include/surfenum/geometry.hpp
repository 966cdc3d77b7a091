#pragma once

// Exact orientation predicates and the embedding test for triangulated
// surfaces with integer vertex coordinates.

#include <cstdint>
#include <vector>

#include "surfenum/complex.hpp"

namespace surfenum {

struct Point3 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;
  friend bool operator==(const Point3&, const Point3&) = default;
};

/// points[v - 1] is the position of vertex v.
struct CoordinateAssignment {
  std::vector<Point3> points;
  int n() const { return static_cast<int>(points.size()); }
  const Point3& operator[](VertexId v) const { return points[static_cast<std::size_t>(v) - 1]; }
  Point3& operator[](VertexId v) { return points[static_cast<std::size_t>(v) - 1]; }
  friend bool operator==(const CoordinateAssignment&, const CoordinateAssignment&) = default;
};

/// Sign of det(q - p, r - p, s - p), exact for all 64-bit inputs.
int orient3d(const Point3& p, const Point3& q, const Point3& r, const Point3& s);

enum class Separation { Disjoint, Intersecting, Degenerate };

/// Closed triangle abc against closed segment pq, by orientation signs only.
/// Any zero sign the test depends on yields Degenerate.
Separation triangle_segment_disjoint(const Point3& a, const Point3& b, const Point3& c, const Point3& p,
                                     const Point3& q);

/// Precomputed (triangle, vertex-disjoint edge) pairs of one complex, reusable
/// across many coordinate assignments.
class EmbeddingChecker {
 public:
  explicit EmbeddingChecker(const TriangleSet& c);
  bool operator()(const CoordinateAssignment& coords) const;
  std::size_t pair_count() const { return pairs_.size(); }

 private:
  struct Pair {
    std::uint8_t a, b, c, p, q;
  };
  int n_;
  std::vector<Pair> pairs_;
};

/// Every triangle is disjoint from every vertex-disjoint edge, no test is
/// degenerate, and no two vertices coincide.
bool is_embedding(const TriangleSet& c, const CoordinateAssignment& coords);

std::int64_t max_norm(const CoordinateAssignment& coords);

}  // namespace surfenum

#pragma once

// Abstract 2-dimensional simplicial complexes on the ground set {1..n}.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace surfenum {

inline constexpr int kMaxVertices = 64;

/// Vertex labels are 1-based; 0 never names a vertex.
using VertexId = int;

struct Edge {
  std::uint8_t u = 0;
  std::uint8_t v = 0;

  Edge() = default;
  /// Accepts the endpoints in either order.
  Edge(VertexId a, VertexId b);

  auto operator<=>(const Edge&) const = default;
};

struct Triangle {
  std::uint8_t a = 0;
  std::uint8_t b = 0;
  std::uint8_t c = 0;

  Triangle() = default;
  /// Sorts the three labels; throws std::invalid_argument on repeats or labels < 1.
  Triangle(VertexId x, VertexId y, VertexId z);

  bool contains(VertexId v) const { return a == v || b == v || c == v; }
  std::array<VertexId, 3> vertices() const { return {a, b, c}; }
  std::array<Edge, 3> edges() const;

  auto operator<=>(const Triangle&) const = default;
};

std::size_t edge_count(int n);

/// Dense index of {u,v} in the order 12, 13, ..., 1n, 23, ..., (n-1)n.
/// Requires 1 <= u < v <= n; throws std::invalid_argument otherwise.
int edge_index(VertexId u, VertexId v, int n);

/// Inverse of edge_index.
Edge edge_from_index(int index, int n);

/// A lexicographically sorted, duplicate-free list of triangles on {1..n}.
/// Partial complexes are allowed; surface checks live in verify_surface.
class TriangleSet {
 public:
  TriangleSet() = default;
  /// Sorts `triangles`; throws std::invalid_argument on duplicates or labels > n.
  TriangleSet(int n, std::vector<Triangle> triangles);

  int n() const { return n_; }
  std::span<const Triangle> triangles() const { return triangles_; }
  std::size_t size() const { return triangles_.size(); }
  bool empty() const { return triangles_.empty(); }
  bool contains(const Triangle& t) const;

  /// Applies `perm` (perm[v] is the new label of v, index 0 unused) and re-sorts.
  TriangleSet relabeled(std::span<const VertexId> perm) const;

  friend bool operator==(const TriangleSet&, const TriangleSet&) = default;
  /// Lexicographic order on the sorted triangle lists; n breaks ties.
  friend std::strong_ordering operator<=>(const TriangleSet& x, const TriangleSet& y);

 private:
  int n_ = 0;
  std::vector<Triangle> triangles_;
};

/// Per-edge multiplicities of a triangle collection (the row-sum vector of the
/// triangle-edge incidence matrix).
class EdgeSumVector {
 public:
  explicit EdgeSumVector(int n);

  int n() const { return n_; }
  void add(const Triangle& t);
  void remove(const Triangle& t);
  int count(VertexId u, VertexId v) const { return counts_[edge_index(u, v, n_)]; }
  std::span<const std::uint8_t> counts() const { return counts_; }
  /// Set once any entry exceeds 2; cleared when it drops back.
  bool overflow() const { return overflowing_ > 0; }

 private:
  int n_;
  int overflowing_ = 0;
  std::vector<std::uint8_t> counts_;
};

EdgeSumVector edge_sums(const TriangleSet& c);

struct VertexLink {
  VertexId center = 0;
  std::vector<Edge> edges;
};

VertexLink vertex_link(const TriangleSet& c, VertexId v);
bool link_is_single_circle(const VertexLink& link);

/// Every entry is 0 or 2 and at least one entry is 2.
bool is_closed(const EdgeSumVector& sums);

/// Triangles connected through shared edges, and every vertex 1..n used.
bool is_connected(const TriangleSet& c);

bool verify_surface(const TriangleSet& c);

struct FVector {
  int f0 = 0;
  int f1 = 0;
  int f2 = 0;
  auto operator<=>(const FVector&) const = default;
};

FVector f_vector(const TriangleSet& c);
int euler_characteristic(const TriangleSet& c);

/// Number of distinct neighbours of each vertex; index 0 unused.
std::vector<int> vertex_degrees(const TriangleSet& c);

}  // namespace surfenum

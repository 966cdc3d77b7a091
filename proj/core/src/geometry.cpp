#include "surfenum/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace surfenum {

namespace {

__extension__ using Int128 = __int128;

template <class T>
int det_sign(T ax, T ay, T az, T bx, T by, T bz, T cx, T cy, T cz) {
  const T d = ax * (by * cz - bz * cy) - ay * (bx * cz - bz * cx) + az * (bx * cy - by * cx);
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

bool fits(const Point3& p, std::int64_t bound) {
  return std::llabs(p.x) < bound && std::llabs(p.y) < bound && std::llabs(p.z) < bound;
}

}  // namespace

int orient3d(const Point3& p, const Point3& q, const Point3& r, const Point3& s) {
  // Differences of |x| < 2^19 stay below 2^20; the determinant below 6 * 2^60.
  constexpr std::int64_t kSmall = std::int64_t{1} << 19;
  constexpr std::int64_t kMedium = std::int64_t{1} << 40;
  if (fits(p, kSmall) && fits(q, kSmall) && fits(r, kSmall) && fits(s, kSmall)) {
    return det_sign<std::int64_t>(q.x - p.x, q.y - p.y, q.z - p.z, r.x - p.x, r.y - p.y, r.z - p.z, s.x - p.x,
                                  s.y - p.y, s.z - p.z);
  }
  if (fits(p, kMedium) && fits(q, kMedium) && fits(r, kMedium) && fits(s, kMedium)) {
    auto d = [](std::int64_t u, std::int64_t v) { return static_cast<Int128>(u) - v; };
    return det_sign<Int128>(d(q.x, p.x), d(q.y, p.y), d(q.z, p.z), d(r.x, p.x), d(r.y, p.y), d(r.z, p.z),
                            d(s.x, p.x), d(s.y, p.y), d(s.z, p.z));
  }
  using boost::multiprecision::cpp_int;
  auto d = [](std::int64_t u, std::int64_t v) { return cpp_int(u) - cpp_int(v); };
  return det_sign<cpp_int>(d(q.x, p.x), d(q.y, p.y), d(q.z, p.z), d(r.x, p.x), d(r.y, p.y), d(r.z, p.z),
                           d(s.x, p.x), d(s.y, p.y), d(s.z, p.z));
}

Separation triangle_segment_disjoint(const Point3& a, const Point3& b, const Point3& c, const Point3& p,
                                     const Point3& q) {
  const int sp = orient3d(a, b, c, p);
  const int sq = orient3d(a, b, c, q);
  if (sp == 0 || sq == 0) return Separation::Degenerate;
  if (sp == sq) return Separation::Disjoint;
  // The segment crosses the plane; it hits the triangle iff pq sees the three
  // edges with one common orientation.
  const int e1 = orient3d(p, q, a, b);
  const int e2 = orient3d(p, q, b, c);
  const int e3 = orient3d(p, q, c, a);
  if (e1 == 0 || e2 == 0 || e3 == 0) return Separation::Degenerate;
  return e1 == e2 && e2 == e3 ? Separation::Intersecting : Separation::Disjoint;
}

EmbeddingChecker::EmbeddingChecker(const TriangleSet& c) : n_(c.n()) {
  std::vector<Edge> edges;
  const EdgeSumVector sums = edge_sums(c);
  const auto counts = sums.counts();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) edges.push_back(edge_from_index(static_cast<int>(i), c.n()));
  }
  for (const Triangle& t : c.triangles()) {
    for (const Edge& e : edges) {
      if (t.contains(e.u) || t.contains(e.v)) continue;
      pairs_.push_back({t.a, t.b, t.c, e.u, e.v});
    }
  }
}

bool EmbeddingChecker::operator()(const CoordinateAssignment& coords) const {
  if (coords.n() != n_) throw std::invalid_argument("coordinate count does not match the complex");
  for (int u = 1; u <= n_; ++u) {
    for (int v = u + 1; v <= n_; ++v) {
      if (coords[u] == coords[v]) return false;
    }
  }
  for (const Pair& pr : pairs_) {
    if (triangle_segment_disjoint(coords[pr.a], coords[pr.b], coords[pr.c], coords[pr.p], coords[pr.q]) !=
        Separation::Disjoint) {
      return false;
    }
  }
  return true;
}

bool is_embedding(const TriangleSet& c, const CoordinateAssignment& coords) {
  return EmbeddingChecker(c)(coords);
}

std::int64_t max_norm(const CoordinateAssignment& coords) {
  std::int64_t m = 0;
  for (const Point3& p : coords.points) m = std::max<std::int64_t>({m, std::llabs(p.x), std::llabs(p.y), std::llabs(p.z)});
  return m;
}

}  // namespace surfenum

#include "surfenum/complex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace surfenum {

namespace {

void check_label(VertexId v) {
  if (v < 1 || v > kMaxVertices) {
    throw std::invalid_argument("vertex label out of range: " + std::to_string(v));
  }
}

}  // namespace

Edge::Edge(VertexId a, VertexId b) {
  check_label(a);
  check_label(b);
  if (a == b) throw std::invalid_argument("edge with repeated vertex");
  u = static_cast<std::uint8_t>(std::min(a, b));
  v = static_cast<std::uint8_t>(std::max(a, b));
}

Triangle::Triangle(VertexId x, VertexId y, VertexId z) {
  check_label(x);
  check_label(y);
  check_label(z);
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
  if (x == y || y == z) throw std::invalid_argument("triangle with repeated vertex");
  a = static_cast<std::uint8_t>(x);
  b = static_cast<std::uint8_t>(y);
  c = static_cast<std::uint8_t>(z);
}

std::array<Edge, 3> Triangle::edges() const {
  return {Edge(a, b), Edge(a, c), Edge(b, c)};
}

std::size_t edge_count(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

int edge_index(VertexId u, VertexId v, int n) {
  if (n < 2 || n > kMaxVertices || u < 1 || u >= v || v > n) {
    throw std::invalid_argument("edge_index requires 1 <= u < v <= n <= 64");
  }
  return (u - 1) * n - (u - 1) * u / 2 + (v - u - 1);
}

Edge edge_from_index(int index, int n) {
  if (index < 0 || static_cast<std::size_t>(index) >= edge_count(n)) {
    throw std::invalid_argument("edge index out of range");
  }
  int u = 1;
  while (index >= n - u) {
    index -= n - u;
    ++u;
  }
  return Edge(u, u + 1 + index);
}

TriangleSet::TriangleSet(int n, std::vector<Triangle> triangles)
    : n_(n), triangles_(std::move(triangles)) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("ground set size out of range");
  std::sort(triangles_.begin(), triangles_.end());
  if (std::adjacent_find(triangles_.begin(), triangles_.end()) != triangles_.end()) {
    throw std::invalid_argument("duplicate triangle");
  }
  for (const Triangle& t : triangles_) {
    if (t.c > n) throw std::invalid_argument("triangle uses a vertex larger than n");
  }
}

bool TriangleSet::contains(const Triangle& t) const {
  return std::binary_search(triangles_.begin(), triangles_.end(), t);
}

TriangleSet TriangleSet::relabeled(std::span<const VertexId> perm) const {
  std::vector<Triangle> out;
  out.reserve(triangles_.size());
  for (const Triangle& t : triangles_) out.emplace_back(perm[t.a], perm[t.b], perm[t.c]);
  return TriangleSet(n_, std::move(out));
}

std::strong_ordering operator<=>(const TriangleSet& x, const TriangleSet& y) {
  auto cmp = std::lexicographical_compare_three_way(x.triangles_.begin(), x.triangles_.end(),
                                                    y.triangles_.begin(), y.triangles_.end());
  if (cmp != 0) return cmp;
  return x.n_ <=> y.n_;
}

EdgeSumVector::EdgeSumVector(int n) : n_(n), counts_(edge_count(n), 0) {}

void EdgeSumVector::add(const Triangle& t) {
  for (const Edge& e : t.edges()) {
    auto& c = counts_[edge_index(e.u, e.v, n_)];
    ++c;
    if (c == 3) ++overflowing_;
  }
}

void EdgeSumVector::remove(const Triangle& t) {
  for (const Edge& e : t.edges()) {
    auto& c = counts_[edge_index(e.u, e.v, n_)];
    if (c == 0) throw std::logic_error("removing a triangle that was never added");
    if (c == 3) --overflowing_;
    --c;
  }
}

EdgeSumVector edge_sums(const TriangleSet& c) {
  EdgeSumVector s(c.n());
  for (const Triangle& t : c.triangles()) s.add(t);
  return s;
}

VertexLink vertex_link(const TriangleSet& c, VertexId v) {
  VertexLink link{v, {}};
  for (const Triangle& t : c.triangles()) {
    if (t.a == v) {
      link.edges.emplace_back(t.b, t.c);
    } else if (t.b == v) {
      link.edges.emplace_back(t.a, t.c);
    } else if (t.c == v) {
      link.edges.emplace_back(t.a, t.b);
    }
  }
  return link;
}

bool link_is_single_circle(const VertexLink& link) {
  const auto& edges = link.edges;
  if (edges.size() < 3) return false;
  std::array<int, kMaxVertices + 1> degree{};
  std::array<std::array<int, 2>, kMaxVertices + 1> adj{};
  for (const Edge& e : edges) {
    for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (degree[x] == 2) return false;
      adj[x][degree[x]++] = y;
    }
  }
  int vertices = 0;
  for (int d : degree) {
    if (d == 1) return false;
    if (d == 2) ++vertices;
  }
  // Walk the cycle through the first edge; it must visit every link vertex.
  const int start = edges.front().u;
  int prev = start;
  int cur = adj[start][0];
  int length = 1;
  while (cur != start) {
    const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
    ++length;
  }
  return length == vertices && static_cast<std::size_t>(length) == edges.size();
}

bool is_closed(const EdgeSumVector& sums) {
  bool any_two = false;
  for (auto c : sums.counts()) {
    if (c == 2) {
      any_two = true;
    } else if (c != 0) {
      return false;
    }
  }
  return any_two;
}

bool is_connected(const TriangleSet& c) {
  if (c.empty()) return false;
  const int n = c.n();
  std::vector<bool> used(n + 1, false);
  for (const Triangle& t : c.triangles()) {
    used[t.a] = used[t.b] = used[t.c] = true;
  }
  for (int v = 1; v <= n; ++v) {
    if (!used[v]) return false;
  }

  // Union-find over triangles, merged through shared edges.
  const auto tris = c.triangles();
  std::vector<int> parent(tris.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> first_owner(edge_count(n), -1);
  int components = static_cast<int>(tris.size());
  for (int i = 0; i < static_cast<int>(tris.size()); ++i) {
    for (const Edge& e : tris[i].edges()) {
      int& owner = first_owner[edge_index(e.u, e.v, n)];
      if (owner < 0) {
        owner = i;
        continue;
      }
      const int ra = find(owner);
      const int rb = find(i);
      if (ra != rb) {
        parent[ra] = rb;
        --components;
      }
    }
  }
  return components == 1;
}

bool verify_surface(const TriangleSet& c) {
  if (c.empty() || !is_closed(edge_sums(c)) || !is_connected(c)) return false;
  for (VertexId v = 1; v <= c.n(); ++v) {
    if (!link_is_single_circle(vertex_link(c, v))) return false;
  }
  return true;
}

FVector f_vector(const TriangleSet& c) {
  const auto deg = vertex_degrees(c);
  const int f1 = std::accumulate(deg.begin(), deg.end(), 0) / 2;
  return {c.n(), f1, static_cast<int>(c.size())};
}

int euler_characteristic(const TriangleSet& c) {
  const FVector f = f_vector(c);
  return f.f0 - f.f1 + f.f2;
}

std::vector<int> vertex_degrees(const TriangleSet& c) {
  const int n = c.n();
  std::vector<std::uint64_t> nbrs(n + 1, 0);
  for (const Triangle& t : c.triangles()) {
    nbrs[t.a] |= (1ULL << (t.b - 1)) | (1ULL << (t.c - 1));
    nbrs[t.b] |= (1ULL << (t.a - 1)) | (1ULL << (t.c - 1));
    nbrs[t.c] |= (1ULL << (t.a - 1)) | (1ULL << (t.b - 1));
  }
  std::vector<int> deg(n + 1, 0);
  for (int v = 1; v <= n; ++v) deg[v] = std::popcount(nbrs[v]);
  return deg;
}

}  // namespace surfenum

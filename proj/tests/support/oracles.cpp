#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace surfenum::oracle {

using boost::multiprecision::cpp_rational;

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> perm{0};
    perm.insert(perm.end(), p.begin(), p.end());
    out.push_back(std::move(perm));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Triangle> relabel(const TriangleSet& c, const std::vector<int>& perm) {
  std::vector<Triangle> out;
  for (const Triangle& t : c.triangles()) out.emplace_back(perm[t.a], perm[t.b], perm[t.c]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triangle> canonical(const TriangleSet& c) {
  std::vector<Triangle> best;
  for (const auto& perm : all_permutations(c.n())) {
    auto r = relabel(c, perm);
    if (best.empty() || r < best) best = std::move(r);
  }
  return best;
}

bool isomorphic(const TriangleSet& a, const TriangleSet& b) {
  if (a.n() != b.n() || a.size() != b.size()) return false;
  const std::vector<Triangle> target(b.triangles().begin(), b.triangles().end());
  for (const auto& perm : all_permutations(a.n())) {
    if (relabel(a, perm) == target) return true;
  }
  return false;
}

std::uint64_t automorphisms(const TriangleSet& c) {
  const std::vector<Triangle> self(c.triangles().begin(), c.triangles().end());
  std::uint64_t count = 0;
  for (const auto& perm : all_permutations(c.n())) count += relabel(c, perm) == self;
  return count;
}

cpp_int leibniz_determinant(const TriangleSet& c) {
  const int n = c.n();
  std::vector<std::vector<int>> m(n + 1, std::vector<int>(n + 1, 0));
  for (const Triangle& t : c.triangles()) {
    for (int i : t.vertices()) {
      for (int j : t.vertices()) ++m[i][j];
    }
  }
  cpp_int det = 0;
  for (const auto& perm : all_permutations(n)) {
    int inversions = 0;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) inversions += perm[i] > perm[j];
    }
    cpp_int term = inversions % 2 ? -1 : 1;
    for (int i = 1; i <= n && term != 0; ++i) term *= m[i][perm[i]];
    det += term;
  }
  return det;
}

cpp_int rational_determinant(const TriangleSet& c) {
  const int n = c.n();
  std::vector<std::vector<cpp_rational>> m(n, std::vector<cpp_rational>(n, 0));
  for (const Triangle& t : c.triangles()) {
    for (int i : t.vertices()) {
      for (int j : t.vertices()) m[i - 1][j - 1] += 1;
    }
  }
  cpp_rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      const cpp_rational f = m[r][col] / m[col][col];
      for (int k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return boost::multiprecision::numerator(det);
}

bool orientable_by_exhaustion(const TriangleSet& c) {
  const auto tris = c.triangles();
  const std::size_t f = tris.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f); ++mask) {
    std::set<std::pair<int, int>> directed;
    bool ok = true;
    for (std::size_t i = 0; i < f && ok; ++i) {
      const Triangle& t = tris[i];
      std::array<std::pair<int, int>, 3> e{{{t.a, t.b}, {t.b, t.c}, {t.c, t.a}}};
      for (auto [u, v] : e) {
        if (mask >> i & 1) std::swap(u, v);
        ok = ok && directed.insert({u, v}).second;
      }
    }
    if (ok) return true;
  }
  return false;
}

namespace {

struct SubsetSearch {
  int n;
  int target;
  std::vector<Triangle> all;
  std::vector<std::array<int, 3>> edges_of;
  std::vector<std::vector<int>> edges_ending_at;  // edges whose last triangle has this index
  std::vector<int> count;
  std::vector<Triangle> chosen;
  std::set<std::vector<Triangle>> seen;
  std::set<std::vector<Triangle>> classes;
  std::vector<std::vector<int>> perms;

  int edge(int u, int v) const { return (u - 1) * n + (v - 1); }

  explicit SubsetSearch(int n_) : n(n_), target(0), count(n_ * n_, 0), perms(all_permutations(n_)) {
    std::vector<int> last(n * n, -1);
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        for (int c = b + 1; c <= n; ++c) {
          all.emplace_back(a, b, c);
          edges_of.push_back({edge(a, b), edge(a, c), edge(b, c)});
          for (int e : edges_of.back()) last[e] = static_cast<int>(all.size()) - 1;
        }
      }
    }
    edges_ending_at.resize(all.size());
    for (int e = 0; e < n * n; ++e) {
      if (last[e] >= 0) edges_ending_at[last[e]].push_back(e);
    }
  }

  void record() {
    for (int c : count) {
      if (c == 1) return;
    }
    const TriangleSet c(n, chosen);
    if (!verify_surface(c)) return;
    if (seen.count(chosen)) return;
    std::vector<Triangle> best;
    for (const auto& perm : perms) {
      auto r = relabel(c, perm);
      if (best.empty() || r < best) best = r;
      seen.insert(std::move(r));
    }
    classes.insert(best);
  }

  void run(std::size_t idx) {
    if (idx > 0) {
      for (int e : edges_ending_at[idx - 1]) {
        if (count[e] == 1) return;
      }
    }
    if (static_cast<int>(chosen.size()) == target) {
      record();
      return;
    }
    if (idx == all.size() || all.size() - idx < static_cast<std::size_t>(target) - chosen.size()) return;
    const auto& es = edges_of[idx];
    if (count[es[0]] < 2 && count[es[1]] < 2 && count[es[2]] < 2) {
      for (int e : es) ++count[e];
      chosen.push_back(all[idx]);
      run(idx + 1);
      chosen.pop_back();
      for (int e : es) --count[e];
    }
    run(idx + 1);
  }
};

}  // namespace

std::vector<std::vector<Triangle>> brute_force_surfaces(int n) {
  SubsetSearch search(n);
  for (int chi = 2;; --chi) {
    const int f1 = 3 * n - 3 * chi;
    if (f1 > n * (n - 1) / 2) break;
    search.target = 2 * n - 2 * chi;
    search.run(0);
  }
  return {search.classes.begin(), search.classes.end()};
}

namespace {

struct Vec {
  cpp_int x, y, z;
};

Vec sub(const Point3& a, const Point3& b) { return {cpp_int(a.x) - b.x, cpp_int(a.y) - b.y, cpp_int(a.z) - b.z}; }

cpp_int det3(const Vec& a, const Vec& b, const Vec& c) {
  return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) + a.z * (b.x * c.y - b.y * c.x);
}

// Closed segment pq against closed triangle abc, by solving
// u (b - a) + w (c - a) + t (p - q) = p - a with Cramer's rule.
bool segment_hits_triangle(const Point3& a, const Point3& b, const Point3& c, const Point3& p, const Point3& q) {
  const Vec e1 = sub(b, a), e2 = sub(c, a), d = sub(p, q), r = sub(p, a);
  cpp_int den = det3(e1, e2, d);
  if (den == 0) return false;  // parallel to the plane and, by general position, off it
  const int sign = den < 0 ? -1 : 1;
  den *= sign;
  const cpp_rational u(det3(r, e2, d) * sign, den);
  const cpp_rational w(det3(e1, r, d) * sign, den);
  const cpp_rational t(det3(e1, e2, r) * sign, den);
  return t >= 0 && t <= 1 && u >= 0 && w >= 0 && u + w <= 1;
}

}  // namespace

int orient_sign(const Point3& p, const Point3& q, const Point3& r, const Point3& s) {
  const cpp_int d = det3(sub(q, p), sub(r, p), sub(s, p));
  return d > 0 ? 1 : d < 0 ? -1 : 0;
}

std::optional<bool> embeds_by_rational_intersection(const TriangleSet& c, const CoordinateAssignment& x) {
  const int n = c.n();
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int d = b + 1; d <= n; ++d) {
        for (int e = d + 1; e <= n; ++e) {
          if (orient_sign(x[a], x[b], x[d], x[e]) == 0) return std::nullopt;
        }
      }
    }
  }
  const auto tris = c.triangles();
  auto edge_hits = [&](int u, int v, const Triangle& t) { return segment_hits_triangle(x[t.a], x[t.b], x[t.c], x[u], x[v]); };
  for (std::size_t i = 0; i < tris.size(); ++i) {
    for (std::size_t j = i + 1; j < tris.size(); ++j) {
      const Triangle& s = tris[i];
      const Triangle& t = tris[j];
      std::vector<int> shared, only_s, only_t;
      for (int v : s.vertices()) (t.contains(v) ? shared : only_s).push_back(v);
      for (int v : t.vertices()) {
        if (!s.contains(v)) only_t.push_back(v);
      }
      if (shared.size() == 2) continue;  // meet in exactly the common edge unless coplanar
      if (shared.size() == 1) {
        if (edge_hits(only_s[0], only_s[1], t) || edge_hits(only_t[0], only_t[1], s)) return false;
        continue;
      }
      for (const auto& [u, v] : {std::pair{s.a, s.b}, {s.a, s.c}, {s.b, s.c}}) {
        if (edge_hits(u, v, t)) return false;
      }
      for (const auto& [u, v] : {std::pair{t.a, t.b}, {t.a, t.c}, {t.b, t.c}}) {
        if (edge_hits(u, v, s)) return false;
      }
    }
  }
  return true;
}

}  // namespace surfenum::oracle

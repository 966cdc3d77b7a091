#include "surfenum/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace surfenum {

std::vector<int> degree_sequence(const TriangleSet& c) {
  std::vector<int> deg = vertex_degrees(c);
  deg.erase(deg.begin());
  std::sort(deg.begin(), deg.end());
  return deg;
}

namespace {

__extension__ using UInt128 = unsigned __int128;

// Fraction-free Gaussian elimination; every division is exact.
template <class T>
T bareiss_determinant(std::vector<T> m, int n) {
  if (n == 0) return T(1);
  auto at = [&](int i, int j) -> T& { return m[static_cast<std::size_t>(i) * n + j]; };
  T sign = 1;
  T prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) return T(0);
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

constexpr std::uint64_t kPrime = (1ULL << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const UInt128 p = static_cast<UInt128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(p & kPrime) + static_cast<std::uint64_t>(p >> 61);
  if (r >= kPrime) r -= kPrime;
  return r;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e > 0; e >>= 1, a = mul_mod(a, a)) {
    if (e & 1) r = mul_mod(r, a);
  }
  return r;
}

// Determinant modulo 2^61 - 1, lifted to the symmetric residue. Exact when
// |det| < 2^60.
long long determinant_mod_prime(const std::vector<long long>& src, int n) {
  std::vector<std::uint64_t> m(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    m[i] = src[i] >= 0 ? static_cast<std::uint64_t>(src[i]) % kPrime
                       : kPrime - static_cast<std::uint64_t>(-src[i]) % kPrime;
  }
  auto at = [&](int i, int j) -> std::uint64_t& { return m[static_cast<std::size_t>(i) * n + j]; };
  std::uint64_t det = 1;
  for (int k = 0; k < n; ++k) {
    int r = k;
    while (r < n && at(r, k) == 0) ++r;
    if (r == n) return 0;
    if (r != k) {
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      det = det == 0 ? 0 : kPrime - det;
    }
    det = mul_mod(det, at(k, k));
    const std::uint64_t inv = pow_mod(at(k, k), kPrime - 2);
    for (int i = k + 1; i < n; ++i) {
      if (at(i, k) == 0) continue;
      const std::uint64_t f = mul_mod(at(i, k), inv);
      for (int j = k; j < n; ++j) {
        const std::uint64_t sub = mul_mod(f, at(k, j));
        at(i, j) = at(i, j) >= sub ? at(i, j) - sub : at(i, j) + kPrime - sub;
      }
    }
  }
  return det > kPrime / 2 ? -static_cast<long long>(kPrime - det) : static_cast<long long>(det);
}

}  // namespace

BigInt as_determinant(const TriangleSet& c) {
  const int n = c.n();
  std::vector<long long> m(static_cast<std::size_t>(n) * n, 0);
  for (const Triangle& t : c.triangles()) {
    const auto vs = t.vertices();
    for (int x : vs) {
      for (int y : vs) ++m[static_cast<std::size_t>(x - 1) * n + (y - 1)];
    }
  }
  // Hadamard's bound decides whether the residue modulo a 61-bit prime is exact.
  double log2_bound = 0.0;
  for (int i = 0; i < n; ++i) {
    double sq = 0.0;
    for (int j = 0; j < n; ++j) {
      const double x = static_cast<double>(m[static_cast<std::size_t>(i) * n + j]);
      sq += x * x;
    }
    if (sq > 0) log2_bound += 0.5 * std::log2(sq);
  }
  if (log2_bound < 59.0) return BigInt(determinant_mod_prime(m, n));
  std::vector<BigInt> w(m.begin(), m.end());
  return bareiss_determinant(std::move(w), n);
}

bool operator<(const InvariantKey& x, const InvariantKey& y) {
  if (x.f != y.f) return x.f < y.f;
  if (x.degrees != y.degrees) return x.degrees < y.degrees;
  return x.as_determinant < y.as_determinant;
}

InvariantKey invariant_key(const TriangleSet& c) {
  return {f_vector(c), degree_sequence(c), as_determinant(c)};
}

// ---------------------------------------------------------------------------
// Topological type

std::string TopologicalType::name() const {
  if (orientable) {
    if (genus == 0) return "S2";
    if (genus == 1) return "T2";
    return "M(" + std::to_string(genus) + ",+)";
  }
  if (genus == 1) return "RP2";
  if (genus == 2) return "K2";
  return "M(" + std::to_string(genus) + ",-)";
}

std::string TopologicalType::tag() const {
  const std::string nm = name();
  if (nm.front() != 'M') return nm;
  return "M" + std::to_string(genus) + (orientable ? "+" : "-");
}

TopologicalType topological_type(int chi, bool orientable) {
  TopologicalType t;
  t.euler_characteristic = chi;
  t.orientable = orientable;
  if (orientable) {
    if (chi > 2 || chi % 2 != 0) {
      throw std::invalid_argument("orientable surfaces have even Euler characteristic <= 2");
    }
    t.genus = (2 - chi) / 2;
    t.homology = {1, 2 * t.genus, false, 1};
  } else {
    if (chi > 1) throw std::invalid_argument("non-orientable surfaces have Euler characteristic <= 1");
    t.genus = 2 - chi;
    t.homology = {1, t.genus - 1, true, 0};
  }
  return t;
}

TopologicalType topological_type_from_name(const std::string& name) {
  if (name == "S2") return topological_type(2, true);
  if (name == "T2") return topological_type(0, true);
  if (name == "RP2") return topological_type(1, false);
  if (name == "K2") return topological_type(0, false);
  if (name.size() >= 6 && name.rfind("M(", 0) == 0 && name.back() == ')') {
    const auto comma = name.find(',');
    if (comma != std::string::npos && comma + 3 == name.size()) {
      const int g = std::stoi(name.substr(2, comma - 2));
      const char sign = name[comma + 1];
      if (sign == '+' && g >= 0) return topological_type(2 - 2 * g, true);
      if (sign == '-' && g >= 1) return topological_type(2 - g, false);
    }
  }
  throw std::invalid_argument("unknown surface type: " + name);
}

bool type_display_less(const TopologicalType& x, const TopologicalType& y) {
  if (x.orientable != y.orientable) return x.orientable;
  return x.genus < y.genus;
}

int heawood_min_vertices(const TopologicalType& type) {
  // Smallest n with 2n - 7 >= sqrt(49 - 24 chi).
  const long long disc = 49 - 24LL * type.euler_characteristic;
  int n = 4;
  while (2LL * n - 7 < 0 || (2LL * n - 7) * (2LL * n - 7) < disc) ++n;
  const bool exception = (type.orientable && type.genus == 2) || (!type.orientable && type.genus == 2) ||
                         (!type.orientable && type.genus == 3);
  return exception ? n + 1 : n;
}

// ---------------------------------------------------------------------------
// Adjacency used by isomorphism, automorphisms, orientation and canonical form.

namespace {

struct SurfaceGraph {
  int n = 0;
  int stride = 0;
  std::vector<std::uint8_t> apex;     // two third vertices per ordered pair
  std::vector<std::uint16_t> tri_at;  // triangle index per apex slot
  std::vector<int> degree;
  std::vector<std::array<int, 3>> tris;
  std::size_t seed = 0;  // extension start for isomorphism tests

  explicit SurfaceGraph(const TriangleSet& c)
      : n(c.n()),
        stride(c.n() + 1),
        apex(static_cast<std::size_t>(stride) * stride * 2, 0),
        tri_at(static_cast<std::size_t>(stride) * stride * 2, 0),
        degree(c.n() + 1, 0) {
    for (const Triangle& t : c.triangles()) {
      const int idx = static_cast<int>(tris.size());
      tris.push_back({t.a, t.b, t.c});
      const int a = t.a, b = t.b, cc = t.c;
      add(a, b, cc, idx);
      add(a, cc, b, idx);
      add(b, cc, a, idx);
    }
    for (int u = 1; u <= n; ++u) {
      for (int v = 1; v <= n; ++v) degree[u] += apex[slot(u, v)] != 0 ? 1 : 0;
    }
    seed = tris.empty() ? 0 : rarest_triangle();
  }

  std::size_t slot(int u, int v) const { return (static_cast<std::size_t>(u) * stride + v) * 2; }

  void add(int u, int v, int w, int idx) {
    for (std::size_t s : {slot(u, v), slot(v, u)}) {
      const std::size_t k = apex[s] == 0 ? s : s + 1;
      if (apex[k] != 0) throw std::invalid_argument("edge in more than two triangles");
      apex[k] = static_cast<std::uint8_t>(w);
      tri_at[k] = static_cast<std::uint16_t>(idx);
    }
  }

  /// Third vertex of the triangle across edge uv from the triangle uvr.
  int across(int u, int v, int r) const {
    const std::size_t s = slot(u, v);
    return apex[s] == r ? apex[s + 1] : apex[s];
  }
  int triangle_across(int u, int v, int r) const {
    const std::size_t s = slot(u, v);
    return apex[s] == r ? tri_at[s + 1] : tri_at[s];
  }
  bool has_triangle(int u, int v, int w) const {
    const std::size_t s = slot(u, v);
    return apex[s] == w || apex[s + 1] == w;
  }

  /// Index of a triangle whose sorted degree triple occurs least often.
  std::size_t rarest_triangle() const {
    std::vector<int> codes(tris.size());
    for (std::size_t i = 0; i < tris.size(); ++i) {
      std::array<int, 3> d{degree[tris[i][0]], degree[tris[i][1]], degree[tris[i][2]]};
      std::sort(d.begin(), d.end());
      codes[i] = (d[0] << 14) | (d[1] << 7) | d[2];
    }
    std::vector<int> sorted = codes;
    std::sort(sorted.begin(), sorted.end());
    auto freq = [&](int code) {
      const auto [lo, hi] = std::equal_range(sorted.begin(), sorted.end(), code);
      return hi - lo;
    };
    std::size_t best = 0;
    auto best_freq = freq(codes[0]);
    for (std::size_t i = 1; i < tris.size(); ++i) {
      const auto f = freq(codes[i]);
      if (f < best_freq) {
        best = i;
        best_freq = f;
      }
    }
    return best;
  }

  /// Isomorphism invariant hash: f-vector and the sorted list of
  /// (degree, sorted neighbour degrees) over all vertices.
  std::uint64_t neighbourhood_hash() const {
    std::vector<std::uint64_t> sig(n);
    std::vector<int> nb;
    nb.reserve(n);
    for (int v = 1; v <= n; ++v) {
      nb.clear();
      for (int u = 1; u <= n; ++u) {
        if (u != v && apex[slot(v, u)] != 0) nb.push_back(degree[u]);
      }
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = static_cast<std::uint64_t>(degree[v]) * 0x9E3779B97F4A7C15ULL;
      for (int x : nb) h = (h ^ static_cast<std::uint64_t>(x)) * 1099511628211ULL;
      sig[v - 1] = h;
    }
    std::sort(sig.begin(), sig.end());
    std::uint64_t h = 1469598103934665603ULL ^ (static_cast<std::uint64_t>(n) << 32) ^ tris.size();
    for (std::uint64_t x : sig) h = (h ^ x) * 1099511628211ULL + (h >> 29);
    return h;
  }

  /// Neighbours of u in cyclic link order.
  std::vector<int> link_cycle(int u) const {
    std::vector<int> cyc;
    int first = 0;
    for (const auto& t : tris) {
      if (t[0] == u) {
        first = t[1];
      } else if (t[1] == u || t[2] == u) {
        first = t[0];
      } else {
        continue;
      }
      break;
    }
    if (first == 0) return cyc;
    int prev = first;
    int cur = apex[slot(u, first)];
    cyc.push_back(first);
    while (cur != first && static_cast<int>(cyc.size()) <= n) {
      cyc.push_back(cur);
      const int next = across(u, cur, prev);
      prev = cur;
      cur = next;
    }
    return cyc;
  }
};

// Extends the correspondence of oriented triangles (from -> to) across edges.
class Matcher {
 public:
  Matcher(const SurfaceGraph& a, const SurfaceGraph& b)
      : a_(a), b_(b), map_(a.n + 1), inv_(b.n + 1), visited_(a.tris.size()) {
    queue_.reserve(a.tris.size());
  }

  bool extend(const std::array<int, 3>& from, const std::array<int, 3>& to) {
    std::fill(map_.begin(), map_.end(), 0);
    std::fill(inv_.begin(), inv_.end(), 0);
    std::fill(visited_.begin(), visited_.end(), false);
    queue_.clear();
    for (int i = 0; i < 3; ++i) {
      if (a_.degree[from[i]] != b_.degree[to[i]]) return false;
      map_[from[i]] = to[i];
      inv_[to[i]] = from[i];
    }
    const std::size_t s0 = a_.slot(from[0], from[1]);
    const int start = a_.apex[s0] == from[2] ? a_.tri_at[s0] : a_.tri_at[s0 + 1];
    visited_[start] = true;
    queue_.push_back({from, to});
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const auto [p, q] = queue_[head];
      for (int i = 0; i < 3; ++i) {
        const int u = p[i], v = p[(i + 1) % 3], r = p[(i + 2) % 3];
        const int u2 = q[i], v2 = q[(i + 1) % 3], r2 = q[(i + 2) % 3];
        const int w = a_.across(u, v, r);
        const int w2 = b_.across(u2, v2, r2);
        if (w == 0 || w2 == 0) return false;
        if (map_[w] == 0) {
          if (inv_[w2] != 0 || a_.degree[w] != b_.degree[w2]) return false;
          map_[w] = w2;
          inv_[w2] = w;
        } else if (map_[w] != w2) {
          return false;
        }
        const int tw = a_.triangle_across(u, v, r);
        if (!visited_[tw]) {
          visited_[tw] = true;
          queue_.push_back({{u, v, w}, {u2, v2, w2}});
        }
      }
    }
    for (int v = 1; v <= a_.n; ++v) {
      if (map_[v] == 0) return false;
    }
    return true;
  }

  /// Counts (or finds, when stop_at_first) the oriented triangles of b that
  /// the first triangle of a extends to.
  std::uint64_t count_extensions(bool stop_at_first) {
    if (a_.tris.empty() || a_.tris.size() != b_.tris.size() || a_.n != b_.n) return 0;
    const std::array<int, 3> seed = a_.tris[a_.seed];
    std::uint64_t found = 0;
    static constexpr int kOrders[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                          {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& t : b_.tris) {
      for (const auto& o : kOrders) {
        const std::array<int, 3> to{t[o[0]], t[o[1]], t[o[2]]};
        if (b_.degree[to[0]] != a_.degree[seed[0]] || b_.degree[to[1]] != a_.degree[seed[1]] ||
            b_.degree[to[2]] != a_.degree[seed[2]]) {
          continue;
        }
        if (extend(seed, to)) {
          ++found;
          if (stop_at_first) return found;
        }
      }
    }
    return found;
  }

 private:
  const SurfaceGraph& a_;
  const SurfaceGraph& b_;
  std::vector<int> map_;
  std::vector<int> inv_;
  std::vector<bool> visited_;
  std::vector<std::pair<std::array<int, 3>, std::array<int, 3>>> queue_;
};

bool graphs_isomorphic(const SurfaceGraph& a, const SurfaceGraph& b) {
  Matcher m(a, b);
  return m.count_extensions(true) > 0;
}

}  // namespace

bool are_isomorphic(const TriangleSet& a, const TriangleSet& b) {
  if (a.n() != b.n() || a.size() != b.size()) return false;
  if (!(invariant_key(a) == invariant_key(b))) return false;
  return graphs_isomorphic(SurfaceGraph(a), SurfaceGraph(b));
}

std::uint64_t automorphism_group_order(const TriangleSet& c) {
  const SurfaceGraph g(c);
  Matcher m(g, g);
  return m.count_extensions(false);
}

bool orientability(const TriangleSet& c) {
  const SurfaceGraph g(c);
  if (g.tris.empty()) return true;
  // oriented[i] holds triangle i as a cyclic order; unset entries have [0] == 0.
  std::vector<std::array<int, 3>> oriented(g.tris.size(), {0, 0, 0});
  std::vector<int> queue;
  for (std::size_t root = 0; root < g.tris.size(); ++root) {
    if (oriented[root][0] != 0) continue;
    oriented[root] = g.tris[root];
    queue.assign(1, static_cast<int>(root));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto o = oriented[queue[head]];
      for (int i = 0; i < 3; ++i) {
        const int u = o[i], v = o[(i + 1) % 3], r = o[(i + 2) % 3];
        const int w = g.across(u, v, r);
        const int nb = g.triangle_across(u, v, r);
        if (w == 0) continue;
        // The neighbour must traverse the shared edge as v -> u.
        const std::array<int, 3> want{v, u, w};
        if (oriented[nb][0] == 0) {
          oriented[nb] = want;
          queue.push_back(nb);
          continue;
        }
        const auto& have = oriented[nb];
        bool has_vu = false;
        for (int j = 0; j < 3; ++j) {
          if (have[j] == v && have[(j + 1) % 3] == u) has_vu = true;
        }
        if (!has_vu) return false;
      }
    }
  }
  return true;
}

bool is_neighborly(const TriangleSet& c) {
  const FVector f = f_vector(c);
  const bool neighborly = static_cast<std::size_t>(f.f1) == edge_count(c.n());
  if (neighborly && orientability(c)) {
    const int chi = f.f0 - f.f1 + f.f2;
    const int genus = (2 - chi) / 2;
    const int n = c.n();
    if (12 * genus != (n - 3) * (n - 4)) {
      throw std::logic_error("neighborly orientable surface with unexpected genus");
    }
  }
  return neighborly;
}

// ---------------------------------------------------------------------------
// Canonical form: branch and bound over labellings, group by group.
//
// The sorted triangle list of a labelling splits into groups by smallest
// label. Group 1 of the minimum is a beginning segment B_d at a vertex of
// minimum degree d. When group L is formed, the still unlabelled neighbours
// of the vertex labelled L receive the next free labels (any other choice is
// lexicographically worse), so only their order is branched on.

namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const SurfaceGraph& g) : g_(g), n_(g.n), label_(n_ + 1, 0), vert_(n_ + 2, 0) {
    cycles_.resize(n_ + 1);
    for (int v = 1; v <= n_; ++v) cycles_[v] = g.link_cycle(v);
  }

  std::vector<std::uint32_t> run() {
    int min_deg = n_;
    for (int v = 1; v <= n_; ++v) min_deg = std::min<int>(min_deg, static_cast<int>(cycles_[v].size()));
    for (int v = 1; v <= n_; ++v) {
      const auto& cyc = cycles_[v];
      const int d = static_cast<int>(cyc.size());
      if (d != min_deg) continue;
      for (int s = 0; s < d; ++s) {
        for (int dir : {1, -1}) {
          label_[v] = 1;
          vert_[1] = v;
          for (int lab = 2; lab <= d + 1; ++lab) {
            const int pos = lab % 2 == 0 ? (lab - 2) / 2 : d - 1 - (lab - 3) / 2;
            const int x = cyc[((s + dir * pos) % d + d) % d];
            label_[x] = lab;
            vert_[lab] = x;
          }
          next_ = d + 2;
          const std::size_t mark = cur_.size();
          const bool better = append_group(1);
          if (!pruned_) descend(2, better);
          pruned_ = false;
          cur_.resize(mark);
          for (int x : cyc) label_[x] = 0;
          label_[v] = 0;
        }
      }
    }
    return best_;
  }

 private:
  // Appends the group of label L; updates the comparison state against best_.
  // Returns whether cur_ is already strictly smaller than best_.
  bool append_group(int L, bool already_less = false) {
    const int u = vert_[L];
    const auto& cyc = cycles_[u];
    const std::size_t start = cur_.size();
    const int d = static_cast<int>(cyc.size());
    for (int i = 0; i < d; ++i) {
      const int x = label_[cyc[i]];
      const int y = label_[cyc[(i + 1) % d]];
      if (x > L && y > L) {
        cur_.push_back(static_cast<std::uint32_t>(L) << 16 | static_cast<std::uint32_t>(std::min(x, y)) << 8 |
                       static_cast<std::uint32_t>(std::max(x, y)));
      }
    }
    std::sort(cur_.begin() + static_cast<std::ptrdiff_t>(start), cur_.end());
    if (already_less || best_.empty()) return true;
    for (std::size_t i = start; i < cur_.size(); ++i) {
      if (cur_[i] < best_[i]) return true;
      if (cur_[i] > best_[i]) {
        pruned_ = true;
        return false;
      }
    }
    return false;
  }

  void descend(int L, bool less) {
    if (cur_.size() == g_.tris.size()) {
      if (less || best_.empty()) {
        best_ = cur_;
        ++updates_;
      }
      return;
    }
    if (L >= next_) return;  // disconnected; cannot happen for surfaces
    const int u = vert_[L];
    std::vector<int> fresh;
    for (int x : cycles_[u]) {
      if (label_[x] == 0) fresh.push_back(x);
    }
    std::sort(fresh.begin(), fresh.end());
    const int base = next_;
    next_ += static_cast<int>(fresh.size());
    const std::size_t mark = cur_.size();
    // A new best found below this node shares its prefix, so `less` no longer holds.
    const std::uint64_t entry_updates = updates_;
    do {
      less = less && updates_ == entry_updates;
      for (std::size_t i = 0; i < fresh.size(); ++i) {
        label_[fresh[i]] = base + static_cast<int>(i);
        vert_[base + static_cast<int>(i)] = fresh[i];
      }
      pruned_ = false;
      const bool now_less = append_group(L, less);
      if (!pruned_) descend(L + 1, now_less);
      pruned_ = false;
      cur_.resize(mark);
    } while (std::next_permutation(fresh.begin(), fresh.end()));
    for (int x : fresh) label_[x] = 0;
    next_ = base;
  }

  const SurfaceGraph& g_;
  int n_;
  std::vector<std::vector<int>> cycles_;
  std::vector<int> label_;
  std::vector<int> vert_;
  int next_ = 1;
  bool pruned_ = false;
  std::uint64_t updates_ = 0;
  std::vector<std::uint32_t> cur_;
  std::vector<std::uint32_t> best_;
};

TriangleSet decode(int n, const std::vector<std::uint32_t>& codes) {
  std::vector<Triangle> tris;
  tris.reserve(codes.size());
  for (std::uint32_t code : codes) {
    tris.emplace_back(static_cast<int>(code >> 16), static_cast<int>((code >> 8) & 0xff),
                      static_cast<int>(code & 0xff));
  }
  return TriangleSet(n, std::move(tris));
}

}  // namespace

TriangleSet canonical_form(const TriangleSet& c) {
  if (!verify_surface(c)) throw std::invalid_argument("canonical_form requires a surface");
  const SurfaceGraph g(c);
  CanonicalSearch search(g);
  return decode(c.n(), search.run());
}

SurfaceRecord classify_surface(const TriangleSet& c, std::size_t source_index) {
  SurfaceRecord r;
  r.complex = canonical_form(c);
  r.key = invariant_key(r.complex);
  r.type = topological_type(euler_characteristic(r.complex), orientability(r.complex));
  r.automorphism_order = automorphism_group_order(r.complex);
  r.neighborly = is_neighborly(r.complex);
  r.source_index = source_index;
  return r;
}

// ---------------------------------------------------------------------------
// Deduplication

struct Deduplicator::Impl {
  struct Rep {
    TriangleSet complex;
    std::size_t index;
    std::unique_ptr<SurfaceGraph> graph;
  };
  // Buckets by an isomorphism-invariant hash; collisions are resolved by the
  // isomorphism test itself.
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  std::vector<Rep> reps;
  std::size_t seen = 0;
};

Deduplicator::Deduplicator() : impl_(std::make_unique<Impl>()) {}
Deduplicator::~Deduplicator() = default;
Deduplicator::Deduplicator(Deduplicator&&) noexcept = default;
Deduplicator& Deduplicator::operator=(Deduplicator&&) noexcept = default;

bool Deduplicator::add(const TriangleSet& c, std::size_t index) {
  ++impl_->seen;
  auto graph = std::make_unique<SurfaceGraph>(c);
  auto& bucket = impl_->buckets[graph->neighbourhood_hash()];
  for (std::size_t r : bucket) {
    if (graphs_isomorphic(*graph, *impl_->reps[r].graph)) return false;
  }
  bucket.push_back(impl_->reps.size());
  impl_->reps.push_back({c, index, std::move(graph)});
  return true;
}

std::size_t Deduplicator::class_count() const { return impl_->reps.size(); }
std::size_t Deduplicator::seen() const { return impl_->seen; }

std::vector<TriangleSet> Deduplicator::representatives() const {
  std::vector<TriangleSet> out;
  out.reserve(impl_->reps.size());
  for (const auto& r : impl_->reps) out.push_back(r.complex);
  return out;
}

std::vector<SurfaceRecord> Deduplicator::finish(int threads) && {
  auto& reps = impl_->reps;
  std::vector<SurfaceRecord> out(reps.size());
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(reps.size())));
  auto work = [&](int w) {
    for (std::size_t i = static_cast<std::size_t>(w); i < reps.size(); i += static_cast<std::size_t>(workers)) {
      out[i] = classify_surface(reps[i].complex, reps[i].index);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  std::sort(out.begin(), out.end(),
            [](const SurfaceRecord& x, const SurfaceRecord& y) { return x.complex < y.complex; });
  impl_ = std::make_unique<Impl>();
  return out;
}

std::vector<SurfaceRecord> deduplicate(std::span<const TriangleSet> surfaces, int threads) {
  Deduplicator d;
  for (std::size_t i = 0; i < surfaces.size(); ++i) d.add(surfaces[i], i);
  return std::move(d).finish(threads);
}

}  // namespace surfenum

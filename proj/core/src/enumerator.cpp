#include "surfenum/enumerator.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace surfenum {

namespace {

constexpr int kStride = kMaxVertices + 1;

enum LinkKind : std::uint8_t { kNewPath, kExtendP, kExtendQ, kCloseCycle, kJoin };

}  // namespace

BeginningSegment beginning_segment(int k) {
  if (k < 3) throw std::invalid_argument("beginning segment needs k >= 3");
  if (k + 1 > kMaxVertices) throw std::invalid_argument("beginning segment too large");
  BeginningSegment seg{k, {}};
  seg.triangles.emplace_back(1, 2, 3);
  seg.triangles.emplace_back(1, 2, 4);
  for (int j = 3; j <= k - 1; ++j) seg.triangles.emplace_back(1, j, j + 2);
  seg.triangles.emplace_back(1, k, k + 1);
  std::sort(seg.triangles.begin(), seg.triangles.end());
  return seg;
}

SearchState::SearchState(int n, Order order, int k)
    : n_(n),
      order_(order),
      k_(k),
      edge_ids_(kStride * kStride, -1),
      count_(surfenum::edge_count(n), 0),
      open_bits_((surfenum::edge_count(n) + 63) / 64, 0),
      vx_(n + 1),
      path_end_(kStride * kStride, 0),
      path_len_(kStride * kStride, 0) {
  if (n < 4 || n > kMaxVertices) throw std::invalid_argument("n must lie in 4..64");
  if (k < 3 || k > n - 1) throw std::invalid_argument("k must lie in 3..n-1");
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      const int e = edge_index(u, v, n);
      edge_ids_[u * kStride + v] = e;
      edge_ids_[v * kStride + u] = e;
    }
  }
}

bool SearchState::violating(int v) const {
  const VertexState& s = vx_[v];
  if (order_ == Order::Lex) return s.cycles >= 1 && s.cycle_length < k_;
  return s.degree > k_ || s.link_edges > k_;
}

SearchState::LinkUndo SearchState::add_link_edge(int v, int p, int q, int dp, int dq) {
  VertexState& s = vx_[v];
  ++s.link_edges;
  if (dp == 0) ++s.degree;
  if (dq == 0) ++s.degree;
  LinkUndo u;
  if (dp == 0 && dq == 0) {
    u.kind = kNewPath;
    end_of(v, p) = static_cast<std::uint8_t>(q);
    end_of(v, q) = static_cast<std::uint8_t>(p);
    len_of(v, p) = len_of(v, q) = 1;
    ++s.components;
  } else if (dq == 0) {
    u.kind = kExtendP;
    const int o = end_of(v, p);
    u.o1 = static_cast<std::uint8_t>(o);
    const auto len = static_cast<std::uint8_t>(len_of(v, p) + 1);
    end_of(v, o) = static_cast<std::uint8_t>(q);
    end_of(v, q) = static_cast<std::uint8_t>(o);
    len_of(v, o) = len_of(v, q) = len;
  } else if (dp == 0) {
    u.kind = kExtendQ;
    const int o = end_of(v, q);
    u.o1 = static_cast<std::uint8_t>(o);
    const auto len = static_cast<std::uint8_t>(len_of(v, q) + 1);
    end_of(v, o) = static_cast<std::uint8_t>(p);
    end_of(v, p) = static_cast<std::uint8_t>(o);
    len_of(v, o) = len_of(v, p) = len;
  } else if (end_of(v, p) == q) {
    u.kind = kCloseCycle;
    u.o1 = static_cast<std::uint8_t>(s.cycle_length);
    ++s.cycles;
    s.cycle_length = len_of(v, p) + 1;
  } else {
    u.kind = kJoin;
    const int o1 = end_of(v, p);
    const int o2 = end_of(v, q);
    u.o1 = static_cast<std::uint8_t>(o1);
    u.o2 = static_cast<std::uint8_t>(o2);
    const auto len = static_cast<std::uint8_t>(len_of(v, p) + len_of(v, q) + 1);
    end_of(v, o1) = static_cast<std::uint8_t>(o2);
    end_of(v, o2) = static_cast<std::uint8_t>(o1);
    len_of(v, o1) = len_of(v, o2) = len;
    --s.components;
  }
  return u;
}

void SearchState::remove_link_edge(int v, int p, int q, const LinkUndo& u) {
  VertexState& s = vx_[v];
  --s.link_edges;
  switch (u.kind) {
    case kNewPath:
      --s.components;
      s.degree -= 2;
      break;
    case kExtendP:
      end_of(v, u.o1) = static_cast<std::uint8_t>(p);
      len_of(v, u.o1) = len_of(v, p);
      --s.degree;
      break;
    case kExtendQ:
      end_of(v, u.o1) = static_cast<std::uint8_t>(q);
      len_of(v, u.o1) = len_of(v, q);
      --s.degree;
      break;
    case kCloseCycle:
      --s.cycles;
      s.cycle_length = u.o1;
      break;
    case kJoin:
      end_of(v, u.o1) = static_cast<std::uint8_t>(p);
      len_of(v, u.o1) = len_of(v, p);
      end_of(v, u.o2) = static_cast<std::uint8_t>(q);
      len_of(v, u.o2) = len_of(v, q);
      ++s.components;
      break;
  }
}

bool SearchState::push(const Triangle& t) {
  const int a = t.a, b = t.b, c = t.c;
  if (c > n_) throw std::invalid_argument("triangle outside the ground set");
  const int eab = edge_id(a, b), eac = edge_id(a, c), ebc = edge_id(b, c);
  if (count_[eab] == 2 || count_[eac] == 2 || count_[ebc] == 2) return false;

  PushRecord rec;
  rec.partner23 = partner23_;
  const int before_anom = anomalous(a) + anomalous(b) + anomalous(c);
  const int before_viol = violating(a) + violating(b) + violating(c);
  rec.undo[0] = add_link_edge(a, b, c, count_[eab], count_[eac]);
  rec.undo[1] = add_link_edge(b, a, c, count_[eab], count_[ebc]);
  rec.undo[2] = add_link_edge(c, a, b, count_[eac], count_[ebc]);
  for (int e : {eab, eac, ebc}) {
    if (++count_[e] == 1) {
      ++open_edges_;
      open_bits_[e >> 6] |= 1ULL << (e & 63);
    } else {
      --open_edges_;
      open_bits_[e >> 6] &= ~(1ULL << (e & 63));
    }
  }
  rec.anomalies = anomalous(a) + anomalous(b) + anomalous(c) - before_anom;
  rec.violations = violating(a) + violating(b) + violating(c) - before_viol;
  anomalies_ += rec.anomalies;
  violations_ += rec.violations;
  if (a == 2 && b == 3) partner23_ = c;
  chosen_.push_back(t);
  records_.push_back(rec);
  return true;
}

void SearchState::pop() {
  if (chosen_.empty()) throw std::logic_error("pop on empty search state");
  const Triangle t = chosen_.back();
  const PushRecord rec = records_.back();
  chosen_.pop_back();
  records_.pop_back();
  const int a = t.a, b = t.b, c = t.c;
  const int eab = edge_id(a, b), eac = edge_id(a, c), ebc = edge_id(b, c);
  for (int e : {eab, eac, ebc}) {
    if (--count_[e] == 1) {
      ++open_edges_;
      open_bits_[e >> 6] |= 1ULL << (e & 63);
    } else {
      --open_edges_;
      open_bits_[e >> 6] &= ~(1ULL << (e & 63));
    }
  }
  // Reverse order of application; link degrees are the pre-push counts again.
  remove_link_edge(c, a, b, rec.undo[2]);
  remove_link_edge(b, a, c, rec.undo[1]);
  remove_link_edge(a, b, c, rec.undo[0]);
  anomalies_ -= rec.anomalies;
  violations_ -= rec.violations;
  partner23_ = rec.partner23;
}

EdgeSumVector SearchState::edge_sums() const {
  EdgeSumVector s(n_);
  for (const Triangle& t : chosen_) s.add(t);
  return s;
}

bool prune_edge_overflow(const SearchState& state, const Triangle& t) {
  return state.edge_count(t.a, t.b) >= 2 || state.edge_count(t.a, t.c) >= 2 ||
         state.edge_count(t.b, t.c) >= 2;
}

bool prune_link_anomaly(const SearchState& state) { return state.link_anomalies() > 0; }

bool prune_degree_bounds(const SearchState& state) { return state.degree_violations() > 0; }

namespace {

bool excluded_by_symmetry(int k, int partner23, int a, int b, int c) {
  if (a != 2) return false;
  // 23j with odd 5 <= j <= k.
  if (b == 3 && c != 4) return c % 2 == 1 && c >= 5 && c <= k;
  // Once 23i (even 6 <= i <= k) is present: {2,4,j} with odd 3 <= j <= i-3.
  if (partner23 < 6 || partner23 % 2 != 0 || partner23 > k) return false;
  int j = 0;
  if (b == 3 && c == 4) j = 3;
  if (b == 4) j = c;
  return j % 2 == 1 && j >= 3 && j <= partner23 - 3;
}

}  // namespace

bool prune_symmetry_exclusions(const SearchState& state, const Triangle& t) {
  return excluded_by_symmetry(state.k(), state.partner_of_23(), t.a, t.b, t.c);
}

std::optional<TriangleSet> finalize_candidate(const SearchState& state) {
  if (!is_closed(state.edge_sums())) return std::nullopt;
  for (int v = 1; v <= state.n(); ++v) {
    if (state.degree(v) == 0) return std::nullopt;
  }
  TriangleSet c(state.n(), {state.chosen().begin(), state.chosen().end()});
  if (!verify_surface(c)) return std::nullopt;
  return c;
}

// Depth-first search below one beginning segment.
class SegmentSearch {
 public:
  SegmentSearch(const EnumerationConfig& config, int k, const SurfaceSink* sink)
      : config_(config), n_(config.n), state_(config.n, config.order, k), sink_(sink) {
    for (int a = 1; a <= n_; ++a) {
      for (int b = a + 1; b <= n_; ++b) {
        for (int c = b + 1; c <= n_; ++c) {
          tris_.emplace_back(a, b, c);
          tri_edges_.push_back({state_.edge_id(a, b), state_.edge_id(a, c), state_.edge_id(b, c)});
        }
      }
    }
    last_containing_.assign(surfenum::edge_count(n_), -1);
    for (int i = 0; i < static_cast<int>(tris_.size()); ++i) {
      for (int e : tri_edges_[i]) last_containing_[e] = i;
    }
    for (const Triangle& t : beginning_segment(k).triangles) {
      if (!state_.push(t)) throw std::logic_error("beginning segment does not fit");
    }
    segment_last_ = static_cast<int>(std::find(tris_.begin(), tris_.end(), Triangle(1, k, k + 1)) -
                                     tris_.begin());
  }

  /// Runs the search. With a job filter, only first-level branches whose job
  /// number (counted from `job_base`) passes the filter are explored.
  int run(int job_base, const std::function<bool(int)>* job_filter) {
    job_base_ = job_base;
    job_filter_ = job_filter;
    jobs_ = 0;
    if (prune_link_anomaly(state_) || prune_degree_bounds(state_)) return 0;
    dfs(segment_last_, 0);
    return jobs_;
  }

  const SearchStats& stats() const { return stats_; }

 private:
  int first_open_edge() const {
    const auto& bits = state_.open_bits_;
    for (std::size_t w = 0; w < bits.size(); ++w) {
      if (bits[w] != 0) return static_cast<int>(w * 64 + std::countr_zero(bits[w]));
    }
    return -1;
  }

  int lowest_open_vertex() const {
    for (int v = 2; v <= n_; ++v) {
      if (!state_.vertex_closed(v)) return v;
    }
    return n_ + 1;
  }

  void leaf() {
    ++stats_.candidates;
    for (int v = 1; v <= n_; ++v) {
      if (!state_.vertex_closed(v)) return;
    }
    TriangleSet c(n_, {state_.chosen_.begin(), state_.chosen_.end()});
    if (!is_connected(c)) return;
    ++stats_.emitted;
    if (sink_) (*sink_)(c);
  }

  void dfs(int last, int depth) {
    ++stats_.nodes;
    if (state_.open_edges_ == 0) {
      leaf();
      return;
    }
    const int bound = last_containing_[first_open_edge()];
    const int low = lowest_open_vertex();
    const int k = state_.k_;
    const bool symmetry = config_.symmetry_exclusions;
    for (int i = last + 1; i <= bound; ++i) {
      const Triangle t = tris_[i];
      if (t.a > low) break;
      if (state_.vertex_closed(t.a) || state_.vertex_closed(t.b) || state_.vertex_closed(t.c)) {
        continue;
      }
      const auto& e = tri_edges_[i];
      if (state_.count_[e[0]] == 2 || state_.count_[e[1]] == 2 || state_.count_[e[2]] == 2) continue;
      if (symmetry && t.a == 2 && excluded_by_symmetry(k, state_.partner23_, t.a, t.b, t.c)) {
        continue;
      }
      if (depth == 0 && job_filter_) {
        if (!(*job_filter_)(job_base_ + jobs_++)) continue;
      }
      state_.push(t);
      if (state_.anomalies_ == 0 && state_.violations_ == 0) dfs(i, depth + 1);
      state_.pop();
    }
  }

  const EnumerationConfig& config_;
  int n_;
  SearchState state_;
  const SurfaceSink* sink_;
  std::vector<Triangle> tris_;
  std::vector<std::array<int, 3>> tri_edges_;
  std::vector<int> last_containing_;
  int segment_last_ = 0;
  SearchStats stats_;
  int job_base_ = 0;
  int jobs_ = 0;
  const std::function<bool(int)>* job_filter_ = nullptr;
};

namespace {

std::vector<int> segment_order(const EnumerationConfig& config) {
  std::vector<int> ks;
  for (int k = 3; k <= config.n - 1; ++k) ks.push_back(k);
  if (config.order == Order::MixedLex) std::reverse(ks.begin(), ks.end());
  return ks;
}

void check_config(const EnumerationConfig& config) {
  if (config.n < 4 || config.n > kMaxVertices) throw std::invalid_argument("n must lie in 4..64");
  if (config.partition) {
    const auto& p = *config.partition;
    if (p.count < 1 || p.index < 0 || p.index >= p.count) {
      throw std::invalid_argument("partition index must lie in 0..count-1");
    }
  }
}

// First-level branches of segment k, in search order.
int first_level_jobs(const EnumerationConfig& config, int k) {
  SegmentSearch search(config, k, nullptr);
  const std::function<bool(int)> none = [](int) { return false; };
  return search.run(0, &none);
}

}  // namespace

int partition_job_count(const EnumerationConfig& config) {
  check_config(config);
  int total = 0;
  for (int k : segment_order(config)) total += first_level_jobs(config, k);
  return total;
}

SearchStats enumerate_segment(const EnumerationConfig& config, int k, const SurfaceSink& sink) {
  check_config(config);
  SegmentSearch search(config, k, &sink);
  search.run(0, nullptr);
  return search.stats();
}

SearchStats enumerate_raw(const EnumerationConfig& config, const SurfaceSink& sink) {
  check_config(config);
  SearchStats total;
  int job_base = 0;
  std::function<bool(int)> filter;
  if (config.partition) {
    const Partition p = *config.partition;
    filter = [p](int job) { return job % p.count == p.index; };
  }
  for (int k : segment_order(config)) {
    SegmentSearch search(config, k, &sink);
    job_base += search.run(job_base, config.partition ? &filter : nullptr);
    total.nodes += search.stats().nodes;
    total.candidates += search.stats().candidates;
    total.emitted += search.stats().emitted;
  }
  return total;
}

}  // namespace surfenum

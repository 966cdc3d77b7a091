#pragma once

// Lexicographic and mixed-lexicographic backtracking over triangle sets.
//
// Triangles are added in increasing lex order on top of a beginning segment
// B_k (the canonical star of vertex 1 with degree k). The search keeps the
// edge multiplicities and, for every vertex, its partial link as a set of
// paths, so that closing a link cycle and the prunes are O(1) per step.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "surfenum/complex.hpp"

namespace surfenum {

enum class Order { Lex, MixedLex };

struct Partition {
  int index = 0;  // 0-based
  int count = 1;
};

struct EnumerationConfig {
  int n = 4;
  Order order = Order::Lex;
  /// Emit every verified candidate of the search instead of one canonical
  /// representative per class.
  bool emit_isomorphic_duplicates = false;
  /// Run only the jobs (k, first triangle after B_k) with job % count == index.
  std::optional<Partition> partition;
  /// The two "23j / 24j" exclusions for B_k; off only for differential tests.
  bool symmetry_exclusions = true;
};

struct BeginningSegment {
  int k = 0;
  std::vector<Triangle> triangles;
};

/// {123, 124} + {1 j j+2 : 3 <= j <= k-1} + {1 k k+1}. Throws for k < 3.
BeginningSegment beginning_segment(int k);

/// Mutable search state: chosen triangles, edge sums and per-vertex link paths.
/// Owned by one search at a time.
class SearchState {
 public:
  SearchState(int n, Order order, int k);

  int n() const { return n_; }
  Order order() const { return order_; }
  int k() const { return k_; }

  /// Adds `t`. Returns false (state unchanged) if an edge would exceed
  /// multiplicity two. Link anomalies and degree violations are recorded
  /// and reported by the prune predicates, not rejected here.
  bool push(const Triangle& t);
  void pop();

  std::span<const Triangle> chosen() const { return chosen_; }
  int edge_count(VertexId u, VertexId v) const { return count_[edge_id(u, v)]; }
  /// No edge has multiplicity one and at least one edge is used.
  bool closed() const { return open_edges_ == 0 && !chosen_.empty(); }
  bool vertex_closed(VertexId v) const { return vx_[v].cycles == 1 && vx_[v].components == 1; }
  int degree(VertexId v) const { return vx_[v].degree; }
  int link_edge_count(VertexId v) const { return vx_[v].link_edges; }
  int link_anomalies() const { return anomalies_; }
  int degree_violations() const { return violations_; }
  /// Third vertex x of a chosen triangle {2,3,x}, or 0.
  int partner_of_23() const { return partner23_; }

  EdgeSumVector edge_sums() const;

 private:
  friend class SegmentSearch;

  struct VertexState {
    int link_edges = 0;
    int degree = 0;
    int components = 0;  // paths plus cycles in the link
    int cycles = 0;
    int cycle_length = 0;
  };

  struct LinkUndo {
    std::uint8_t kind = 0;
    std::uint8_t o1 = 0;
    std::uint8_t o2 = 0;
  };

  struct PushRecord {
    std::array<LinkUndo, 3> undo{};
    int anomalies = 0;
    int violations = 0;
    int partner23 = 0;
  };

  int edge_id(int u, int v) const { return edge_ids_[u * (kMaxVertices + 1) + v]; }
  bool anomalous(int v) const { return vx_[v].cycles >= 1 && vx_[v].components >= 2; }
  bool violating(int v) const;
  LinkUndo add_link_edge(int v, int p, int q, int dp, int dq);
  void remove_link_edge(int v, int p, int q, const LinkUndo& u);

  int n_;
  Order order_;
  int k_;
  std::vector<int> edge_ids_;
  std::vector<std::uint8_t> count_;
  int open_edges_ = 0;
  std::vector<std::uint64_t> open_bits_;
  std::vector<VertexState> vx_;
  // For an end vertex u of a link path of v: the other end, and the path length.
  std::vector<std::uint8_t> path_end_;
  std::vector<std::uint8_t> path_len_;
  std::vector<Triangle> chosen_;
  std::vector<PushRecord> records_;
  int anomalies_ = 0;
  int violations_ = 0;
  int partner23_ = 0;

  std::uint8_t& end_of(int v, int u) { return path_end_[v * (kMaxVertices + 1) + u]; }
  std::uint8_t& len_of(int v, int u) { return path_len_[v * (kMaxVertices + 1) + u]; }
};

/// Adding `t` would push some edge above multiplicity two.
bool prune_edge_overflow(const SearchState& state, const Triangle& t);
/// Some vertex link is a closed circle plus at least one more edge.
bool prune_link_anomaly(const SearchState& state);
/// Lex: a link closed into a circle shorter than k. MixedLex: a degree or link
/// edge count above k.
bool prune_degree_bounds(const SearchState& state);
/// `t` is one of the triangles excluded by the symmetry of B_k.
bool prune_symmetry_exclusions(const SearchState& state, const Triangle& t);
/// The chosen set if it is closed, uses all n vertices and is a surface.
std::optional<TriangleSet> finalize_candidate(const SearchState& state);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t candidates = 0;  // closed sets reached
  std::uint64_t emitted = 0;
};

using SurfaceSink = std::function<void(const TriangleSet&)>;

/// Raw search: every verified surface reached by the backtracking, in search
/// order (Lex: B_3 upward, strictly increasing; MixedLex: B_{n-1} downward,
/// increasing within each segment). Isomorphic copies are not removed.
SearchStats enumerate_raw(const EnumerationConfig& config, const SurfaceSink& sink);

/// Raw search for a single beginning segment.
SearchStats enumerate_segment(const EnumerationConfig& config, int k, const SurfaceSink& sink);

/// Full enumeration. Unless `emit_isomorphic_duplicates` is set, the raw stream
/// is deduplicated and each class is returned as its lex-minimal labelling:
/// Lex order sorts them increasingly; MixedLex groups them by maximal vertex
/// degree (n-1 down to 3), increasing within each group.
std::vector<TriangleSet> enumerate(const EnumerationConfig& config);

/// Number of (k, first triangle) jobs the partitioned search distributes.
int partition_job_count(const EnumerationConfig& config);

}  // namespace surfenum

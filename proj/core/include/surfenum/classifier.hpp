#pragma once

// Combinatorial invariants, isomorphism, canonical labelling and topological
// type of triangulated surfaces.

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "surfenum/complex.hpp"

namespace surfenum {

using BigInt = boost::multiprecision::cpp_int;

/// Sorted vertex degrees (number of neighbours).
std::vector<int> degree_sequence(const TriangleSet& c);

/// det(A A^T) for the n x f2 vertex-triangle incidence matrix A, exact.
BigInt as_determinant(const TriangleSet& c);

struct InvariantKey {
  FVector f;
  std::vector<int> degrees;
  BigInt as_determinant;

  friend bool operator==(const InvariantKey&, const InvariantKey&) = default;
  friend bool operator<(const InvariantKey& x, const InvariantKey& y);
};

InvariantKey invariant_key(const TriangleSet& c);

struct Homology {
  int h0_rank = 1;
  int h1_rank = 0;
  bool h1_torsion = false;  // a Z_2 summand
  int h2_rank = 1;
  auto operator<=>(const Homology&) const = default;
};

struct TopologicalType {
  int euler_characteristic = 2;
  bool orientable = true;
  int genus = 0;
  Homology homology;

  /// S2, T2, RP2, K2, otherwise M(g,+) / M(g,-).
  std::string name() const;
  /// Filename-safe form: S2, T2, RP2, K2, M2+, M3-.
  std::string tag() const;

  auto operator<=>(const TopologicalType&) const = default;
};

/// Throws std::invalid_argument when no closed surface has this χ and orientability.
TopologicalType topological_type(int euler_characteristic, bool orientable);
/// Inverse of TopologicalType::name().
TopologicalType topological_type_from_name(const std::string& name);
/// Orientable by genus, then non-orientable by genus.
bool type_display_less(const TopologicalType& x, const TopologicalType& y);

/// Heawood's lower bound on the vertex count, plus one for M(2,+), K2 and M(3,-).
int heawood_min_vertices(const TopologicalType& type);

bool orientability(const TriangleSet& c);
bool is_neighborly(const TriangleSet& c);

bool are_isomorphic(const TriangleSet& a, const TriangleSet& b);

/// The lexicographically smallest relabelled copy of a connected surface.
TriangleSet canonical_form(const TriangleSet& c);

std::uint64_t automorphism_group_order(const TriangleSet& c);

struct SurfaceRecord {
  TriangleSet complex;  // canonical form
  InvariantKey key;
  TopologicalType type;
  std::uint64_t automorphism_order = 1;
  bool neighborly = false;
  /// Position of the first input that fell into this class.
  std::size_t source_index = 0;
};

/// Builds the full record for one verified surface (computes the canonical form).
SurfaceRecord classify_surface(const TriangleSet& c, std::size_t source_index = 0);

/// Incremental deduplication: buckets by a cheap isomorphism invariant, then
/// isomorphism tests against the representatives of the bucket. The full
/// InvariantKey is computed once per class in finish().
class Deduplicator {
 public:
  Deduplicator();
  ~Deduplicator();
  Deduplicator(Deduplicator&&) noexcept;
  Deduplicator& operator=(Deduplicator&&) noexcept;

  /// Returns true if `c` starts a new class. `index` is recorded as its source.
  bool add(const TriangleSet& c, std::size_t index);
  std::size_t class_count() const;
  std::size_t seen() const;
  /// First member of every class, in insertion order.
  std::vector<TriangleSet> representatives() const;

  /// One record per class, sorted by canonical form. Records are completed on
  /// `threads` workers; the result does not depend on the worker count.
  std::vector<SurfaceRecord> finish(int threads = 1) &&;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::vector<SurfaceRecord> deduplicate(std::span<const TriangleSet> surfaces, int threads = 1);

}  // namespace surfenum

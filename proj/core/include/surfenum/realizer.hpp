#pragma once

// Random search for straight-line embeddings of orientable surfaces in R^3,
// reuse of found coordinates on other complexes, perturbation and shrinking.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfenum/complex.hpp"
#include "surfenum/geometry.hpp"
#include "surfenum/rng.hpp"

namespace surfenum {

struct RealizationConfig {
  std::int64_t cube_side = 32768;  // coordinates drawn from {0, ..., k-1}
  std::uint64_t seed = 0;
  std::uint64_t max_tries = 1000000;
  std::int64_t delta = 8;  // perturbation radius
  bool recycle = false;
  int threads = 1;
};

enum class Provenance { Fresh, Recycled, Perturbed, Shrunk };
std::string to_string(Provenance p);

struct RealizationResult {
  CoordinateAssignment coords;
  std::uint64_t tries_used = 0;
  Provenance provenance = Provenance::Fresh;
};

/// Try number `attempt` of stream `stream`: n points uniform in the cube.
CoordinateAssignment random_coordinates(int n, const RealizationConfig& config, std::uint32_t stream,
                                        std::uint64_t attempt);

/// Fresh random tries until an embedding is found or max_tries is reached.
/// With threads = w > 1 the tries run on streams 0..w-1 in lockstep rounds and
/// the lowest stream with a success in the first successful round wins;
/// tries_used then counts every try of the completed rounds.
/// Throws std::invalid_argument for a non-orientable complex.
std::optional<RealizationResult> random_realize(const TriangleSet& c, const RealizationConfig& config);

/// All (target index, pool index) pairs whose coordinates embed the target,
/// target-major.
std::vector<std::pair<std::size_t, std::size_t>> recycle(const std::vector<CoordinateAssignment>& pool,
                                                         const std::vector<TriangleSet>& targets);

/// Offsets every coordinate by an independent uniform integer in [-delta, delta].
CoordinateAssignment perturb(const CoordinateAssignment& coords, std::int64_t delta, CounterRng& rng);

/// Smaller coordinates for an embedding: translate to the nonnegative orthant,
/// halve while the result embeds, then greedy unit decrements; repeated to a
/// fixed point. Never returns a larger max-norm than the input.
CoordinateAssignment shrink(const TriangleSet& c, const CoordinateAssignment& coords);

/// One line per vertex: `<vertex-id> <x> <y> <z>`.
void write_coordinates(std::ostream& out, const CoordinateAssignment& coords);
/// Throws std::runtime_error on malformed input, missing or repeated ids.
CoordinateAssignment read_coordinates(std::istream& in);
CoordinateAssignment read_coordinate_file(const std::string& path);

void write_off(std::ostream& out, const TriangleSet& c, const CoordinateAssignment& coords);

}  // namespace surfenum

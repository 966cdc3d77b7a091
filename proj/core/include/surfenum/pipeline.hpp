#pragma once

// Enumeration followed by classification.

#include <vector>

#include "surfenum/classifier.hpp"
#include "surfenum/enumerator.hpp"

namespace surfenum {

/// One record per combinatorial class found by the search, in the output
/// order documented for enumerate(). With threads > 1 the first-level jobs
/// are split across workers; the result does not depend on the thread count.
std::vector<SurfaceRecord> enumerate_classified(const EnumerationConfig& config, int threads = 1);

/// Largest vertex degree of the complex.
int max_degree(const TriangleSet& c);

}  // namespace surfenum

#include "surfenum/pipeline.hpp"

#include <algorithm>
#include <thread>

namespace surfenum {

int max_degree(const TriangleSet& c) {
  const auto d = vertex_degrees(c);
  return *std::max_element(d.begin(), d.end());
}

std::vector<SurfaceRecord> enumerate_classified(const EnumerationConfig& config, int threads) {
  const int workers = std::max(1, threads);
  Deduplicator merged;
  if (workers == 1 || config.partition) {
    std::size_t index = 0;
    enumerate_raw(config, [&](const TriangleSet& c) { merged.add(c, index++); });
  } else {
    // Each worker searches a static slice of the first-level jobs and keeps
    // its own classes; the slices are merged in worker order.
    std::vector<Deduplicator> local(static_cast<std::size_t>(workers));
    {
      std::vector<std::jthread> pool;
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          EnumerationConfig part = config;
          part.partition = Partition{w, workers};
          std::size_t index = 0;
          enumerate_raw(part, [&](const TriangleSet& c) { local[static_cast<std::size_t>(w)].add(c, index++); });
        });
      }
    }
    std::size_t index = 0;
    for (const Deduplicator& d : local) {
      for (const TriangleSet& c : d.representatives()) merged.add(c, index++);
    }
  }
  std::vector<SurfaceRecord> records = std::move(merged).finish(workers);
  if (config.order == Order::MixedLex) {
    std::stable_sort(records.begin(), records.end(), [](const SurfaceRecord& x, const SurfaceRecord& y) {
      return max_degree(x.complex) > max_degree(y.complex);
    });
  }
  return records;
}

std::vector<TriangleSet> enumerate(const EnumerationConfig& config) {
  std::vector<TriangleSet> out;
  if (config.emit_isomorphic_duplicates) {
    enumerate_raw(config, [&](const TriangleSet& c) { out.push_back(c); });
    return out;
  }
  for (SurfaceRecord& r : enumerate_classified(config)) out.push_back(std::move(r.complex));
  return out;
}

}  // namespace surfenum

#include "surfenum/realizer.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "surfenum/classifier.hpp"

namespace surfenum {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Fresh:
      return "fresh";
    case Provenance::Recycled:
      return "recycled";
    case Provenance::Perturbed:
      return "perturbed";
    case Provenance::Shrunk:
      return "shrunk";
  }
  return "unknown";
}

CoordinateAssignment random_coordinates(int n, const RealizationConfig& config, std::uint32_t stream,
                                        std::uint64_t attempt) {
  if (config.cube_side < 2) throw std::invalid_argument("cube side must be at least 2");
  CounterRng rng(config.seed, stream, attempt);
  const auto k = static_cast<std::uint64_t>(config.cube_side);
  CoordinateAssignment out;
  out.points.resize(static_cast<std::size_t>(n));
  for (Point3& p : out.points) {
    p.x = static_cast<std::int64_t>(rng.uniform(k));
    p.y = static_cast<std::int64_t>(rng.uniform(k));
    p.z = static_cast<std::int64_t>(rng.uniform(k));
  }
  return out;
}

std::optional<RealizationResult> random_realize(const TriangleSet& c, const RealizationConfig& config) {
  if (!orientability(c)) {
    throw std::invalid_argument("closed non-orientable surfaces do not embed in 3-space");
  }
  const EmbeddingChecker check(c);
  const int workers = std::max(1, config.threads);
  if (workers == 1) {
    for (std::uint64_t t = 0; t < config.max_tries; ++t) {
      CoordinateAssignment coords = random_coordinates(c.n(), config, 0, t);
      if (check(coords)) return RealizationResult{std::move(coords), t + 1, Provenance::Fresh};
    }
    return std::nullopt;
  }

  // Lockstep rounds of `batch` tries per stream.
  constexpr std::uint64_t kBatch = 256;
  const std::uint64_t per_stream = (config.max_tries + workers - 1) / static_cast<std::uint64_t>(workers);
  std::vector<std::optional<std::uint64_t>> hit(static_cast<std::size_t>(workers));
  for (std::uint64_t begin = 0; begin < per_stream; begin += kBatch) {
    const std::uint64_t end = std::min(per_stream, begin + kBatch);
    {
      std::vector<std::jthread> pool;
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::uint64_t t = begin; t < end; ++t) {
            if (check(random_coordinates(c.n(), config, static_cast<std::uint32_t>(w), t))) {
              hit[static_cast<std::size_t>(w)] = t;
              return;
            }
          }
        });
      }
    }
    for (int w = 0; w < workers; ++w) {
      if (const auto& t = hit[static_cast<std::size_t>(w)]) {
        return RealizationResult{random_coordinates(c.n(), config, static_cast<std::uint32_t>(w), *t),
                                 end * static_cast<std::uint64_t>(workers), Provenance::Fresh};
      }
    }
  }
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> recycle(const std::vector<CoordinateAssignment>& pool,
                                                         const std::vector<TriangleSet>& targets) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const EmbeddingChecker check(targets[t]);
    for (std::size_t p = 0; p < pool.size(); ++p) {
      if (pool[p].n() != targets[t].n()) throw std::invalid_argument("pool and target sizes differ");
      if (check(pool[p])) out.emplace_back(t, p);
    }
  }
  return out;
}

CoordinateAssignment perturb(const CoordinateAssignment& coords, std::int64_t delta, CounterRng& rng) {
  if (delta < 0) throw std::invalid_argument("perturbation radius must be nonnegative");
  CoordinateAssignment out = coords;
  if (delta == 0) return out;
  for (Point3& p : out.points) {
    p.x += rng.uniform_int(-delta, delta);
    p.y += rng.uniform_int(-delta, delta);
    p.z += rng.uniform_int(-delta, delta);
  }
  return out;
}

namespace {

CoordinateAssignment translated_to_origin(CoordinateAssignment coords) {
  if (coords.points.empty()) return coords;
  Point3 lo = coords.points.front();
  for (const Point3& p : coords.points) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    lo.z = std::min(lo.z, p.z);
  }
  for (Point3& p : coords.points) {
    p.x -= lo.x;
    p.y -= lo.y;
    p.z -= lo.z;
  }
  return coords;
}

}  // namespace

CoordinateAssignment shrink(const TriangleSet& c, const CoordinateAssignment& coords) {
  const EmbeddingChecker check(c);
  if (!check(coords)) throw std::invalid_argument("shrink requires an embedding");
  CoordinateAssignment cur = translated_to_origin(coords);
  if (!check(cur)) cur = coords;  // cannot happen: predicates are translation invariant
  bool changed = true;
  while (changed) {
    changed = false;
    while (true) {
      CoordinateAssignment half = cur;
      for (Point3& p : half.points) {
        p.x = (p.x + 1) / 2;
        p.y = (p.y + 1) / 2;
        p.z = (p.z + 1) / 2;
      }
      if (half == cur || !check(half)) break;
      cur = std::move(half);
      changed = true;
    }
    for (bool progress = true; progress;) {
      progress = false;
      for (Point3& p : cur.points) {
        for (std::int64_t Point3::*axis : {&Point3::x, &Point3::y, &Point3::z}) {
          while (p.*axis > 0) {
            --(p.*axis);
            if (check(cur)) {
              progress = changed = true;
            } else {
              ++(p.*axis);
              break;
            }
          }
        }
      }
    }
  }
  return max_norm(cur) <= max_norm(coords) ? cur : coords;
}

void write_coordinates(std::ostream& out, const CoordinateAssignment& coords) {
  for (int v = 1; v <= coords.n(); ++v) {
    const Point3& p = coords[v];
    out << v << ' ' << p.x << ' ' << p.y << ' ' << p.z << '\n';
  }
}

CoordinateAssignment read_coordinates(std::istream& in) {
  std::map<long long, Point3> by_id;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long id = 0;
    Point3 p;
    std::string extra;
    if (!(fields >> id >> p.x >> p.y >> p.z) || (fields >> extra)) {
      throw std::runtime_error("coordinates line " + std::to_string(line_number) + ": expected <id> <x> <y> <z>");
    }
    if (id < 1 || id > kMaxVertices) {
      throw std::runtime_error("coordinates line " + std::to_string(line_number) + ": vertex id out of range");
    }
    if (!by_id.emplace(id, p).second) {
      throw std::runtime_error("coordinates line " + std::to_string(line_number) + ": repeated vertex id");
    }
  }
  CoordinateAssignment out;
  long long expect = 1;
  for (const auto& [id, p] : by_id) {
    if (id != expect) throw std::runtime_error("coordinates: vertex " + std::to_string(expect) + " missing");
    ++expect;
    out.points.push_back(p);
  }
  return out;
}

CoordinateAssignment read_coordinate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_coordinates(in);
}

void write_off(std::ostream& out, const TriangleSet& c, const CoordinateAssignment& coords) {
  out << "OFF\n" << coords.n() << ' ' << c.size() << " 0\n";
  for (const Point3& p : coords.points) {
    out << static_cast<double>(p.x) << ' ' << static_cast<double>(p.y) << ' ' << static_cast<double>(p.z) << '\n';
  }
  for (const Triangle& t : c.triangles()) {
    out << "3 " << t.a - 1 << ' ' << t.b - 1 << ' ' << t.c - 1 << '\n';
  }
}

}  // namespace surfenum

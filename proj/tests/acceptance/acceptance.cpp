// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Optional arguments restrict the run to the listed criterion numbers.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "surfenum/app/catalog.hpp"
#include "surfenum/app/commands.hpp"
#include "surfenum/classifier.hpp"
#include "surfenum/pipeline.hpp"
#include "surfenum/realizer.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace surfenum;

namespace {

using Counts = std::map<std::string, int>;

// Published counts of triangulated surfaces by vertex count and type.
const std::map<int, Counts> kTable = {
    {4, {{"S2", 1}}},
    {5, {{"S2", 1}}},
    {6, {{"S2", 2}, {"RP2", 1}}},
    {7, {{"S2", 5}, {"T2", 1}, {"RP2", 3}}},
    {8, {{"S2", 14}, {"T2", 7}, {"RP2", 16}, {"K2", 6}}},
    {9, {{"S2", 50}, {"T2", 112}, {"RP2", 134}, {"K2", 187}, {"M(3,-)", 133}, {"M(4,-)", 37}, {"M(5,-)", 2}}},
    {10,
     {{"S2", 233},
      {"T2", 2109},
      {"M(2,+)", 865},
      {"M(3,+)", 20},
      {"RP2", 1210},
      {"K2", 4462},
      {"M(3,-)", 11784},
      {"M(4,-)", 13657},
      {"M(5,-)", 7050},
      {"M(6,-)", 1022},
      {"M(7,-)", 14}}},
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(s < 10 ? 2 : 1);
  os << std::fixed << s << "s";
  return os.str();
}

std::string show(const Counts& c) {
  std::string s;
  for (const auto& [k, v] : c) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return s;
}

Counts count_types(const std::vector<SurfaceRecord>& records) {
  Counts c;
  for (const auto& r : records) ++c[r.type.name()];
  return c;
}

int run(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = app::run_cli(args, o, e);
  if (out) *out = o.str();
  return code;
}

class Workspace {
 public:
  Workspace() : root_(fs::temp_directory_path() / ("surfenum_acceptance_" + std::to_string(::getpid()))) {
    fs::remove_all(root_);
    fs::create_directories(root_);
  }
  ~Workspace() { fs::remove_all(root_); }
  std::string path(const std::string& rel) const { return (root_ / rel).string(); }

 private:
  fs::path root_;
};

class Records {
 public:
  const std::vector<SurfaceRecord>& get(int n) {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    EnumerationConfig config;
    config.n = n;
    config.order = n <= 9 ? Order::Lex : Order::MixedLex;
    const auto t0 = std::chrono::steady_clock::now();
    auto records = enumerate_classified(config);
    seconds_[n] = since(t0);
    return cache_.emplace(n, std::move(records)).first->second;
  }
  double seconds(int n) const { return seconds_.at(n); }

 private:
  std::map<int, std::vector<SurfaceRecord>> cache_;
  std::map<int, double> seconds_;
};

Workspace* workspace = nullptr;
Records records;

Outcome criterion_small_counts() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (int n = 4; n <= 8; ++n) {
    const std::string list = workspace->path("n" + std::to_string(n) + ".txt");
    const std::string report = workspace->path("n" + std::to_string(n) + ".json");
    if (run({"enumerate", "--n", std::to_string(n), "--out", list}) != 0 ||
        run({"classify", "--in", list, "--report", report}) != 0) {
      return {false, "command failed at n=" + std::to_string(n)};
    }
    std::ifstream in(report);
    const json r = json::parse(in);
    Counts got;
    for (const auto& [type, entry] : r["by_n"][std::to_string(n)]["types"].items()) got[type] = entry["count"];
    if (got != kTable.at(n)) {
      ok = false;
      detail += " n=" + std::to_string(n) + " got {" + show(got) + "}";
    }
  }
  const double s = since(t0);
  return {ok && s < 10, (ok ? "all counts match" : "mismatch:" + detail) + ", " + fmt_seconds(s) + " (limit 10s)"};
}

Outcome criterion_counts(int n, double limit) {
  const auto& r = records.get(n);
  const Counts got = count_types(r);
  const bool ok = got == kTable.at(n);
  std::string detail = "total " + std::to_string(r.size()) + (ok ? "" : " {" + show(got) + "}") + ", " +
                       fmt_seconds(records.seconds(n)) + " (limit " + fmt_seconds(limit) + ")";
  if (n == 10) {
    const SurfaceRecord* most = nullptr;
    std::size_t ordinal = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i].type.name() == "M(2,+)" && (!most || r[i].automorphism_order > most->automorphism_order)) {
        most = &r[i];
        ordinal = i + 1;
      }
    }
    if (most) {
      detail += "; largest M(2,+) symmetry group has order " + std::to_string(most->automorphism_order) + " at " +
                app::entry_name(10, static_cast<int>(ordinal));
    }
  }
  return {ok && records.seconds(n) < limit, detail};
}

Outcome criterion_mode_equivalence() {
  bool ok = true;
  std::string detail;
  for (int n : {7, 8}) {
    EnumerationConfig config;
    config.n = n;
    config.order = Order::Lex;
    const auto lex = enumerate(config);
    config.order = Order::MixedLex;
    const auto mixed = enumerate(config);
    const std::set<TriangleSet> a(lex.begin(), lex.end()), b(mixed.begin(), mixed.end());
    ok = ok && a == b && a.size() == lex.size() && b.size() == mixed.size();
    detail += " n=" + std::to_string(n) + ": " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
  }
  return {ok, "canonical sets" + detail};
}

Outcome criterion_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (int n = 4; n <= 7; ++n) {
    std::set<TriangleSet> expected;
    for (const auto& tris : oracle::brute_force_surfaces(n)) expected.insert(TriangleSet(n, tris));
    EnumerationConfig config;
    config.n = n;
    const auto got = enumerate(config);
    const std::set<TriangleSet> actual(got.begin(), got.end());
    ok = ok && actual == expected;
    detail += " n=" + std::to_string(n) + ":" + std::to_string(actual.size()) + "/" + std::to_string(expected.size());
  }
  return {ok, "enumerated/oracle classes" + detail + ", " + fmt_seconds(since(t0))};
}

Outcome criterion_csaszar() {
  const std::string complex = workspace->path("csaszar.txt");
  const std::string coords = workspace->path("csaszar.coords");
  {
    std::ofstream(complex) << format_complex(test::mobius_torus()) << '\n';
    std::ofstream out(coords);
    write_coordinates(out, test::csaszar_coordinates());
  }
  const bool accepted = run({"verify", "--complex", complex, "--coords", coords}) == 0;
  int breaking = 0, rejected = 0, harmless = 0, harmless_accepted = 0;
  for (int v = 1; v <= 7; ++v) {
    for (int axis = 0; axis < 3; ++axis) {
      for (int delta : {-1, 1}) {
        CoordinateAssignment x = test::csaszar_coordinates();
        (axis == 0 ? x[v].x : axis == 1 ? x[v].y : x[v].z) += delta;
        const std::string path = workspace->path("corrupt.coords");
        {
          std::ofstream out(path);
          write_coordinates(out, x);
        }
        const bool ok = run({"verify", "--complex", complex, "--coords", path}) == 0;
        const auto truth = oracle::embeds_by_rational_intersection(test::mobius_torus(), x);
        if (truth && *truth) {
          ++harmless;
          harmless_accepted += ok;
        } else {
          ++breaking;
          rejected += !ok;
        }
      }
    }
  }
  return {accepted && rejected == breaking && harmless_accepted == harmless,
          std::string("original ") + (accepted ? "accepted" : "REJECTED") + "; " + std::to_string(rejected) + "/" +
              std::to_string(breaking) + " crossing or degenerate corruptions rejected; " +
              std::to_string(harmless_accepted) + "/" + std::to_string(harmless) + " harmless ones accepted"};
}

const SurfaceRecord& first_of(const std::vector<SurfaceRecord>& r, const std::string& type) {
  for (const auto& s : r) {
    if (s.type.name() == type) return s;
  }
  throw std::logic_error("no " + type);
}

Outcome criterion_realization() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& r10 = records.get(10);
  const TriangleSet& sphere = first_of(r10, "S2").complex;
  const TriangleSet& torus = first_of(r10, "T2").complex;
  RealizationConfig config;
  config.cube_side = 32768;
  std::vector<std::uint64_t> sphere_tries;
  bool sphere_all = true;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    config.seed = seed;
    config.max_tries = 1000000;
    const auto res = random_realize(sphere, config);
    sphere_all = sphere_all && res && is_embedding(sphere, res->coords);
    sphere_tries.push_back(res ? res->tries_used : config.max_tries);
  }
  std::sort(sphere_tries.begin(), sphere_tries.end());
  const double median = (sphere_tries[9] + sphere_tries[10]) / 2.0;
  int torus_ok = 0;
  std::uint64_t torus_best = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    config.seed = seed;
    config.max_tries = 5000000;
    const auto res = random_realize(torus, config);
    if (res && is_embedding(torus, res->coords)) {
      ++torus_ok;
      torus_best = torus_best ? std::min(torus_best, res->tries_used) : res->tries_used;
    }
  }
  std::ostringstream d;
  d << "sphere median tries " << median << " (target [70, 7000]); torus realized by " << torus_ok
    << "/20 seeds within 5e6 tries (fewest " << torus_best << "), " << fmt_seconds(since(t0));
  return {sphere_all && median >= 70 && median <= 7000 && torus_ok >= 1, d.str()};
}

Outcome criterion_heawood() {
  std::map<std::string, int> first;
  bool bounded = true;
  for (int n = 4; n <= 10; ++n) {
    for (const auto& r : records.get(n)) {
      first.emplace(r.type.name(), n);
      bounded = bounded && heawood_min_vertices(r.type) <= n;
    }
  }
  bool ok = bounded;
  std::string detail;
  for (const auto& [name, n] : first) {
    const int h = heawood_min_vertices(topological_type_from_name(name));
    ok = ok && h == n;
    detail += " " + name + "@" + std::to_string(n) + (h == n ? "" : "(bound " + std::to_string(h) + ")");
  }
  return {ok && first.size() == 11, std::to_string(first.size()) + " types:" + detail};
}

Outcome criterion_properties() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  std::vector<TriangleSet> pool;
  for (int n = 4; n <= 8; ++n) {
    for (const auto& r : records.get(n)) pool.push_back(r.complex);
  }
  int key_ok = 0;
  for (int i = 0; i < 1000; ++i) {
    const TriangleSet& c = pool[rng() % pool.size()];
    key_ok += invariant_key(c.relabeled(test::random_permutation(c.n(), rng))) == invariant_key(c);
  }

  int orient_ok = 0;
  std::uniform_int_distribution<std::int64_t> coord(-(std::int64_t{1} << 20), std::int64_t{1} << 20);
  auto point = [&] { return Point3{coord(rng), coord(rng), coord(rng)}; };
  for (int i = 0; i < 1000000; ++i) {
    const Point3 p = point(), q = point(), r = point(), s = point();
    orient_ok += orient3d(p, q, r, s) == oracle::orient_sign(p, q, r, s);
  }

  int shrink_ok = 0, shrink_total = 0;
  for (const auto& r : records.get(9)) {
    if (shrink_total == 50) break;
    if (r.type.name() != "S2") continue;
    RealizationConfig config;
    config.seed = static_cast<std::uint64_t>(shrink_total);
    const auto res = random_realize(r.complex, config);
    ++shrink_total;
    if (!res) continue;
    const CoordinateAssignment small = shrink(r.complex, res->coords);
    shrink_ok += is_embedding(r.complex, small) && max_norm(small) <= max_norm(res->coords);
  }

  const std::string cat = workspace->path("catalog");
  bool catalog_ok = true;
  for (int n = 4; n <= 8; ++n) catalog_ok = catalog_ok && run({"--catalog", cat, "enumerate", "--n", std::to_string(n)}) == 0;
  int round_trips = 0, entries = 0;
  if (catalog_ok) {
    const app::Catalog c = app::Catalog::open(cat);
    catalog_ok = c.validate().empty();
    for (const auto& e : c.entries()) {
      ++entries;
      round_trips += parse_complex(format_complex(e.record.complex), e.n) == e.record.complex &&
                     e.record.key == invariant_key(e.record.complex);
    }
    std::ifstream before_in(fs::path(cat) / "index.json");
    std::stringstream before;
    before << before_in.rdbuf();
    c.save();
    std::ifstream after_in(fs::path(cat) / "index.json");
    std::stringstream after;
    after << after_in.rdbuf();
    catalog_ok = catalog_ok && before.str() == after.str();
  }

  std::ostringstream d;
  d << "key invariance " << key_ok << "/1000; orient3d " << orient_ok << "/1000000; shrink " << shrink_ok << "/"
    << shrink_total << "; round-trips " << round_trips << "/" << entries << (catalog_ok ? "" : " (catalog invalid)")
    << ", " << fmt_seconds(since(t0)) << " (limit 300s)";
  return {key_ok == 1000 && orient_ok == 1000000 && shrink_ok == 50 && shrink_total == 50 && catalog_ok &&
              entries == 1 + 1 + 3 + 9 + 43 && round_trips == entries && since(t0) < 300,
          d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  Workspace ws;
  workspace = &ws;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"exact counts for n = 4..8", criterion_small_counts},
      {"exact counts for n = 9", [] { return criterion_counts(9, 300); }},
      {"exact counts for n = 10 (extended)", [] { return criterion_counts(10, 4 * 3600); }},
      {"Lex and MixedLex agree for n = 7, 8", criterion_mode_equivalence},
      {"brute-force subset oracle for n <= 7", criterion_oracle},
      {"Császár torus fixture", criterion_csaszar},
      {"realization statistics for n = 10", criterion_realization},
      {"first appearance equals the Heawood bound", criterion_heawood},
      {"property suites", criterion_properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << criteria[i].first << " -- "
              << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

#include "surfenum/app/commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "surfenum/pipeline.hpp"
#include "surfenum/text_format.hpp"

#ifndef SURFENUM_VERSION
#define SURFENUM_VERSION "unknown"
#endif

namespace surfenum::app {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct GlobalOptions {
  std::string catalog;
  int threads = 1;
  bool quiet = false;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string format_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(s < 10 ? 3 : 1) << s << "s";
  return os.str();
}

std::vector<TopologicalType> sorted_types(const std::set<std::string>& names) {
  std::vector<TopologicalType> types;
  for (const auto& nm : names) types.push_back(topological_type_from_name(nm));
  std::sort(types.begin(), types.end(), type_display_less);
  return types;
}

json counts_json(const std::vector<SurfaceRecord>& records) {
  std::map<std::string, int> counts;
  for (const auto& r : records) ++counts[r.type.name()];
  return counts;
}

void bump(json& obj, const std::string& key) {
  obj[key] = obj.contains(key) ? obj[key].get<int>() + 1 : 1;
}

json manifest_body(const std::string& command, const std::vector<std::string>& args, json config, double seconds,
                   json counts) {
  return {{"command", command}, {"args", args},          {"config", std::move(config)},
          {"version", SURFENUM_VERSION}, {"wall_time_s", seconds}, {"counts", std::move(counts)}};
}

// ---------------------------------------------------------------------------
// enumerate

struct EnumerateArgs {
  int n = 0;
  std::string order = "auto";
  bool raw = false;
  std::string partition;
  std::string out;
};

std::optional<Partition> parse_partition(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  int i = 0, m = 0;
  if (slash == std::string::npos ||
      std::from_chars(text.data(), text.data() + slash, i).ec != std::errc{} ||
      std::from_chars(text.data() + slash + 1, text.data() + text.size(), m).ec != std::errc{} || m < 1 || i < 1 ||
      i > m) {
    throw CLI::ValidationError("--partition", "expected i/m with 1 <= i <= m");
  }
  return Partition{i - 1, m};
}

Order resolve_order(const std::string& name, int n) {
  if (name == "lex") return Order::Lex;
  if (name == "mixed") return Order::MixedLex;
  return n <= 9 ? Order::Lex : Order::MixedLex;
}

class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw std::runtime_error("cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int run_enumerate(const GlobalOptions& g, const EnumerateArgs& a, const std::vector<std::string>& args,
                  std::ostream& out, std::ostream& err) {
  EnumerationConfig config;
  config.n = a.n;
  config.order = resolve_order(a.order, a.n);
  config.partition = parse_partition(a.partition);
  const bool to_stdout = a.out.empty() && g.catalog.empty();
  Stopwatch clock;

  if (a.raw) {
    OutputTarget target(to_stdout ? "-" : a.out, out);
    std::uint64_t written = 0;
    const SearchStats stats = enumerate_raw(config, [&](const TriangleSet& c) {
      if (!a.out.empty() || to_stdout) target.get() << format_complex(c) << '\n';
      ++written;
    });
    err << "raw:" << stats.emitted << " nodes:" << stats.nodes << " time:" << format_seconds(clock.seconds())
        << '\n';
    return kOk;
  }

  const std::vector<SurfaceRecord> records = enumerate_classified(config, g.threads);
  if (!a.out.empty() || to_stdout) {
    OutputTarget target(to_stdout ? "-" : a.out, out);
    for (const auto& r : records) target.get() << format_complex(r.complex) << '\n';
  }
  const double seconds = clock.seconds();
  if (!g.catalog.empty()) {
    Catalog cat = Catalog::open(g.catalog);
    if (config.partition) {
      cat.merge(records);
    } else {
      cat.replace_n(a.n, records);
    }
    cat.save();
    json cfg = {{"n", a.n},
                {"order", config.order == Order::Lex ? "lex" : "mixed"},
                {"partition", a.partition},
                {"threads", g.threads}};
    cat.write_manifest("enumerate", manifest_body("enumerate", args, cfg, seconds, counts_json(records)));
  }
  err << type_summary(records) << " time:" << format_seconds(seconds) << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// classify

struct ClassifyArgs {
  std::string in;
  std::string report;
};

int run_classify(const GlobalOptions& g, const ClassifyArgs& a, const std::vector<std::string>& args,
                 std::ostream& out, std::ostream& err) {
  Stopwatch clock;
  const std::vector<NumberedComplex> input = read_complex_file(a.in);
  std::vector<int> rejected;
  std::vector<int> line_of;
  Deduplicator dedup;
  for (const NumberedComplex& nc : input) {
    if (!verify_surface(nc.complex)) {
      rejected.push_back(nc.line);
      continue;
    }
    dedup.add(nc.complex, line_of.size());
    line_of.push_back(nc.line);
  }
  const std::vector<SurfaceRecord> records = std::move(dedup).finish(g.threads);

  json by_n = json::object();
  for (const SurfaceRecord& r : records) {
    json& slot = by_n[std::to_string(r.complex.n())];
    json& t = slot["types"][r.type.name()];
    bump(t, "count");
    t["lines"].push_back(line_of[r.source_index]);
    bump(slot, "total");
  }
  for (auto& [n, slot] : by_n.items()) {
    for (auto& [name, t] : slot["types"].items()) {
      auto lines = t["lines"].get<std::vector<int>>();
      std::sort(lines.begin(), lines.end());
      t["lines"] = lines;
    }
  }
  const json report = {{"input", a.in},
                       {"complexes", input.size()},
                       {"total", records.size()},
                       {"by_n", by_n},
                       {"rejected", rejected}};
  if (!a.report.empty()) {
    OutputTarget target(a.report, out);
    target.get() << report.dump(1) << '\n';
  }
  const double seconds = clock.seconds();
  if (!g.catalog.empty()) {
    Catalog cat = Catalog::open(g.catalog);
    const std::size_t added = cat.merge(records);
    cat.save();
    cat.write_manifest("classify", manifest_body("classify", args, {{"in", a.in}, {"threads", g.threads}},
                                                 seconds, counts_json(records)));
    if (!g.quiet) err << "catalog: " << added << " new classes\n";
  }
  for (int line : rejected) err << a.in << ':' << line << ": not a triangulated surface\n";
  err << type_summary(records) << " time:" << format_seconds(seconds) << '\n';
  return rejected.empty() ? kOk : kFailure;
}

// ---------------------------------------------------------------------------
// realize

struct RealizeArgs {
  std::string in;
  std::string out_dir;
  std::optional<int> n;
  std::string type;
  bool all = false;
  bool shrink = false;
  RealizationConfig config;
};

int run_realize(const GlobalOptions& g, RealizeArgs a, const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  Stopwatch clock;
  a.config.threads = g.threads;
  CampaignOptions options;
  options.config = a.config;
  options.shrink = a.shrink;
  std::ostringstream sink;
  std::ostream& log = g.quiet ? static_cast<std::ostream&>(sink) : err;

  if (!a.in.empty()) {
    if (a.out_dir.empty()) throw CLI::ValidationError("--out-dir", "required with --in");
    fs::create_directories(a.out_dir);
    // A throwaway catalog rooted at the output directory; its index is never saved.
    Catalog target(a.out_dir);
    for (const NumberedComplex& nc : read_complex_file(a.in)) {
      if (!verify_surface(nc.complex)) throw std::runtime_error(a.in + ":" + std::to_string(nc.line) +
                                                                ": not a triangulated surface");
      CatalogEntry e;
      e.n = nc.complex.n();
      e.ordinal = nc.line;
      e.name = "line" + std::to_string(nc.line);
      e.record.complex = nc.complex;
      e.record.type = topological_type(euler_characteristic(nc.complex), orientability(nc.complex));
      target.entries().push_back(std::move(e));
    }
    const CampaignSummary s = run_realize_campaign(target, {}, options, log);
    for (const CatalogEntry& e : target.entries()) {
      out << a.in << ':' << e.ordinal << ' ' << e.record.type.name() << ' ';
      if (!e.realization) {
        out << "skipped (non-orientable)\n";
      } else {
        out << e.realization->status;
        if (!e.realization->coords_file.empty()) out << ' ' << e.realization->coords_file;
        out << " tries:" << e.realization->tries << '\n';
      }
    }
    err << "realized:" << (s.fresh + s.recycled + s.perturbed) << " of " << s.targets
        << " time:" << format_seconds(clock.seconds()) << '\n';
    return kOk;
  }

  if (g.catalog.empty()) throw CLI::ValidationError("realize", "needs --in or --catalog");
  Catalog cat = Catalog::open(g.catalog);
  CampaignSelection sel;
  sel.n = a.n;
  if (!a.type.empty()) sel.type = topological_type_from_name(a.type).name();
  sel.include_realized = a.all;
  const CampaignSummary s = run_realize_campaign(cat, sel, options, log);
  cat.save();
  const double seconds = clock.seconds();
  json cfg = {{"cube", a.config.cube_side}, {"seed", a.config.seed},     {"max_tries", a.config.max_tries},
              {"delta", a.config.delta},    {"recycle", a.config.recycle}, {"shrink", a.shrink},
              {"n", a.n ? json(*a.n) : json(nullptr)}, {"type", a.type},  {"all", a.all},
              {"threads", g.threads}};
  json counts = {{"targets", s.targets},
                 {"fresh", s.fresh},
                 {"recycled", s.recycled},
                 {"perturbed", s.perturbed},
                 {"unrealized", s.unrealized}};
  cat.write_manifest("realize", manifest_body("realize", args, cfg, seconds, counts));
  err << "targets:" << s.targets << " fresh:" << s.fresh << " recycled:" << s.recycled
      << " perturbed:" << s.perturbed << " unrealized:" << s.unrealized << " time:" << format_seconds(seconds)
      << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string complex;
  std::string coords;
};

NumberedComplex load_complex_ref(const std::string& ref) {
  std::string path = ref;
  std::optional<int> line;
  const auto colon = ref.rfind(':');
  if (colon != std::string::npos && colon + 1 < ref.size() &&
      std::all_of(ref.begin() + static_cast<std::ptrdiff_t>(colon) + 1, ref.end(),
                  [](char ch) { return ch >= '0' && ch <= '9'; })) {
    path = ref.substr(0, colon);
    line = std::stoi(ref.substr(colon + 1));
  }
  const auto all = read_complex_file(path);
  if (!line) {
    if (all.size() != 1) throw std::runtime_error(path + " holds " + std::to_string(all.size()) +
                                                  " complexes; use <file>:<line>");
    return all.front();
  }
  for (const auto& nc : all) {
    if (nc.line == *line) return nc;
  }
  throw std::runtime_error(path + ": no complex on line " + std::to_string(*line));
}

int run_verify(const GlobalOptions& g, const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.complex.empty()) {
    if (g.catalog.empty()) throw CLI::ValidationError("verify", "needs --complex or --catalog");
    const Catalog cat = Catalog::open(g.catalog);
    const auto problems = cat.validate();
    for (const auto& p : problems) err << p << '\n';
    out << "catalog: " << cat.entries().size() << " entries, " << problems.size() << " problems\n";
    return problems.empty() ? kOk : kFailure;
  }
  const NumberedComplex nc = load_complex_ref(a.complex);
  bool ok = verify_surface(nc.complex);
  if (!ok) {
    out << "surface: no\n";
    return kFailure;
  }
  const TopologicalType type = topological_type(euler_characteristic(nc.complex), orientability(nc.complex));
  out << "surface: yes " << type.name() << " chi=" << type.euler_characteristic << '\n';
  if (!a.coords.empty()) {
    const CoordinateAssignment coords = read_coordinate_file(a.coords);
    if (coords.n() != nc.complex.n()) {
      out << "embedding: no (" << coords.n() << " points for " << nc.complex.n() << " vertices)\n";
      return kFailure;
    }
    ok = is_embedding(nc.complex, coords);
    out << "embedding: " << (ok ? "yes" : "no") << '\n';
  }
  return ok ? kOk : kFailure;
}

// ---------------------------------------------------------------------------
// report

struct ReportArgs {
  std::string json_path;
};

int run_report(const GlobalOptions& g, const ReportArgs& a, std::ostream& out, std::ostream& err) {
  if (g.catalog.empty()) throw CLI::ValidationError("report", "needs --catalog");
  Catalog cat;
  try {
    cat = Catalog::open(g.catalog);
  } catch (const std::runtime_error& e) {
    err << e.what() << '\n';
    return kFailure;
  }
  const auto problems = cat.validate();
  if (!problems.empty()) {
    err << "corrupt catalog:\n";
    for (const auto& p : problems) err << "  " << p << '\n';
    return kFailure;
  }
  const json report = build_report(cat);
  if (a.json_path == "-") {
    out << report.dump(1) << '\n';
    return kOk;
  }
  print_report_table(out, report);
  const fs::path path = a.json_path.empty() ? fs::path(g.catalog) / "report.json" : fs::path(a.json_path);
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << report.dump(1) << '\n';
  return kOk;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string type_summary(const std::vector<SurfaceRecord>& records) {
  std::map<std::string, int> counts;
  std::set<std::string> names;
  for (const auto& r : records) {
    ++counts[r.type.name()];
    names.insert(r.type.name());
  }
  std::string s;
  for (const TopologicalType& t : sorted_types(names)) {
    s += t.name() + ":" + std::to_string(counts[t.name()]) + " ";
  }
  return s + "total:" + std::to_string(records.size());
}

json build_report(const Catalog& catalog) {
  json counts = json::object();
  json totals = json::object();
  json realized = json::object();
  json first = json::object();
  json heawood = json::object();
  for (const CatalogEntry& e : catalog.entries()) {
    const std::string n = std::to_string(e.n);
    const std::string t = e.record.type.name();
    bump(counts[n], t);
    bump(totals, n);
    if (e.realization && e.realization->status != "unrealized") {
      bump(realized[n], t);
    }
    if (!first.contains(t) || first[t].get<int>() > e.n) first[t] = e.n;
    heawood[t] = heawood_min_vertices(e.record.type);
  }
  return {{"counts", counts},
          {"totals", totals},
          {"total", catalog.entries().size()},
          {"realized", realized},
          {"first_appearance", first},
          {"heawood_min_vertices", heawood}};
}

void print_report_table(std::ostream& out, const json& report) {
  std::set<std::string> names;
  std::vector<int> ns;
  for (const auto& [n, by_type] : report.at("counts").items()) {
    ns.push_back(std::stoi(n));
    for (const auto& [t, c] : by_type.items()) names.insert(t);
  }
  std::sort(ns.begin(), ns.end());
  const std::vector<TopologicalType> types = sorted_types(names);
  out << std::setw(4) << "n";
  for (const auto& t : types) out << std::setw(9) << t.name();
  out << std::setw(9) << "total" << '\n';
  for (int n : ns) {
    const json& row = report["counts"][std::to_string(n)];
    out << std::setw(4) << n;
    for (const auto& t : types) {
      const int c = row.value(t.name(), 0);
      out << std::setw(9) << (c ? std::to_string(c) : "-");
    }
    out << std::setw(9) << report["totals"][std::to_string(n)].get<int>() << '\n';
  }
  if (!types.empty()) {
    out << "first appearance:";
    for (const auto& t : types) {
      out << ' ' << t.name() << '@' << report["first_appearance"][t.name()].get<int>();
    }
    out << '\n';
  }
}

namespace {

void record_realization(Catalog& cat, CatalogEntry& e, CoordinateAssignment coords, Provenance provenance,
                        std::uint64_t tries, std::uint64_t seed, bool shrink) {
  if (shrink) {
    CoordinateAssignment small = surfenum::shrink(e.record.complex, coords);
    if (!(small == coords)) {
      coords = std::move(small);
      provenance = Provenance::Shrunk;
    }
  }
  const std::string stem = "coords/" + coordinate_stem(e.record.complex);
  fs::create_directories(cat.root() / "coords");
  {
    std::ofstream f(cat.root() / (stem + ".coords"));
    if (!f) throw std::runtime_error("cannot write " + (cat.root() / (stem + ".coords")).string());
    write_coordinates(f, coords);
  }
  {
    std::ofstream f(cat.root() / (stem + ".off"));
    if (!f) throw std::runtime_error("cannot write " + (cat.root() / (stem + ".off")).string());
    write_off(f, e.record.complex, coords);
  }
  RealizationStatus st;
  st.status = to_string(provenance);
  st.coords_file = stem + ".coords";
  st.off_file = stem + ".off";
  st.tries = tries;
  st.seed = seed;
  st.max_norm = max_norm(coords);
  e.realization = st;
}

bool realized(const CatalogEntry& e) { return e.realization && e.realization->status != "unrealized"; }

}  // namespace

CampaignSummary run_realize_campaign(Catalog& catalog, const CampaignSelection& selection,
                                     const CampaignOptions& options, std::ostream& log) {
  CampaignSummary summary;
  auto& entries = catalog.entries();
  std::vector<std::size_t> targets;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const CatalogEntry& e = entries[i];
    if (!e.record.type.orientable) continue;
    if (selection.n && e.n != *selection.n) continue;
    if (selection.type && e.record.type.name() != *selection.type) continue;
    if (realized(e) && !selection.include_realized) continue;
    targets.push_back(i);
  }
  summary.targets = targets.size();

  for (std::size_t i : targets) {
    CatalogEntry& e = entries[i];
    RealizationConfig cfg = options.config;
    cfg.seed = options.config.seed + static_cast<std::uint64_t>(e.ordinal);
    if (auto r = random_realize(e.record.complex, cfg)) {
      record_realization(catalog, e, std::move(r->coords), Provenance::Fresh, r->tries_used, cfg.seed,
                         options.shrink);
      ++summary.fresh;
      log << e.name << ' ' << e.record.type.name() << " fresh after " << r->tries_used << " tries\n";
    } else {
      RealizationStatus st;
      st.tries = cfg.max_tries;
      st.seed = cfg.seed;
      e.realization = st;
      log << e.name << ' ' << e.record.type.name() << " unrealized after " << cfg.max_tries << " tries\n";
    }
  }

  if (options.config.recycle) {
    // Pool: every realized entry with the same n, grown as targets succeed.
    std::map<int, std::vector<CoordinateAssignment>> pool;
    for (const CatalogEntry& e : entries) {
      if (realized(e)) pool[e.n].push_back(read_coordinate_file((catalog.root() / e.realization->coords_file).string()));
    }
    for (bool progress = true; progress;) {
      progress = false;
      for (std::size_t i : targets) {
        CatalogEntry& e = entries[i];
        if (realized(e)) continue;
        const EmbeddingChecker check(e.record.complex);
        const auto& candidates = pool[e.n];
        std::optional<CoordinateAssignment> found;
        Provenance how = Provenance::Recycled;
        for (const auto& c : candidates) {
          if (check(c)) {
            found = c;
            break;
          }
        }
        for (std::size_t p = 0; !found && p < candidates.size(); ++p) {
          for (int k = 0; k < options.perturb_attempts && !found; ++k) {
            CounterRng rng(options.config.seed, 0x40000000u | static_cast<std::uint32_t>(e.ordinal),
                           p * static_cast<std::uint64_t>(options.perturb_attempts) + static_cast<std::uint64_t>(k));
            CoordinateAssignment moved = perturb(candidates[p], options.config.delta, rng);
            if (check(moved)) {
              found = std::move(moved);
              how = Provenance::Perturbed;
            }
          }
        }
        if (!found) continue;
        const std::uint64_t tries = e.realization ? e.realization->tries : 0;
        const std::uint64_t seed = e.realization ? e.realization->seed : options.config.seed;
        pool[e.n].push_back(*found);
        record_realization(catalog, e, std::move(*found), how, tries, seed, options.shrink);
        ++(how == Provenance::Recycled ? summary.recycled : summary.perturbed);
        log << e.name << ' ' << e.record.type.name() << ' ' << to_string(how) << '\n';
        progress = true;
      }
    }
  }
  for (std::size_t i : targets) {
    if (!realized(entries[i])) ++summary.unrealized;
  }
  return summary;
}

// ---------------------------------------------------------------------------

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate, classify and realize triangulated surfaces with few vertices.", "surfenum"};
  app.set_version_flag("--version", SURFENUM_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--catalog", g.catalog, "Catalog directory");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1, 1024))->capture_default_str();
  app.add_flag("--quiet", g.quiet, "Only print results and summaries");

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate all triangulated surfaces with n vertices");
  enumerate->add_option("--n", ea.n, "Number of vertices")->required()->check(CLI::Range(4, kMaxVertices));
  enumerate->add_option("--order", ea.order, "Search order; auto is lex for n <= 9, mixed otherwise")
      ->check(CLI::IsMember({"auto", "lex", "mixed"}))
      ->capture_default_str();
  enumerate->add_flag("--raw", ea.raw, "Emit every surface the search reaches, without isomorphism rejection");
  enumerate->add_option("--partition", ea.partition, "Run only slice i of m of the search (1-based, i/m)");
  enumerate->add_option("--out", ea.out, "Output file, one surface per line ('-' for stdout)");

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "Deduplicate and classify the surfaces in a file");
  classify->add_option("--in", ca.in, "Input file, one complex per line")->required();
  classify->add_option("--report", ca.report, "JSON report path ('-' for stdout)");

  RealizeArgs ra;
  int n_filter = 0;
  auto* realize = app.add_subcommand("realize", "Search for embeddings in 3-space by random integer coordinates");
  realize->add_option("--in", ra.in, "Input file; otherwise the catalog entries selected by --n/--type");
  realize->add_option("--out-dir", ra.out_dir, "Directory for coordinate files with --in");
  auto* n_opt = realize->add_option("--n", n_filter, "Catalog selection: vertex count");
  realize->add_option("--type", ra.type, "Catalog selection: type name such as T2 or M(2,+)");
  realize->add_flag("--all", ra.all, "Also retry entries that are already realized");
  realize->add_option("--cube", ra.config.cube_side, "Side k of the coordinate cube {0..k-1}^3")
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40))
      ->capture_default_str();
  realize->add_option("--seed", ra.config.seed, "Random seed")->capture_default_str();
  realize->add_option("--max-tries", ra.config.max_tries, "Fresh tries per target")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  realize->add_flag("--recycle", ra.config.recycle, "Reuse found coordinates on the remaining targets");
  realize->add_option("--delta", ra.config.delta, "Perturbation radius for recycling")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  realize->add_flag("--shrink", ra.shrink, "Shrink every found realization");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a complex, a realization, or the whole catalog");
  verify->add_option("--complex", va.complex, "<file>[:<line>]");
  verify->add_option("--coords", va.coords, "Coordinate file: <vertex> <x> <y> <z> per line");

  ReportArgs pa;
  auto* report = app.add_subcommand("report", "Counts by n and type for the catalog");
  report->add_option("--json", pa.json_path, "JSON output path ('-' prints only JSON); default <catalog>/report.json");

  std::vector<std::string> argv_store{"surfenum"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (n_opt->count() > 0) ra.n = n_filter;
    if (enumerate->parsed()) return run_enumerate(g, ea, args, out, err);
    if (classify->parsed()) return run_classify(g, ca, args, out, err);
    if (realize->parsed()) return run_realize(g, ra, args, out, err);
    if (verify->parsed()) return run_verify(g, va, out, err);
    if (report->parsed()) return run_report(g, pa, out, err);
    return kUsage;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << SURFENUM_VERSION << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "surfenum: " << e.what() << "\nRun with --help for usage.\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "surfenum: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "surfenum: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace surfenum::app

#include "surfenum/app/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "surfenum/text_format.hpp"

namespace surfenum::app {

namespace fs = std::filesystem;
using nlohmann::json;

std::string entry_name(int n, int ordinal) {
  // The leading 2 is the dimension of the manifold.
  return "manifold_2_" + std::to_string(n) + "_" + std::to_string(ordinal);
}

std::string surface_file_name(int n, const TopologicalType& type) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "n%02d_", n);
  return "surfaces/" + std::string(buf) + type.tag() + ".txt";
}

std::string coordinate_stem(const TriangleSet& canonical) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char ch : format_complex(canonical)) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ULL;
  char buf[40];
  std::snprintf(buf, sizeof buf, "n%02d_%016llx", canonical.n(), static_cast<unsigned long long>(h));
  return buf;
}

json key_to_json(const InvariantKey& key) {
  return {{"f", {key.f.f0, key.f.f1, key.f.f2}},
          {"degrees", key.degrees},
          {"as_determinant", key.as_determinant.str()}};
}

namespace {

json realization_to_json(const RealizationStatus& r) {
  return {{"status", r.status}, {"coords", r.coords_file}, {"off", r.off_file},
          {"tries", r.tries},   {"seed", r.seed},          {"max_norm", r.max_norm}};
}

RealizationStatus realization_from_json(const json& j) {
  RealizationStatus r;
  r.status = j.at("status").get<std::string>();
  r.coords_file = j.value("coords", "");
  r.off_file = j.value("off", "");
  r.tries = j.value("tries", std::uint64_t{0});
  r.seed = j.value("seed", std::uint64_t{0});
  r.max_norm = j.value("max_norm", std::int64_t{0});
  return r;
}

json entry_to_json(const CatalogEntry& e) {
  const SurfaceRecord& r = e.record;
  json j = {{"name", e.name},
            {"n", e.n},
            {"ordinal", e.ordinal},
            {"type", r.type.name()},
            {"orientable", r.type.orientable},
            {"euler_characteristic", r.type.euler_characteristic},
            {"file", e.file},
            {"line", e.line},
            {"key", key_to_json(r.key)},
            {"automorphism_order", r.automorphism_order},
            {"neighborly", r.neighborly}};
  j["realization"] = e.realization ? realization_to_json(*e.realization) : json(nullptr);
  return j;
}

std::vector<std::string> read_lines(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

InvariantKey key_from_json(const json& j) {
  InvariantKey k;
  const auto f = j.at("f").get<std::vector<int>>();
  if (f.size() != 3) throw std::runtime_error("f-vector must have three entries");
  k.f = {f[0], f[1], f[2]};
  k.degrees = j.at("degrees").get<std::vector<int>>();
  k.as_determinant = BigInt(j.at("as_determinant").get<std::string>());
  return k;
}

}  // namespace

Catalog Catalog::open(const fs::path& root) {
  Catalog cat(root);
  const fs::path index = root / "index.json";
  if (!fs::exists(index)) return cat;

  json doc;
  {
    std::ifstream in(index);
    if (!in) throw std::runtime_error("cannot open " + index.string());
    try {
      in >> doc;
    } catch (const json::exception& e) {
      throw std::runtime_error(index.string() + ": " + e.what());
    }
  }
  std::map<std::string, std::vector<std::string>> files;
  std::vector<std::string> problems;
  for (const json& j : doc.value("surfaces", json::array())) {
    const std::string name = j.value("name", std::string("<unnamed>"));
    try {
      CatalogEntry e;
      e.name = j.at("name").get<std::string>();
      e.n = j.at("n").get<int>();
      e.ordinal = j.at("ordinal").get<int>();
      e.file = j.at("file").get<std::string>();
      e.line = j.at("line").get<int>();
      auto it = files.find(e.file);
      if (it == files.end()) it = files.emplace(e.file, read_lines(root / e.file)).first;
      if (e.line < 1 || e.line > static_cast<int>(it->second.size())) {
        throw std::runtime_error(e.file + " has no line " + std::to_string(e.line));
      }
      e.record.complex = parse_complex(it->second[static_cast<std::size_t>(e.line) - 1], e.n, e.line);
      e.record.key = key_from_json(j.at("key"));
      e.record.type = topological_type_from_name(j.at("type").get<std::string>());
      e.record.automorphism_order = j.at("automorphism_order").get<std::uint64_t>();
      e.record.neighborly = j.at("neighborly").get<bool>();
      if (j.contains("realization") && !j["realization"].is_null()) {
        e.realization = realization_from_json(j["realization"]);
      }
      cat.entries_.push_back(std::move(e));
    } catch (const std::exception& ex) {
      problems.push_back(name + ": " + ex.what());
    }
  }
  if (!problems.empty()) {
    std::string msg = "corrupt catalog index:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw std::runtime_error(msg);
  }
  std::stable_sort(cat.entries_.begin(), cat.entries_.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return a.n != b.n ? a.n < b.n : a.ordinal < b.ordinal;
  });
  return cat;
}

void Catalog::renumber(int n) {
  std::map<std::string, int> next_line;
  int ordinal = 0;
  for (CatalogEntry& e : entries_) {
    if (e.n != n) continue;
    e.ordinal = ++ordinal;
    e.name = entry_name(n, e.ordinal);
    e.file = surface_file_name(n, e.record.type);
    e.line = ++next_line[e.file];
  }
}

void Catalog::replace_n(int n, const std::vector<SurfaceRecord>& records) {
  std::map<TriangleSet, RealizationStatus> kept;
  for (const CatalogEntry& e : entries_) {
    if (e.n == n && e.realization) kept.emplace(e.record.complex, *e.realization);
  }
  std::erase_if(entries_, [n](const CatalogEntry& e) { return e.n == n; });
  auto pos = std::find_if(entries_.begin(), entries_.end(), [n](const CatalogEntry& e) { return e.n > n; });
  std::vector<CatalogEntry> fresh;
  for (const SurfaceRecord& r : records) {
    if (r.complex.n() != n) throw std::invalid_argument("record has the wrong vertex count");
    CatalogEntry e;
    e.n = n;
    e.record = r;
    if (auto it = kept.find(r.complex); it != kept.end()) e.realization = it->second;
    fresh.push_back(std::move(e));
  }
  entries_.insert(pos, fresh.begin(), fresh.end());
  renumber(n);
}

std::size_t Catalog::merge(const std::vector<SurfaceRecord>& records) {
  std::map<int, std::vector<SurfaceRecord>> by_n;
  for (const SurfaceRecord& r : records) by_n[r.complex.n()].push_back(r);
  std::size_t added = 0;
  for (auto& [n, incoming] : by_n) {
    std::vector<SurfaceRecord> all;
    std::set<TriangleSet> present;
    for (const CatalogEntry& e : entries_) {
      if (e.n == n) {
        all.push_back(e.record);
        present.insert(e.record.complex);
      }
    }
    for (const SurfaceRecord& r : incoming) {
      if (present.insert(r.complex).second) {
        all.push_back(r);
        ++added;
      }
    }
    std::sort(all.begin(), all.end(),
              [](const SurfaceRecord& a, const SurfaceRecord& b) { return a.complex < b.complex; });
    replace_n(n, all);
  }
  return added;
}

void Catalog::save() const {
  fs::create_directories(root_ / "surfaces");
  std::map<std::string, std::string> contents;
  json list = json::array();
  for (const CatalogEntry& e : entries_) {
    contents[e.file] += format_complex(e.record.complex) + "\n";
    list.push_back(entry_to_json(e));
  }
  for (const auto& [file, text] : contents) {
    std::ofstream out(root_ / file, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + (root_ / file).string());
    out << text;
    if (!out) throw std::runtime_error("write failed: " + (root_ / file).string());
  }
  for (const auto& item : fs::directory_iterator(root_ / "surfaces")) {
    const std::string rel = "surfaces/" + item.path().filename().string();
    if (item.path().extension() == ".txt" && !contents.contains(rel)) fs::remove(item.path());
  }
  const json doc = {{"format", 1}, {"surfaces", list}};
  const fs::path tmp = root_ / "index.json.tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << doc.dump(1) << '\n';
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, root_ / "index.json");
}

std::vector<std::string> Catalog::validate() const {
  std::vector<std::string> problems;
  std::map<std::string, std::vector<std::string>> files;
  std::map<std::string, int> referenced;
  for (const CatalogEntry& e : entries_) {
    ++referenced[e.file];
    auto it = files.find(e.file);
    if (it == files.end()) {
      try {
        it = files.emplace(e.file, read_lines(root_ / e.file)).first;
      } catch (const std::exception& ex) {
        problems.push_back(e.name + ": " + ex.what());
        files.emplace(e.file, std::vector<std::string>{});
        continue;
      }
    }
    if (e.line < 1 || e.line > static_cast<int>(it->second.size())) {
      problems.push_back(e.name + ": " + e.file + " has no line " + std::to_string(e.line));
      continue;
    }
    try {
      const TriangleSet c = parse_complex(it->second[static_cast<std::size_t>(e.line) - 1], e.n, e.line);
      if (!verify_surface(c)) {
        problems.push_back(e.name + ": not a triangulated surface");
        continue;
      }
      if (!(c == e.record.complex)) problems.push_back(e.name + ": file differs from the loaded complex");
      if (!(invariant_key(c) == e.record.key)) problems.push_back(e.name + ": invariant key mismatch");
      const TopologicalType t = topological_type(euler_characteristic(c), orientability(c));
      if (!(t == e.record.type)) problems.push_back(e.name + ": recorded type " + e.record.type.name() +
                                                    " but the complex is " + t.name());
    } catch (const std::exception& ex) {
      problems.push_back(e.name + ": " + ex.what());
    }
  }
  for (const auto& [file, count] : referenced) {
    const auto& lines = files[file];
    const auto nonblank = std::count_if(lines.begin(), lines.end(), [](const std::string& s) { return !s.empty(); });
    if (nonblank != count && fs::exists(root_ / file)) {
      problems.push_back(file + ": " + std::to_string(nonblank) + " lines but " + std::to_string(count) +
                         " index entries");
    }
  }
  return problems;
}

fs::path Catalog::write_manifest(const std::string& command, const json& body) const {
  const fs::path dir = root_ / "manifests";
  fs::create_directories(dir);
  int next = 1;
  for (const auto& item : fs::directory_iterator(dir)) {
    const std::string stem = item.path().filename().string();
    try {
      next = std::max(next, std::stoi(stem.substr(0, 4)) + 1);
    } catch (const std::exception&) {
    }
  }
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-", next);
  const fs::path path = dir / (std::string(buf) + command + ".json");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << body.dump(1) << '\n';
  return path;
}

}  // namespace surfenum::app

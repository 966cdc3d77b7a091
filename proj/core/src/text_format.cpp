#include "surfenum/text_format.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace surfenum {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

namespace {

class LineParser {
 public:
  LineParser(std::string_view text, int line) : text_(text), line_(line) {}

  std::vector<Triangle> parse(int limit) {
    std::vector<Triangle> out;
    skip_spaces();
    if (pos_ == text_.size()) fail("empty complex");
    while (true) {
      const std::size_t start = pos_;
      std::array<int, 3> v{};
      for (int i = 0; i < 3; ++i) {
        if (i > 0) expect(',');
        v[i] = number(limit);
      }
      if (!(v[0] < v[1] && v[1] < v[2])) {
        fail_at(start, "vertices within a triangle must be strictly increasing");
      }
      Triangle t(v[0], v[1], v[2]);
      if (!out.empty() && !(out.back() < t)) {
        fail_at(start, out.back() == t ? "duplicate triangle" : "triangles are not lex-sorted");
      }
      out.push_back(t);
      skip_spaces();
      if (pos_ == text_.size()) break;
      expect(';');
      skip_spaces();
    }
    return out;
  }

 private:
  void skip_spaces() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  void expect(char ch) {
    skip_spaces();
    if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
    skip_spaces();
  }

  int number(int limit) {
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000000) break;
      ++pos_;
    }
    if (pos_ == start) fail("expected a vertex label");
    if (value < 1 || value > limit) {
      fail_at(start, "vertex label " + std::string(text_.substr(start, pos_ - start)) +
                         " out of range 1.." + std::to_string(limit));
    }
    return static_cast<int>(value);
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const {
    throw ParseError(line_, static_cast<int>(at) + 1, what);
  }

  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

TriangleSet parse_complex(std::string_view text, std::optional<int> n, int line_number) {
  if (n && (*n < 1 || *n > kMaxVertices)) {
    throw ParseError(line_number, 1, "ground set size out of range");
  }
  LineParser parser(text, line_number);
  std::vector<Triangle> tris = parser.parse(n.value_or(kMaxVertices));
  int max_label = 0;
  for (const Triangle& t : tris) max_label = std::max<int>(max_label, t.c);
  return TriangleSet(n.value_or(max_label), std::move(tris));
}

std::string format_complex(const TriangleSet& c) {
  std::string out;
  out.reserve(c.size() * 7);
  bool first = true;
  for (const Triangle& t : c.triangles()) {
    if (!first) out += ';';
    first = false;
    out += std::to_string(t.a);
    out += ',';
    out += std::to_string(t.b);
    out += ',';
    out += std::to_string(t.c);
  }
  return out;
}

std::vector<NumberedComplex> read_complexes(std::istream& in) {
  std::vector<NumberedComplex> out;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back({line_number, parse_complex(line, std::nullopt, line_number)});
  }
  return out;
}

std::vector<NumberedComplex> read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_complexes(in);
}

}  // namespace surfenum

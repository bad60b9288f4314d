// Copyright 2026 The anglekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anglekit/config_io.hpp"

#include <cctype>
#include <cmath>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <variant>
#include <vector>

namespace anglekit {

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool is_rational_literal(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return false;
  const std::string_view den = s.substr(slash + 1);
  if (den.empty() || den[0] == '+' || den[0] == '-') return false;
  return is_integer_literal(s.substr(0, slash)) && is_integer_literal(den);
}

std::string strip_plus(std::string_view s) {
  std::string out(s);
  if (!out.empty() && out[0] == '+') out.erase(0, 1);
  return out;
}

using Field = std::variant<mpq_class, double>;

Field parse_field(std::string_view token, int line) {
  if (is_integer_literal(token) || is_rational_literal(token)) {
    mpq_class q;
    if (q.set_str(strip_plus(token), 10) != 0)
      throw ParseError(line, "malformed rational '" + std::string(token) + "'");
    if (q.get_den() == 0)
      throw ParseError(line, "zero denominator in '" + std::string(token) + "'");
    q.canonicalize();
    return q;
  }
  double v = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  if (!token.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v))
    throw ParseError(line, "malformed field '" + std::string(token) + "'");
  return v;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

}  // namespace

PointConfig parse_config(std::string_view text, std::string label) {
  struct Row {
    std::vector<Field> fields;
    int line;
  };
  std::vector<Row> rows;
  bool exact = true;
  int dim = 0;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string tok;
    if (!(fields >> tok)) continue;
    if (tok[0] == '#') continue;
    Row row{{}, line_no};
    do {
      row.fields.push_back(parse_field(tok, line_no));
    } while (fields >> tok);
    const int count = static_cast<int>(row.fields.size());
    if (count != 2 && count != 3)
      throw ParseError(line_no, "expected 2 or 3 fields, found " +
                                    std::to_string(count));
    if (dim == 0) dim = count;
    if (count != dim)
      throw ParseError(line_no, "dimension mismatch: expected " +
                                    std::to_string(dim) + " fields");
    for (const Field& f : row.fields)
      if (std::holds_alternative<double>(f)) exact = false;
    rows.push_back(std::move(row));
  }

  auto to_scalar = [exact](const Field& f) -> Scalar {
    if (exact) return Scalar(std::get<mpq_class>(f));
    if (const double* d = std::get_if<double>(&f)) return Scalar(*d);
    return Scalar(std::get<mpq_class>(f).get_d());
  };
  std::vector<Point> points;
  points.reserve(rows.size());
  for (const Row& row : rows) {
    Point p = dim == 2 ? Point(to_scalar(row.fields[0]), to_scalar(row.fields[1]))
                       : Point(to_scalar(row.fields[0]), to_scalar(row.fields[1]),
                               to_scalar(row.fields[2]));
    for (std::size_t j = 0; j < points.size(); ++j)
      if (coincide(points[j], p))
        throw ParseError(row.line, "duplicate point (same as line " +
                                       std::to_string(rows[j].line) + ")");
    points.push_back(std::move(p));
  }
  return PointConfig(std::move(points), std::move(label));
}

std::string write_config(const PointConfig& config) {
  std::ostringstream out;
  if (!config.label().empty()) out << "# " << config.label() << '\n';
  for (const Point& p : config.points()) {
    for (int i = 0; i < config.dim(); ++i) {
      if (i) out << ' ';
      const Scalar& s = p[static_cast<std::size_t>(i)];
      out << (s.is_exact() ? s.rational().get_str() : format_double(s.to_double()));
    }
    out << '\n';
  }
  return out.str();
}

PointConfig read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.filename().string());
}

void write_config_file(const std::filesystem::path& path,
                       const PointConfig& config) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << write_config(config);
}

}  // namespace anglekit

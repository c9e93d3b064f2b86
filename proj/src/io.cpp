#include "jinsig/io.hpp"

#include "json.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "jinsig/error.hpp"

namespace jinsig::io {
namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(trim(field));
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

bool parse_real(const std::string& s, double& v) {
  if (s.empty()) return false;
  const char* first = s.data();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_int(const std::string& s, long long& v) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && ptr == s.data() + s.size();
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, source + ":" + std::to_string(line) + ": " + what);
}

bool parse_bool(const std::string& s, bool& v) {
  if (s == "true" || s == "1" || s == "yes") return v = true, true;
  if (s == "false" || s == "0" || s == "no") return v = false, true;
  return false;
}

template <typename F>
Mesh2d build_mesh(std::vector<Point2<double>> pts, bool closed, std::string label, F&& on_error) {
  try {
    return Mesh2d(std::move(pts), closed, std::move(label));
  } catch (const Error& e) {
    on_error(e);
    throw;
  }
}

}  // namespace

Mesh2d parse_mesh_csv(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool closed = false;
  bool seen_data = false;
  std::string label;
  std::vector<Point2<double>> pts;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = trim(std::string_view(line).substr(1));
      const auto eq = body.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = trim(std::string_view(body).substr(0, eq));
      const std::string value = trim(std::string_view(body).substr(eq + 1));
      if (key == "closed" && !parse_bool(value, closed)) fail(source, lineno, "closed must be true or false");
      if (key == "label") label = value;
      continue;
    }
    const auto fields = split(line, ',');
    double x = 0, y = 0;
    const bool numeric = fields.size() == 2 && parse_real(fields[0], x) && parse_real(fields[1], y);
    if (!numeric) {
      if (!seen_data && fields.size() == 2 && !fields[0].empty() && std::isalpha(static_cast<unsigned char>(fields[0][0]))) {
        seen_data = true;
        continue;
      }
      fail(source, lineno, "expected \"x,y\", got \"" + line + "\"");
    }
    if (!std::isfinite(x) || !std::isfinite(y)) fail(source, lineno, "non-finite coordinate");
    seen_data = true;
    pts.emplace_back(x, y);
  }
  return build_mesh(std::move(pts), closed, std::move(label), [&](const Error& e) {
    throw Error(ErrorCode::ParseError, source + ": " + e.what());
  });
}

Mesh2d parse_mesh_json(const std::string& text, const std::string& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, source + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
    throw Error(ErrorCode::ParseError, source + ": field \"points\" must be an array");
  }
  std::vector<Point2<double>> pts;
  const auto& arr = doc["points"];
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const auto& p = arr[k];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw Error(ErrorCode::ParseError, source + ": points[" + std::to_string(k) + "] must be [x, y]");
    }
    pts.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  bool closed = false;
  if (doc.contains("closed")) {
    if (!doc["closed"].is_boolean()) throw Error(ErrorCode::ParseError, source + ": field \"closed\" must be a boolean");
    closed = doc["closed"].get<bool>();
  }
  std::string label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw Error(ErrorCode::ParseError, source + ": field \"label\" must be a string");
    label = doc["label"].get<std::string>();
  }
  return build_mesh(std::move(pts), closed, std::move(label), [&](const Error& e) {
    throw Error(ErrorCode::ParseError, source + ": " + e.what());
  });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Mesh2d read_mesh(const std::string& path) {
  const std::string text = read_file(path);
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  return json ? parse_mesh_json(text, path) : parse_mesh_csv(text, path);
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_mesh_csv(std::ostream& out, const Mesh2d& m) {
  out << "# closed=" << (m.closed() ? "true" : "false") << "\n";
  if (!m.label().empty()) out << "# label=" << m.label() << "\n";
  out << "x,y\n";
  for (const auto& p : m.points()) out << format_real(p.x()) << "," << format_real(p.y()) << "\n";
}

void write_mesh_json(std::ostream& out, const Mesh2d& m) {
  nlohmann::json doc;
  doc["points"] = nlohmann::json::array();
  for (const auto& p : m.points()) doc["points"].push_back({p.x(), p.y()});
  doc["closed"] = m.closed();
  doc["label"] = m.label();
  out << doc.dump(2) << "\n";
}

void write_signature_csv(std::ostream& out, const Signature<double>& sig, const Provenance& provenance) {
  for (const auto& [k, v] : provenance) out << "# " << k << "=" << v << "\n";
  out << "# extrapolated=" << (sig.extrapolated ? "true" : "false") << "\n";
  out << "index,kappa,kappa_s,scheme,m1,m2\n";
  const std::string scheme = to_string(sig.scheme);
  for (const auto& p : sig.points) {
    out << p.index << "," << format_real(p.kappa) << "," << format_real(p.kappa_s) << "," << scheme << ","
        << sig.spec.m1 << "," << sig.spec.m2 << "\n";
  }
}

Signature<double> parse_signature_csv(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool header = false;
  bool first_row = true;
  Signature<double> sig;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = trim(std::string_view(line).substr(1));
      const auto eq = body.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = trim(std::string_view(body).substr(0, eq));
      const std::string value = trim(std::string_view(body).substr(eq + 1));
      if (key == "extrapolated") parse_bool(value, sig.extrapolated);
      continue;
    }
    if (!header) {
      if (line != "index,kappa,kappa_s,scheme,m1,m2") fail(source, lineno, "unexpected header \"" + line + "\"");
      header = true;
      continue;
    }
    const auto f = split(line, ',');
    long long index = 0, m1 = 0, m2 = 0;
    double kappa = 0, kappa_s = 0;
    if (f.size() != 6 || !parse_int(f[0], index) || index < 0 || !parse_real(f[1], kappa) ||
        !parse_real(f[2], kappa_s) || f[3].size() != 3 || f[3].rfind("Eq", 0) != 0 || !parse_int(f[4], m1) ||
        !parse_int(f[5], m2)) {
      fail(source, lineno, "malformed signature row \"" + line + "\"");
    }
    const Scheme scheme = scheme_from_number(f[3][2] - '0');
    if (first_row) {
      sig.scheme = scheme;
      sig.spec = {int(m1), int(m2)};
      first_row = false;
    } else if (scheme != sig.scheme || sig.spec != NeighborhoodSpec{int(m1), int(m2)}) {
      fail(source, lineno, "scheme or neighborhood changes between rows");
    }
    sig.points.push_back({std::size_t(index), kappa, kappa_s});
  }
  if (!header) throw Error(ErrorCode::ParseError, source + ": missing header");
  return sig;
}

}  // namespace jinsig::io

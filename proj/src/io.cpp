#include "areadist/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace areadist {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(tmp + ": cannot open for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error(tmp + ": write failed");
  }
  std::filesystem::rename(tmp, path);
}

PolygonFile read_polygon_file(const std::string& path) {
  const std::string text = read_file(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("closed") || !doc.contains("vertices"))
    throw ParseError(path + ": expected object with 'closed' and 'vertices'");
  if (!doc["closed"].is_boolean()) throw ParseError(path + ": 'closed' must be a boolean");
  if (!doc["vertices"].is_array()) throw ParseError(path + ": 'vertices' must be an array");

  PolygonFile out;
  out.closed = doc["closed"].get<bool>();
  std::size_t idx = 0;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
      throw ParseError(path + ": vertex " + std::to_string(idx) + " must be [x, y]");
    out.vertices.emplace_back(v[0].get<double>(), v[1].get<double>());
    ++idx;
  }
  return out;
}

void write_polygon_file(const std::string& path, const PolygonFile& polygon) {
  nlohmann::json doc;
  doc["closed"] = polygon.closed;
  auto& verts = doc["vertices"] = nlohmann::json::array();
  for (const Vec2& v : polygon.vertices) verts.push_back({v.x, v.y});
  atomic_write(path, doc.dump(2) + "\n");
}

ConvexPolyline load_polyline(const std::string& path) {
  const PolygonFile pf = read_polygon_file(path);
  return validate_polyline(pf.vertices, pf.closed);
}

void write_inner_csv(const std::string& path, const InnerGrid& grid) {
  std::ostringstream out;
  out << "i,j,px,py,f\n";
  const std::size_t cells = grid.polyline().closed() ? grid.polyline().size() : 0;
  for (std::size_t k = 0; k <= grid.max_level(); ++k) {
    const std::size_t count = grid.polyline().closed() ? cells : grid.level_size(k);
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t j = i + k;
      const Vec2 p = grid.p(i, j);
      out << i << ',' << j << ',' << fmt17(p.x) << ',' << fmt17(p.y) << ',' << fmt17(grid.f(i, j))
          << '\n';
    }
  }
  atomic_write(path, out.str());
}

void write_outer_csv(const std::string& path, const OuterGrid& grid) {
  std::ostringstream out;
  out << "u,v,X,Y,F\n";
  for (long v = 0; v <= static_cast<long>(grid.levels()); ++v)
    for (long u = grid.row_begin(v); u <= grid.row_end(v); ++u) {
      const Vec2 p = grid.P(u, v);
      out << u << ',' << v << ',' << fmt17(p.x) << ',' << fmt17(p.y) << ',' << fmt17(grid.F(u, v))
          << '\n';
    }
  atomic_write(path, out.str());
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

double parse_double(const std::string& path, const std::string& tok) {
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str()) throw ParseError(path + ": bad number '" + tok + "'");
  return v;
}

}  // namespace

std::vector<InnerCsvRow> read_inner_csv(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line) || line != "i,j,px,py,f")
    throw ParseError(path + ": missing inner-grid CSV header");
  std::vector<InnerCsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto toks = split_csv_line(line);
    if (toks.size() != 5) throw ParseError(path + ": expected 5 columns, got line '" + line + "'");
    InnerCsvRow r;
    r.i = std::stol(toks[0]);
    r.j = std::stol(toks[1]);
    r.px = parse_double(path, toks[2]);
    r.py = parse_double(path, toks[3]);
    r.f = parse_double(path, toks[4]);
    rows.push_back(r);
  }
  return rows;
}

std::vector<OuterCsvRow> read_outer_csv(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line) || line != "u,v,X,Y,F")
    throw ParseError(path + ": missing outer-grid CSV header");
  std::vector<OuterCsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto toks = split_csv_line(line);
    if (toks.size() != 5) throw ParseError(path + ": expected 5 columns, got line '" + line + "'");
    OuterCsvRow r;
    r.u = std::stol(toks[0]);
    r.v = std::stol(toks[1]);
    r.x = parse_double(path, toks[2]);
    r.y = parse_double(path, toks[3]);
    r.f = parse_double(path, toks[4]);
    rows.push_back(r);
  }
  return rows;
}

void write_inner_obj(const std::string& path, const InnerGrid& grid) {
  const ConvexPolyline& poly = grid.polyline();
  const bool closed = poly.closed();
  const std::size_t n = poly.size();

  std::ostringstream out;
  out << "# inner area-distance grid: " << n << " vertices, " << grid.max_level() << " levels\n";

  // one vertex per stored cell, level-major; remember 1-based indices
  std::vector<std::vector<std::size_t>> index(grid.max_level() + 1);
  std::size_t next = 1;
  for (std::size_t k = 0; k <= grid.max_level(); ++k) {
    const std::size_t count = closed ? n : grid.level_size(k);
    index[k].resize(count);
    for (std::size_t i = 0; i < count; ++i) {
      const Vec2 p = grid.p(i, i + k);
      out << "v " << fmt17(p.x) << ' ' << fmt17(p.y) << ' ' << fmt17(grid.f(i, i + k)) << '\n';
      index[k][i] = next++;
    }
  }

  auto idx = [&](std::size_t lvl, std::size_t i) { return index[lvl][closed ? i % n : i]; };
  for (std::size_t k = 1; k < grid.max_level(); ++k) {
    const std::size_t count = closed ? n : grid.level_size(k);
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t j = i + k;
      if (!grid.has_cell(i, j + 1) || !grid.has_cell(i + 1, j + 1) || !grid.has_cell(i + 1, j))
        continue;
      const std::size_t c00 = idx(k, i);          // (i, j)
      const std::size_t c10 = idx(k - 1, i + 1);  // (i+1, j)
      const std::size_t c01 = idx(k + 1, i);      // (i, j+1)
      const std::size_t c11 = idx(k, i + 1);      // (i+1, j+1)
      out << "f " << c00 << ' ' << c10 << ' ' << c11 << '\n';
      out << "f " << c00 << ' ' << c11 << ' ' << c01 << '\n';
    }
  }
  atomic_write(path, out.str());
}

void write_outer_obj(const std::string& path, const OuterGrid& grid, double planarity_tol) {
  // audit first: every exported quad must be planar against its conormal
  double worst = 0.0;
  const long levels = static_cast<long>(grid.levels());
  for (long v = 0; v < levels; ++v)
    for (long u = grid.row_begin(v); u <= grid.row_end(v); ++u) {
      if (!grid.has_h(u, v) || !grid.has_point(u + 1, v) || !grid.has_point(u, v + 1) ||
          !grid.has_point(u + 1, v + 1))
        continue;
      const Vec3 nu = grid.conormal(u, v);
      const double nn = norm(nu);
      const Vec3 q00 = grid.Q(u, v), q10 = grid.Q(u + 1, v);
      const Vec3 q01 = grid.Q(u, v + 1), q11 = grid.Q(u + 1, v + 1);
      for (const Vec3& e : {q10 - q00, q11 - q10, q11 - q01, q01 - q00}) {
        const double en = norm(e);
        if (en > 0.0) worst = std::max(worst, std::abs(dot(e, nu)) / (en * nn));
      }
    }
  if (worst > planarity_tol)
    throw Error(ErrorCode::PlanarityAuditFailed,
                "outer quad planarity residual " + std::to_string(worst) + " exceeds tolerance");

  const bool closed = grid.polyline().closed();
  const long n = static_cast<long>(grid.polyline().size());
  std::ostringstream out;
  out << "# outer area-distance grid: " << n << " vertices, " << levels << " levels\n";

  std::vector<std::vector<std::size_t>> index(levels + 1);
  std::size_t next = 1;
  for (long v = 0; v <= levels; ++v) {
    index[v].resize(grid.row_end(v) - grid.row_begin(v) + 1);
    for (long u = grid.row_begin(v); u <= grid.row_end(v); ++u) {
      const Vec3 q = grid.Q(u, v);
      out << "v " << fmt17(q.x) << ' ' << fmt17(q.y) << ' ' << fmt17(q.z) << '\n';
      index[v][u - grid.row_begin(v)] = next++;
    }
  }

  auto idx = [&](long v, long u) {
    const long b = grid.row_begin(v);
    const long i = closed ? ((u % n) + n) % n : u - b;
    return index[v][i];
  };
  for (long v = 0; v < levels; ++v)
    for (long u = grid.row_begin(v); u <= grid.row_end(v); ++u) {
      if (!grid.has_point(u + 1, v) || !grid.has_point(u, v + 1) || !grid.has_point(u + 1, v + 1))
        continue;
      out << "f " << idx(v, u) << ' ' << idx(v, u + 1) << ' ' << idx(v + 1, u + 1) << ' '
          << idx(v + 1, u) << '\n';
    }
  atomic_write(path, out.str());
}

}  // namespace areadist

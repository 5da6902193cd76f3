#pragma once

#include <string>
#include <vector>

#include "areadist/geom.hpp"
#include "areadist/inner_grid.hpp"
#include "areadist/outer_grid.hpp"

namespace areadist {

/// Malformed input file (JSON syntax, missing fields, bad CSV); carries the
/// file name and position context in what().
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// JSON polygon file: {"closed": bool, "vertices": [[x, y], ...]}.
struct PolygonFile {
  bool closed = false;
  std::vector<Vec2> vertices;
};

PolygonFile read_polygon_file(const std::string& path);
void write_polygon_file(const std::string& path, const PolygonFile& polygon);

/// Reads and validates in one step.
ConvexPolyline load_polyline(const std::string& path);

/// Whole-file atomic write (temp file + rename).
void atomic_write(const std::string& path, const std::string& content);

// --- CSV: 17 significant digits, bit-exact round trip for doubles ---

struct InnerCsvRow {
  long i = 0, j = 0;
  double px = 0.0, py = 0.0, f = 0.0;
};
struct OuterCsvRow {
  long u = 0, v = 0;
  double x = 0.0, y = 0.0, f = 0.0;
};

void write_inner_csv(const std::string& path, const InnerGrid& grid);
void write_outer_csv(const std::string& path, const OuterGrid& grid);
std::vector<InnerCsvRow> read_inner_csv(const std::string& path);
std::vector<OuterCsvRow> read_outer_csv(const std::string& path);

// --- OBJ meshes ---

/// Inner grids triangulate each parallelogram along the (i,j) -> (i+1,j+1)
/// diagonal; one vertex per stored cell.
void write_inner_obj(const std::string& path, const InnerGrid& grid);

/// Outer grids emit planar quads. Every quad is audited against the conormal
/// planarity tolerance first; Error{PlanarityAuditFailed} aborts the export.
void write_outer_obj(const std::string& path, const OuterGrid& grid, double planarity_tol);

}  // namespace areadist

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace areadist {

/// Residuals of the discrete improper-affine-sphere conditions.
///
/// Indefinite (inner) grids: coplanarity of the five-point cross, the x/y
/// components of the plaquette cross-difference, and the z component against
/// -a_ij. Definite (outer) grids the fields hold, in order: quad planarity
/// against the conormal, x/y of the five-point laplacian, and laplacian(F)
/// against the neighbour-quadrangle area.
struct SphereCheckReport {
  double max_coplanarity_residual = 0.0;
  double max_cross_difference_xy_residual = 0.0;
  double max_cross_difference_z_error = 0.0;
  bool pass = false;
};

/// One named residual checked against a tolerance.
struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// A list of named residual checks; passes only if every check does.
struct VerificationReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  void add(const std::string& name, double residual, double tolerance) {
    checks.push_back({name, residual, tolerance, residual <= tolerance});
  }

  bool all_pass() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }

  void print(std::ostream& os) const;
};

}  // namespace areadist

#include "areadist/report.hpp"

#include <iomanip>

namespace areadist {

void VerificationReport::print(std::ostream& os) const {
  for (const CheckResult& c : checks) {
    os << (c.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(44) << c.name
       << "  residual " << std::scientific << std::setprecision(3) << c.residual << "  (tol "
       << c.tolerance << ")\n"
       << std::defaultfloat;
  }
  for (const std::string& n : notes) os << "note: " << n << "\n";
}

}  // namespace areadist

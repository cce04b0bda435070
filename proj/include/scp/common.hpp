#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace scp {

using cplx = std::complex<double>;

enum class ErrorKind {
  Config,          // invalid model configuration (exit code 2 in the CLI)
  Degenerate,      // coincident roots, vanishing sinh(2 theta), ...
  Singular,        // vanishing denominator in a weight or closed form
  NonConvergence,  // iterative solver did not meet its tolerance
  Unsupported,     // request outside the implemented scope
  Dimension,       // size mismatch between operands
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Numerical tolerances shared by the modules. Defaults follow the
/// verification suite; every check states the tolerance it was run at.
struct Tolerances {
  double root = 1e-12;     // polynomial root residual, relative to coefficient scale
  double pairing = 1e-10;  // |z_m z_m* - 1| and root separation
  double linalg = 1e-10;   // identities assembled from dense linear algebra
  double spec = 1e-6;      // spectral inclusion, relative
};

inline double rel_diff(cplx a, cplx b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace scp

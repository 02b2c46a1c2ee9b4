// Single-qubit state algebra: density matrices, Bloch vectors, pure states.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace kzlz {

using complexd = std::complex<double>;

// Tolerance for invariants on evolved states.
inline constexpr double kStateTol = 1e-9;
// Tolerance for algebraic identities.
inline constexpr double kAlgebraTol = 1e-12;

struct BlochVector {
  double sx = 0.0;
  double sy = 0.0;
  double sz = 0.0;

  double norm2() const { return sx * sx + sy * sy + sz * sz; }
};

// 2x2 Hermitian unit-trace state. Only the four real degrees of freedom are
// stored; rho10 is the conjugate of rho01.
class DensityMatrix2 {
 public:
  DensityMatrix2() : rho00_(1.0), rho11_(0.0), rho01_(0.0, 0.0) {}
  DensityMatrix2(double rho00, double rho11, complexd rho01);

  double rho00() const { return rho00_; }
  double rho11() const { return rho11_; }
  complexd rho01() const { return rho01_; }
  complexd rho10() const { return std::conj(rho01_); }

  double trace() const { return rho00_ + rho11_; }
  // Tr(rho^2) = rho00^2 + rho11^2 + 2|rho01|^2.
  double purity() const;

  static DensityMatrix2 pure_zero() { return DensityMatrix2(1.0, 0.0, {0, 0}); }
  static DensityMatrix2 pure_one() { return DensityMatrix2(0.0, 1.0, {0, 0}); }
  static DensityMatrix2 maximally_mixed() {
    return DensityMatrix2(0.5, 0.5, {0, 0});
  }

 private:
  double rho00_;
  double rho11_;
  complexd rho01_;
};

// Pure state amplitudes on the diabatic basis |0>, |1>.
class PureState2 {
 public:
  PureState2(complexd a0, complexd a1);

  complexd a0() const { return a0_; }
  complexd a1() const { return a1_; }

  DensityMatrix2 to_density() const;

 private:
  complexd a0_;
  complexd a1_;
};

// sz = rho00 - rho11, sx = 2 Re(rho01), sy = -2 Im(rho01).
BlochVector bloch_from_density(const DensityMatrix2& rho);

// Exact inverse of bloch_from_density. Rejects |b| > 1 + tol.
DensityMatrix2 density_from_bloch(const BlochVector& b);

double purity(const DensityMatrix2& rho);

}  // namespace kzlz

#include "kzlz/state.hpp"

#include <cmath>

namespace kzlz {

DensityMatrix2::DensityMatrix2(double rho00, double rho11, complexd rho01)
    : rho00_(rho00), rho11_(rho11), rho01_(rho01) {
  if (std::abs(rho00 + rho11 - 1.0) > kStateTol) {
    throw std::invalid_argument("DensityMatrix2: trace deviates from 1 by " +
                                std::to_string(rho00 + rho11 - 1.0));
  }
  if (rho00 < -kStateTol || rho11 < -kStateTol) {
    throw std::invalid_argument("DensityMatrix2: negative population");
  }
  if (std::norm(rho01) > rho00 * rho11 + kStateTol) {
    throw std::invalid_argument("DensityMatrix2: positivity violated, |rho01|^2 = " +
                                std::to_string(std::norm(rho01)) + " > rho00*rho11 = " +
                                std::to_string(rho00 * rho11));
  }
}

double DensityMatrix2::purity() const {
  return rho00_ * rho00_ + rho11_ * rho11_ + 2.0 * std::norm(rho01_);
}

PureState2::PureState2(complexd a0, complexd a1) : a0_(a0), a1_(a1) {
  double n = std::norm(a0) + std::norm(a1);
  if (std::abs(n - 1.0) > kStateTol) {
    throw std::invalid_argument("PureState2: norm deviates from 1 by " +
                                std::to_string(n - 1.0));
  }
}

DensityMatrix2 PureState2::to_density() const {
  return DensityMatrix2(std::norm(a0_), std::norm(a1_), a0_ * std::conj(a1_));
}

BlochVector bloch_from_density(const DensityMatrix2& rho) {
  return {2.0 * rho.rho01().real(), -2.0 * rho.rho01().imag(),
          rho.rho00() - rho.rho11()};
}

DensityMatrix2 density_from_bloch(const BlochVector& b) {
  if (b.norm2() > 1.0 + kStateTol) {
    throw std::invalid_argument("density_from_bloch: |b| > 1");
  }
  return DensityMatrix2(0.5 * (1.0 + b.sz), 0.5 * (1.0 - b.sz),
                        complexd(0.5 * b.sx, -0.5 * b.sy));
}

double purity(const DensityMatrix2& rho) { return rho.purity(); }

}  // namespace kzlz

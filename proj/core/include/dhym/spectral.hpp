#pragma once

// Discrete Fourier differentiation on the torus grid: complex Hessians,
// holomorphic gradients, and constant-coefficient inverse symbols. Exact for
// trigonometric polynomials below the Nyquist limit.

#include <complex>
#include <memory>
#include <vector>

#include "dhym/field.hpp"
#include "dhym/grid.hpp"

namespace dhym {

/// FFT plans for one grid. Thread-safe to execute; construction is guarded.
class SpectralTransform {
 public:
  explicit SpectralTransform(const TorusGrid& grid);
  ~SpectralTransform();

  SpectralTransform(const SpectralTransform&) = delete;
  SpectralTransform& operator=(const SpectralTransform&) = delete;

  const TorusGrid& grid() const { return grid_; }

  /// Unnormalized forward DFT of a real field.
  std::vector<std::complex<double>> forward(const std::vector<double>& values) const;

  /// Normalized inverse DFT, complex output.
  std::vector<std::complex<double>> inverse(std::vector<std::complex<double>> coeffs) const;

  /// Normalized inverse DFT, real part only.
  std::vector<double> inverse_real(std::vector<std::complex<double>> coeffs) const;

  /// Angular frequency along axis `a` for mode index m: signed integer
  /// frequency times 2*pi/period. The Nyquist mode of even axes is zeroed so
  /// first-derivative multipliers keep real fields real.
  double angular_frequency(int a, int m) const;

  /// d/dz_j symbol at a flat mode index, j in [0, n).
  std::complex<double> dz_symbol(int j, std::size_t mode) const;
  /// d/dzbar_j symbol at a flat mode index.
  std::complex<double> dzbar_symbol(int j, std::size_t mode) const;

 private:
  struct Impl;
  TorusGrid grid_;
  std::unique_ptr<Impl> impl_;
};

/// Complex Hessian (d^2 phi / dz_i dzbar_j), Hermitian at every point, every
/// entry mean-free.
HermitianField complex_hessian(const SpectralTransform& st, const PotentialField& phi);

/// Holomorphic gradient (d phi / dz_j), one complex field per j, point-major
/// layout with stride n.
std::vector<std::complex<double>> holomorphic_gradient(const SpectralTransform& st,
                                                       const PotentialField& phi);

}  // namespace dhym

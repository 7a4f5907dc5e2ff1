#pragma once

// Relative eigenvalue fields, the mixed real/imaginary top forms, and the
// cohomological constants that normalize the approximation equation.

#include <complex>
#include <vector>

#include "dhym/field.hpp"
#include "dhym/phase.hpp"
#include "dhym/quadrature.hpp"

namespace dhym {

/// Eigenvalues of a Hermitian field relative to the metric, n per point,
/// sorted descending.
class SpectrumField {
 public:
  SpectrumField(TorusGrid grid, int n)
      : grid_(std::move(grid)), n_(n), values_(grid_.point_count() * static_cast<std::size_t>(n)) {}

  const TorusGrid& grid() const { return grid_; }
  int spectrum_dim() const { return n_; }

  Spectrum at(std::size_t p) const {
    const std::size_t off = p * static_cast<std::size_t>(n_);
    return Spectrum::from_sorted(
        std::vector<double>(values_.begin() + off, values_.begin() + off + n_));
  }
  double* raw(std::size_t p) { return values_.data() + p * static_cast<std::size_t>(n_); }
  const double* raw(std::size_t p) const {
    return values_.data() + p * static_cast<std::size_t>(n_);
  }

 private:
  TorusGrid grid_;
  int n_;
  std::vector<double> values_;
};

/// Eigen-decomposition of the pencil (X, omega): eigenvalues descending and
/// omega-orthonormal eigenvectors, per point.
struct PencilDecomposition {
  SpectrumField lambda;
  std::vector<std::complex<double>> vectors;  // point-major, n x n column-major
};

/// Per-point eigenvalues of X relative to omega. Throws NonPositiveMetric if
/// omega fails a Cholesky-style positivity check.
SpectrumField relative_spectrum(const HermitianField& x, const HermitianField& omega);

PencilDecomposition pencil_decomposition(const HermitianField& x, const HermitianField& omega);

/// Pointwise Re and Im of (X + i omega)^n / omega^n via the relative
/// eigenvalues.
struct MixedReIm {
  std::vector<double> re;
  std::vector<double> im;
};
MixedReIm mixed_re_im(const HermitianField& x, const HermitianField& omega);

/// Normalization constant of the approximation equation at potential zero:
/// integral of (re - cot(theta0) im) over the background chi + chi_tilde +
/// t omega, divided by the volume. Requires the density to be normalized to
/// unit mean (relative 1e-10).
double cohomological_ct(const HermitianField& chi, const HermitianField& chi_tilde,
                        const HermitianField& omega, double t, double theta0,
                        const PotentialField& f);

/// Same constant without a density argument (constant density).
double cohomological_ct(const HermitianField& chi, const HermitianField& chi_tilde,
                        const HermitianField& omega, double t, double theta0);

/// V_t = integral of (chi_tilde + t omega)^n, via S_n of the relative
/// spectrum.
double volume_vt(const HermitianField& chi_tilde, const HermitianField& omega, double t);

/// Subtracts the grid maximum; idempotent.
PotentialField sup_normalize(const PotentialField& phi);

/// Subtracts the grid mean.
PotentialField mean_normalize(const PotentialField& phi);

/// min over points of S_1(lambda(X rel omega)); non-negative iff
/// X wedge omega^{n-1} >= 0 pointwise.
double trace_positivity_min(const HermitianField& x, const HermitianField& omega);

/// sup over points of (cot(theta0) im - re)^+ for X = chi + i ddbar v; the
/// constant entering the level-set weight g.
double subsolution_constant(const HermitianField& chi_plus_hessian_v,
                            const HermitianField& omega, double theta0);

/// Normalizes a positive density to unit mean. Throws if the input changes
/// sign; a non-negative density with zeros is allowed but reported.
struct NormalizedDensity {
  PotentialField f;
  bool has_zeros = false;
};
NormalizedDensity normalize_density(const PotentialField& f);

}  // namespace dhym

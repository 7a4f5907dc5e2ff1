#include "dhym/geometry.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "dhym/parallel.hpp"

namespace dhym {

namespace {

void check_metric(const HermitianField& omega) {
  const int n = omega.matrix_dim();
  for (std::size_t p = 0; p < omega.point_count(); ++p) {
    Eigen::LLT<Eigen::MatrixXcd> llt(omega.at(p));
    if (llt.info() != Eigen::Success) {
      throw NonPositiveMetric("metric not positive definite at point " + std::to_string(p));
    }
  }
  (void)n;
}

}  // namespace

SpectrumField relative_spectrum(const HermitianField& x, const HermitianField& omega) {
  require_same_grid(x.grid(), omega.grid());
  check_metric(omega);
  const int n = x.matrix_dim();
  SpectrumField out(x.grid(), n);
  parallel_for(x.point_count(), [&](std::size_t begin, std::size_t end) {
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> solver;
    for (std::size_t p = begin; p < end; ++p) {
      solver.compute(x.at(p), omega.at(p), Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
      double* dst = out.raw(p);
      for (int i = 0; i < n; ++i) dst[i] = solver.eigenvalues()(n - 1 - i);
    }
  });
  return out;
}

PencilDecomposition pencil_decomposition(const HermitianField& x, const HermitianField& omega) {
  require_same_grid(x.grid(), omega.grid());
  check_metric(omega);
  const int n = x.matrix_dim();
  const std::size_t stride = static_cast<std::size_t>(n) * n;
  PencilDecomposition out{SpectrumField(x.grid(), n),
                          std::vector<std::complex<double>>(x.point_count() * stride)};
  parallel_for(x.point_count(), [&](std::size_t begin, std::size_t end) {
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> solver;
    for (std::size_t p = begin; p < end; ++p) {
      solver.compute(x.at(p), omega.at(p), Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
      double* dst = out.lambda.raw(p);
      Eigen::Map<Eigen::MatrixXcd> v(out.vectors.data() + p * stride, n, n);
      for (int i = 0; i < n; ++i) {
        dst[i] = solver.eigenvalues()(n - 1 - i);
        v.col(i) = solver.eigenvectors().col(n - 1 - i);
      }
    }
  });
  return out;
}

MixedReIm mixed_re_im(const HermitianField& x, const HermitianField& omega) {
  const SpectrumField lambda = relative_spectrum(x, omega);
  const std::size_t pts = x.point_count();
  MixedReIm out{std::vector<double>(pts), std::vector<double>(pts)};
  for (std::size_t p = 0; p < pts; ++p) {
    const ReIm z = sigma_product(lambda.at(p));
    out.re[p] = z.re;
    out.im[p] = z.im;
  }
  return out;
}

double cohomological_ct(const HermitianField& chi, const HermitianField& chi_tilde,
                        const HermitianField& omega, double t, double theta0,
                        const PotentialField& f) {
  const double vol = integrate(f.grid(), std::vector<double>(f.size(), 1.0));
  const double fmass = integrate(f);
  if (std::abs(fmass - vol) > 1e-10 * vol) {
    throw Error("density is not normalized to unit mean");
  }
  return cohomological_ct(chi, chi_tilde, omega, t, theta0);
}

double cohomological_ct(const HermitianField& chi, const HermitianField& chi_tilde,
                        const HermitianField& omega, double t, double theta0) {
  HermitianField x = chi;
  x.axpy(1.0, chi_tilde);
  x.axpy(t, omega);
  const MixedReIm z = mixed_re_im(x, omega);
  const double cot0 = std::cos(theta0) / std::sin(theta0);
  std::vector<double> integrand(z.re.size());
  for (std::size_t p = 0; p < integrand.size(); ++p) {
    integrand[p] = z.re[p] - cot0 * z.im[p];
  }
  const TorusGrid& grid = chi.grid();
  return integrate(grid, integrand) / grid.volume();
}

double volume_vt(const HermitianField& chi_tilde, const HermitianField& omega, double t) {
  HermitianField x = chi_tilde;
  x.axpy(t, omega);
  const SpectrumField lambda = relative_spectrum(x, omega);
  const int n = x.matrix_dim();
  std::vector<double> det(x.point_count());
  for (std::size_t p = 0; p < det.size(); ++p) {
    det[p] = elementary_symmetric(lambda.at(p), n);
  }
  return integrate(x.grid(), det);
}

PotentialField sup_normalize(const PotentialField& phi) {
  PotentialField out = phi;
  const double m = out.max();
  for (double& v : out.values()) v -= m;
  return out;
}

PotentialField mean_normalize(const PotentialField& phi) {
  PotentialField out = phi;
  const double m = mean(out.grid(), out.values());
  for (double& v : out.values()) v -= m;
  return out;
}

double trace_positivity_min(const HermitianField& x, const HermitianField& omega) {
  const SpectrumField lambda = relative_spectrum(x, omega);
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < x.point_count(); ++p) {
    worst = std::min(worst, elementary_symmetric(lambda.at(p), 1));
  }
  return worst;
}

double subsolution_constant(const HermitianField& chi_plus_hessian_v,
                            const HermitianField& omega, double theta0) {
  const MixedReIm z = mixed_re_im(chi_plus_hessian_v, omega);
  const double cot0 = std::cos(theta0) / std::sin(theta0);
  double sup = 0.0;
  for (std::size_t p = 0; p < z.re.size(); ++p) {
    sup = std::max(sup, cot0 * z.im[p] - z.re[p]);
  }
  return sup;
}

NormalizedDensity normalize_density(const PotentialField& f) {
  const double m = mean(f.grid(), f.values());
  if (!(m > 0.0)) throw Error("density must have positive mean");
  NormalizedDensity out{f, false};
  for (double& v : out.f.values()) {
    v /= m;
    if (v < 0.0) throw Error("density changes sign");
    if (v == 0.0) out.has_zeros = true;
  }
  return out;
}

}  // namespace dhym

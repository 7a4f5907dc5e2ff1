#include "dhym/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dhym/spectral.hpp"

namespace dhym {

PotentialField::PotentialField(TorusGrid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.point_count()) throw Error("field size does not match grid");
  for (double v : values_) {
    if (!std::isfinite(v)) throw Error("potential field entry is not finite");
  }
}

double PotentialField::max() const { return *std::max_element(values_.begin(), values_.end()); }
double PotentialField::min() const { return *std::min_element(values_.begin(), values_.end()); }

double PotentialField::sup_norm() const {
  double s = 0.0;
  for (double v : values_) s = std::max(s, std::abs(v));
  return s;
}

HermitianField::HermitianField(TorusGrid grid, int n)
    : grid_(std::move(grid)), n_(n), data_(grid_.point_count() * static_cast<std::size_t>(n) * n) {
  if (n != grid_.complex_dim()) throw Error("matrix dimension must equal the complex dimension");
}

HermitianField HermitianField::constant(const TorusGrid& grid, const Matrix& m) {
  if (m.rows() != grid.complex_dim() || m.cols() != grid.complex_dim()) {
    throw Error("constant matrix has wrong dimension");
  }
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-13) {
    throw Error("constant matrix is not Hermitian");
  }
  HermitianField f(grid, grid.complex_dim());
  for (std::size_t p = 0; p < f.point_count(); ++p) f.at(p) = m;
  return f;
}

HermitianField HermitianField::identity(const TorusGrid& grid) {
  return constant(grid, Matrix::Identity(grid.complex_dim(), grid.complex_dim()));
}

void HermitianField::axpy(double c, const HermitianField& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += c * other.data_[i];
}

void HermitianField::shift_identity(double c) {
  for (std::size_t p = 0; p < point_count(); ++p) {
    for (int i = 0; i < n_; ++i) at(p)(i, i) += c;
  }
}

void HermitianField::scale(double c) {
  for (auto& z : data_) z *= c;
}

double HermitianField::hermitian_defect() const {
  double worst = 0.0;
  for (std::size_t p = 0; p < point_count(); ++p) {
    const auto m = at(p);
    worst = std::max(worst, (m - m.adjoint()).cwiseAbs().maxCoeff());
  }
  return worst;
}

HermitianField operator+(const HermitianField& a, const HermitianField& b) {
  HermitianField out = a;
  out.axpy(1.0, b);
  return out;
}

PotentialField make_scalar(const TorusGrid& grid, const ScalarRecipe& recipe) {
  PotentialField f(grid, recipe.constant);
  const std::size_t axes = static_cast<std::size_t>(grid.real_dim());
  for (const FourierMode& mode : recipe.modes) {
    if (mode.wave.size() != axes) throw Error("fourier mode has wrong wave length");
    for (std::size_t a = 0; a < axes; ++a) {
      if (mode.wave[a] != 0 && !grid.axis_active(static_cast<int>(a))) {
        throw Error("fourier mode varies along an inactive axis");
      }
      const int res = grid.resolutions()[a];
      if (mode.wave[a] != 0 && 2 * std::abs(mode.wave[a]) >= res) {
        throw Error("fourier mode beyond the grid Nyquist limit");
      }
    }
    for (std::size_t p = 0; p < f.size(); ++p) {
      const std::vector<double> x = grid.point(p);
      double arg = mode.phase;
      for (std::size_t a = 0; a < axes; ++a) {
        arg += 2.0 * std::numbers::pi * mode.wave[a] * x[a] / grid.periods()[a];
      }
      f[p] += mode.amplitude * std::cos(arg);
    }
  }
  return f;
}

HermitianField make_hermitian(const TorusGrid& grid, const HermitianRecipe& recipe) {
  HermitianField f = HermitianField::constant(grid, recipe.constant);
  if (!recipe.potential.modes.empty() || recipe.potential.constant != 0.0) {
    const SpectralTransform st(grid);
    const PotentialField rho = make_scalar(grid, recipe.potential);
    f.axpy(1.0, complex_hessian(st, rho));
  }
  return f;
}

}  // namespace dhym

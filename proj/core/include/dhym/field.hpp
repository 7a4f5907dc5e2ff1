#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "dhym/grid.hpp"

namespace dhym {

/// Real scalar periodic grid function.
class PotentialField {
 public:
  PotentialField(TorusGrid grid, double fill = 0.0)
      : grid_(std::move(grid)), values_(grid_.point_count(), fill) {}
  PotentialField(TorusGrid grid, std::vector<double> values);

  const TorusGrid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }
  double operator[](std::size_t p) const { return values_[p]; }
  double& operator[](std::size_t p) { return values_[p]; }
  std::size_t size() const { return values_.size(); }

  double max() const;
  double min() const;
  double sup_norm() const;

 private:
  TorusGrid grid_;
  std::vector<double> values_;
};

/// Grid of n x n Hermitian matrices (units of the Kaehler form). Matrices are
/// stored per point, column-major.
class HermitianField {
 public:
  using Matrix = Eigen::MatrixXcd;

  HermitianField(TorusGrid grid, int n);

  /// Constant field from one Hermitian matrix.
  static HermitianField constant(const TorusGrid& grid, const Matrix& m);

  /// Identity metric.
  static HermitianField identity(const TorusGrid& grid);

  const TorusGrid& grid() const { return grid_; }
  int matrix_dim() const { return n_; }
  std::size_t point_count() const { return grid_.point_count(); }

  Eigen::Map<const Matrix> at(std::size_t p) const {
    return Eigen::Map<const Matrix>(data_.data() + p * stride(), n_, n_);
  }
  Eigen::Map<Matrix> at(std::size_t p) {
    return Eigen::Map<Matrix>(data_.data() + p * stride(), n_, n_);
  }

  std::size_t stride() const { return static_cast<std::size_t>(n_) * n_; }
  const std::vector<std::complex<double>>& data() const { return data_; }
  std::vector<std::complex<double>>& data() { return data_; }

  /// this += c * other (same grid).
  void axpy(double c, const HermitianField& other);
  /// this += c * identity at every point.
  void shift_identity(double c);
  void scale(double c);

  /// Largest deviation from Hermitian symmetry over all points.
  double hermitian_defect() const;

 private:
  TorusGrid grid_;
  int n_ = 0;
  std::vector<std::complex<double>> data_;
};

HermitianField operator+(const HermitianField& a, const HermitianField& b);

/// One Fourier mode of a real trigonometric polynomial:
/// amplitude * cos(sum_a wave[a] * 2*pi/period_a * x_a + phase).
struct FourierMode {
  std::vector<int> wave;  // length 2n, entries on inactive axes must be 0
  double amplitude = 0.0;
  double phase = 0.0;
};

/// Recipe for a real scalar field: constant + trigonometric polynomial.
struct ScalarRecipe {
  double constant = 0.0;
  std::vector<FourierMode> modes;
};

/// Recipe for a closed real (1,1)-form: constant Hermitian matrix plus
/// i ddbar of a scalar recipe. Closedness holds by construction.
struct HermitianRecipe {
  Eigen::MatrixXcd constant;
  ScalarRecipe potential;  // contributes i ddbar(potential)
};

PotentialField make_scalar(const TorusGrid& grid, const ScalarRecipe& recipe);
HermitianField make_hermitian(const TorusGrid& grid, const HermitianRecipe& recipe);

}  // namespace dhym

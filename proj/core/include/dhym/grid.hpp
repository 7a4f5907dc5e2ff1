#pragma once

#include <cstddef>
#include <vector>

#include "dhym/errors.hpp"

namespace dhym {

/// Discrete flat torus R^{2n} / (periods * Z^{2n}) in complex dimension n.
/// Real axis 2j carries Re z_{j+1}, axis 2j+1 carries Im z_{j+1}. Fields may
/// vary only along active axes; inactive axes have a single grid point.
/// Storage is row-major with axis 0 slowest.
class TorusGrid {
 public:
  /// Uniform resolution on the listed active axes, resolution 1 elsewhere,
  /// period 2*pi on every axis.
  static TorusGrid reduced(int complex_dim, int resolution,
                           const std::vector<int>& active_axes);

  /// Full control over per-axis resolutions and periods.
  static TorusGrid make(int complex_dim, std::vector<int> resolutions,
                        std::vector<double> periods);

  int complex_dim() const { return n_; }
  int real_dim() const { return 2 * n_; }
  const std::vector<int>& resolutions() const { return res_; }
  const std::vector<double>& periods() const { return periods_; }
  const std::vector<int>& active_axes() const { return active_; }
  bool axis_active(int a) const { return res_[static_cast<std::size_t>(a)] > 1; }

  std::size_t point_count() const { return points_; }
  double cell_volume() const { return cell_vol_; }
  double volume() const { return cell_vol_ * static_cast<double>(points_); }

  /// Coordinate of grid index m along axis a.
  double coordinate(int a, int m) const {
    return periods_[static_cast<std::size_t>(a)] * static_cast<double>(m) /
           static_cast<double>(res_[static_cast<std::size_t>(a)]);
  }

  /// Decodes a flat point index into per-axis indices.
  std::vector<int> unravel(std::size_t flat) const;

  /// Coordinates of a flat point index, length 2n.
  std::vector<double> point(std::size_t flat) const;

  bool operator==(const TorusGrid& other) const {
    return n_ == other.n_ && res_ == other.res_ && periods_ == other.periods_;
  }

  /// Upper bound on the number of grid points accepted at construction.
  static constexpr std::size_t kPointBudget = std::size_t(1) << 22;

 private:
  TorusGrid() = default;

  int n_ = 0;
  std::vector<int> res_;        // length 2n
  std::vector<double> periods_; // length 2n
  std::vector<int> active_;     // axes with resolution > 1
  std::size_t points_ = 0;
  double cell_vol_ = 0.0;
};

/// Throws unless both fields live on the same grid.
void require_same_grid(const TorusGrid& a, const TorusGrid& b);

}  // namespace dhym

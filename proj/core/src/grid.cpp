#include "dhym/grid.hpp"

#include <numbers>

namespace dhym {

TorusGrid TorusGrid::reduced(int complex_dim, int resolution,
                             const std::vector<int>& active_axes) {
  std::vector<int> res(static_cast<std::size_t>(2 * complex_dim), 1);
  for (int a : active_axes) {
    if (a < 0 || a >= 2 * complex_dim) throw Error("active axis out of range");
    res[static_cast<std::size_t>(a)] = resolution;
  }
  std::vector<double> periods(static_cast<std::size_t>(2 * complex_dim),
                              2.0 * std::numbers::pi);
  return make(complex_dim, std::move(res), std::move(periods));
}

TorusGrid TorusGrid::make(int complex_dim, std::vector<int> resolutions,
                          std::vector<double> periods) {
  if (complex_dim < 1) throw Error("complex dimension must be >= 1");
  const std::size_t axes = static_cast<std::size_t>(2 * complex_dim);
  if (resolutions.size() != axes || periods.size() != axes) {
    throw Error("grid needs one resolution and one period per real axis");
  }
  TorusGrid g;
  g.n_ = complex_dim;
  g.res_ = std::move(resolutions);
  g.periods_ = std::move(periods);
  g.points_ = 1;
  g.cell_vol_ = 1.0;
  for (std::size_t a = 0; a < axes; ++a) {
    const int r = g.res_[a];
    if (r < 1) throw Error("axis resolution must be >= 1");
    if (r > 1 && r < 4) throw Error("active axes need resolution >= 4");
    if (!(g.periods_[a] > 0.0)) throw Error("axis period must be positive");
    if (r > 1) g.active_.push_back(static_cast<int>(a));
    g.points_ *= static_cast<std::size_t>(r);
    if (g.points_ > kPointBudget) throw Error("grid exceeds the point budget");
    g.cell_vol_ *= g.periods_[a] / static_cast<double>(r);
  }
  return g;
}

std::vector<int> TorusGrid::unravel(std::size_t flat) const {
  std::vector<int> idx(res_.size());
  for (std::size_t a = res_.size(); a-- > 0;) {
    const std::size_t r = static_cast<std::size_t>(res_[a]);
    idx[a] = static_cast<int>(flat % r);
    flat /= r;
  }
  return idx;
}

std::vector<double> TorusGrid::point(std::size_t flat) const {
  const std::vector<int> idx = unravel(flat);
  std::vector<double> x(res_.size());
  for (std::size_t a = 0; a < res_.size(); ++a) {
    x[a] = coordinate(static_cast<int>(a), idx[a]);
  }
  return x;
}

void require_same_grid(const TorusGrid& a, const TorusGrid& b) {
  if (!(a == b)) throw Error("fields live on different grids");
}

}  // namespace dhym

#include "dhym/quadrature.hpp"

#include <cmath>

namespace dhym {

double compensated_sum(const std::vector<double>& values) {
  double sum = 0.0, comp = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

double integrate(const TorusGrid& grid, const std::vector<double>& values) {
  if (values.size() != grid.point_count()) throw Error("integrand size does not match grid");
  return compensated_sum(values) * grid.cell_volume();
}

double integrate(const PotentialField& f) { return integrate(f.grid(), f.values()); }

double mean(const TorusGrid& grid, const std::vector<double>& values) {
  return integrate(grid, values) / grid.volume();
}

}  // namespace dhym

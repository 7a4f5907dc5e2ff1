#pragma once

#include <vector>

#include "dhym/field.hpp"
#include "dhym/grid.hpp"

namespace dhym {

/// Fixed-order compensated (Neumaier) sum; bit-reproducible regardless of
/// worker count because reductions are never partitioned.
double compensated_sum(const std::vector<double>& values);

/// Uniform-grid Riemann sum times cell volume. Exact for trigonometric
/// polynomials below the Nyquist limit.
double integrate(const TorusGrid& grid, const std::vector<double>& values);
double integrate(const PotentialField& f);

/// Integral divided by total volume.
double mean(const TorusGrid& grid, const std::vector<double>& values);

}  // namespace dhym

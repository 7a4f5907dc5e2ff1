#include "dhym/spectral.hpp"

#include <fftw3.h>

#include <mutex>
#include <numbers>

namespace dhym {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBuffer {
  fftw_complex* ptr = nullptr;
  explicit FftwBuffer(std::size_t count) {
    ptr = fftw_alloc_complex(count);
    if (!ptr) throw Error("fftw allocation failed");
  }
  ~FftwBuffer() { fftw_free(ptr); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
};

}  // namespace

struct SpectralTransform::Impl {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  std::size_t count = 0;

  ~Impl() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
  }
};

SpectralTransform::SpectralTransform(const TorusGrid& grid)
    : grid_(grid), impl_(std::make_unique<Impl>()) {
  impl_->count = grid_.point_count();
  std::vector<int> dims(grid_.resolutions().begin(), grid_.resolutions().end());
  FftwBuffer in(impl_->count), out(impl_->count);
  std::lock_guard<std::mutex> lock(planner_mutex());
  impl_->forward = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), in.ptr,
                                 out.ptr, FFTW_FORWARD, FFTW_ESTIMATE);
  impl_->backward = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), in.ptr,
                                  out.ptr, FFTW_BACKWARD, FFTW_ESTIMATE);
  if (!impl_->forward || !impl_->backward) throw Error("fftw planning failed");
}

SpectralTransform::~SpectralTransform() = default;

std::vector<std::complex<double>> SpectralTransform::forward(
    const std::vector<double>& values) const {
  if (values.size() != impl_->count) throw Error("field size does not match grid");
  FftwBuffer in(impl_->count), out(impl_->count);
  for (std::size_t p = 0; p < impl_->count; ++p) {
    in.ptr[p][0] = values[p];
    in.ptr[p][1] = 0.0;
  }
  fftw_execute_dft(impl_->forward, in.ptr, out.ptr);
  std::vector<std::complex<double>> coeffs(impl_->count);
  for (std::size_t p = 0; p < impl_->count; ++p) {
    coeffs[p] = {out.ptr[p][0], out.ptr[p][1]};
  }
  return coeffs;
}

std::vector<std::complex<double>> SpectralTransform::inverse(
    std::vector<std::complex<double>> coeffs) const {
  if (coeffs.size() != impl_->count) throw Error("coefficient size does not match grid");
  FftwBuffer in(impl_->count), out(impl_->count);
  for (std::size_t p = 0; p < impl_->count; ++p) {
    in.ptr[p][0] = coeffs[p].real();
    in.ptr[p][1] = coeffs[p].imag();
  }
  fftw_execute_dft(impl_->backward, in.ptr, out.ptr);
  const double scale = 1.0 / static_cast<double>(impl_->count);
  for (std::size_t p = 0; p < impl_->count; ++p) {
    coeffs[p] = {out.ptr[p][0] * scale, out.ptr[p][1] * scale};
  }
  return coeffs;
}

std::vector<double> SpectralTransform::inverse_real(
    std::vector<std::complex<double>> coeffs) const {
  const std::vector<std::complex<double>> z = inverse(std::move(coeffs));
  std::vector<double> r(z.size());
  for (std::size_t p = 0; p < z.size(); ++p) r[p] = z[p].real();
  return r;
}

double SpectralTransform::angular_frequency(int a, int m) const {
  const int res = grid_.resolutions()[static_cast<std::size_t>(a)];
  if (res == 1) return 0.0;
  int k = (m <= res / 2) ? m : m - res;
  if (res % 2 == 0 && m == res / 2) k = 0;  // band-limit guard at Nyquist
  return 2.0 * std::numbers::pi * static_cast<double>(k) /
         grid_.periods()[static_cast<std::size_t>(a)];
}

std::complex<double> SpectralTransform::dz_symbol(int j, std::size_t mode) const {
  const std::vector<int> idx = grid_.unravel(mode);
  const double kx = angular_frequency(2 * j, idx[static_cast<std::size_t>(2 * j)]);
  const double ky = angular_frequency(2 * j + 1, idx[static_cast<std::size_t>(2 * j + 1)]);
  // d/dz = (d/dx - i d/dy) / 2 acting on e^{i k.x}
  return {0.5 * ky, 0.5 * kx};
}

std::complex<double> SpectralTransform::dzbar_symbol(int j, std::size_t mode) const {
  const std::vector<int> idx = grid_.unravel(mode);
  const double kx = angular_frequency(2 * j, idx[static_cast<std::size_t>(2 * j)]);
  const double ky = angular_frequency(2 * j + 1, idx[static_cast<std::size_t>(2 * j + 1)]);
  return {-0.5 * ky, 0.5 * kx};
}

HermitianField complex_hessian(const SpectralTransform& st, const PotentialField& phi) {
  const TorusGrid& grid = st.grid();
  require_same_grid(grid, phi.grid());
  const int n = grid.complex_dim();
  const std::size_t pts = grid.point_count();

  const std::vector<std::complex<double>> phat = st.forward(phi.values());
  HermitianField h(grid, n);

  std::vector<std::complex<double>> work(pts);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (std::size_t m = 0; m < pts; ++m) {
        work[m] = st.dz_symbol(i, m) * st.dzbar_symbol(j, m) * phat[m];
      }
      const std::vector<std::complex<double>> entry = st.inverse(work);
      for (std::size_t p = 0; p < pts; ++p) {
        if (i == j) {
          h.at(p)(i, i) = entry[p].real();
        } else {
          h.at(p)(i, j) = entry[p];
          h.at(p)(j, i) = std::conj(entry[p]);
        }
      }
    }
  }
  return h;
}

std::vector<std::complex<double>> holomorphic_gradient(const SpectralTransform& st,
                                                       const PotentialField& phi) {
  const TorusGrid& grid = st.grid();
  require_same_grid(grid, phi.grid());
  const int n = grid.complex_dim();
  const std::size_t pts = grid.point_count();

  const std::vector<std::complex<double>> phat = st.forward(phi.values());
  std::vector<std::complex<double>> grad(pts * static_cast<std::size_t>(n));
  std::vector<std::complex<double>> work(pts);
  for (int j = 0; j < n; ++j) {
    for (std::size_t m = 0; m < pts; ++m) work[m] = st.dz_symbol(j, m) * phat[m];
    const std::vector<std::complex<double>> dj = st.inverse(work);
    for (std::size_t p = 0; p < pts; ++p) {
      grad[p * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = dj[p];
    }
  }
  return grad;
}

}  // namespace dhym

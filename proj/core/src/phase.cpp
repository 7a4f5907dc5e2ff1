#include "dhym/phase.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

namespace dhym {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kMagnitudeGuard = 1e300;

void require_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) throw Error("spectrum entry is not finite");
  }
}
}  // namespace

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error("spectrum must have length >= 1");
  require_finite(values_);
  std::sort(values_.begin(), values_.end(), std::greater<double>());
}

Spectrum Spectrum::from_sorted(std::vector<double> values) {
  Spectrum s;
  if (values.empty()) throw Error("spectrum must have length >= 1");
  require_finite(values);
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i - 1] < values[i]) throw Error("spectrum not sorted non-increasing");
  }
  s.values_ = std::move(values);
  return s;
}

PhaseWindow::PhaseWindow(double theta0_, double Theta0_) : theta0(theta0_), Theta0(Theta0_) {
  if (!(theta0 > 0.0 && theta0 < Theta0 && Theta0 < kPi)) {
    throw Error("phase window requires 0 < theta0 < Theta0 < pi");
  }
}

PhaseWindow PhaseWindow::with_default_upper(double theta0) {
  return PhaseWindow(theta0, 0.5 * (theta0 + kPi));
}

double arccot(double x) {
  if (!std::isfinite(x)) throw Error("arccot requires finite input");
  return kPi / 2.0 - std::atan(x);
}

double lagrangian_phase(const Spectrum& lambda) {
  double sum = 0.0;
  for (double x : lambda.values()) sum += arccot(x);
  return sum;
}

ReIm sigma_product(const Spectrum& lambda) {
  double re = 1.0, im = 0.0;
  for (double x : lambda.values()) {
    // (re + i im) * (x + i)
    const double nre = re * x - im;
    const double nim = re + im * x;
    re = nre;
    im = nim;
    if (std::abs(re) > kMagnitudeGuard || std::abs(im) > kMagnitudeGuard) {
      throw MagnitudeError("sigma_product partial magnitude out of safe range");
    }
  }
  return {re, im};
}

double sigma_modulus(const Spectrum& lambda) {
  double p = 1.0;
  for (double x : lambda.values()) p *= std::sqrt(1.0 + x * x);
  return p;
}

bool near_phase_boundary(const Spectrum& lambda, double rel_floor) {
  const ReIm z = sigma_product(lambda);
  return z.im < rel_floor * sigma_modulus(lambda);
}

double operator_value(const Spectrum& lambda, OperatorShift shift) {
  const double theta = lagrangian_phase(lambda);
  if (!(theta > 0.0 && theta < kPi)) {
    throw PhaseOutOfRange("total phase outside (0, pi)");
  }
  const ReIm z = sigma_product(lambda);
  return (z.re - shift.b) / z.im;
}

std::vector<double> operator_gradient(const Spectrum& lambda, OperatorShift shift) {
  const double theta = lagrangian_phase(lambda);
  if (!(theta > 0.0 && theta < kPi)) {
    throw PhaseOutOfRange("total phase outside (0, pi)");
  }
  const ReIm z = sigma_product(lambda);
  const double p = sigma_modulus(lambda);
  const double p2 = p * p;
  const int n = lambda.dim();
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double li = lambda[i];
    const double denom = z.im * z.im * (1.0 + li * li);
    g[static_cast<std::size_t>(i)] = (p2 + shift.b * (li * z.im - z.re)) / denom;
  }
  return g;
}

double elementary_symmetric(const Spectrum& lambda, int k) {
  const int n = lambda.dim();
  if (k < 0 || k > n) throw Error("elementary symmetric index out of range");
  // Coefficient recurrence of prod_i (x + lambda_i).
  std::vector<double> e(static_cast<std::size_t>(k) + 1, 0.0);
  e[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    const double li = lambda[i];
    for (int j = std::min(k, i + 1); j >= 1; --j) {
      e[static_cast<std::size_t>(j)] += li * e[static_cast<std::size_t>(j - 1)];
    }
  }
  return e[static_cast<std::size_t>(k)];
}

GammaReport gamma_k_membership(const Spectrum& lambda, int k) {
  if (k < 1 || k > lambda.dim()) throw Error("cone index out of range");
  GammaReport rep;
  rep.margin = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= k; ++j) {
    rep.margin = std::min(rep.margin, elementary_symmetric(lambda, j));
  }
  rep.member = rep.margin > 0.0;
  return rep;
}

std::vector<double> partial_phase_sums(const Spectrum& lambda) {
  const int n = lambda.dim();
  const double total = lagrangian_phase(lambda);
  std::vector<double> sums(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    sums[static_cast<std::size_t>(j)] = total - arccot(lambda[j]);
  }
  return sums;
}

ConeReport window_membership(const Spectrum& lambda, const PhaseWindow& w) {
  ConeReport rep;
  rep.phase = lagrangian_phase(lambda);
  const std::vector<double> sums = partial_phase_sums(lambda);
  const double worst = *std::max_element(sums.begin(), sums.end());
  rep.subsolution_margin = w.theta0 - worst;
  rep.in_window = rep.subsolution_margin > 0.0 && rep.phase < w.Theta0;
  rep.gamma_k_max = 0;
  for (int k = 1; k <= lambda.dim(); ++k) {
    if (!gamma_k_membership(lambda, k).member) break;
    rep.gamma_k_max = k;
  }
  return rep;
}

WangYuanReport wang_yuan_audit(const Spectrum& lambda) {
  WangYuanReport rep;
  const int n = lambda.dim();
  rep.applicable = lagrangian_phase(lambda) <= kPi;
  if (!rep.applicable) return rep;
  rep.pass = true;

  // Closure checks tolerate roundoff at the scale of the alternating sums.
  for (int j = 1; j <= n - 1; ++j) {
    double scale = 1.0;
    {
      std::vector<double> a;
      a.reserve(static_cast<std::size_t>(n));
      for (double x : lambda.values()) a.push_back(std::abs(x));
      scale += elementary_symmetric(Spectrum(std::move(a)), j);
    }
    if (elementary_symmetric(lambda, j) < -1e-12 * scale) {
      rep.pass = false;
      rep.violated = "S_" + std::to_string(j) + " < 0";
      return rep;
    }
  }
  if (n >= 2 && !(lambda[n - 2] > 0.0)) {
    rep.pass = false;
    rep.violated = "lambda_{n-1} <= 0";
    return rep;
  }
  const double combo = lambda[0] + (n - 1) * lambda[n - 1];
  const double scale = std::abs(lambda[0]) + (n - 1) * std::abs(lambda[n - 1]) + 1.0;
  if (combo < -1e-12 * scale) {
    rep.pass = false;
    rep.violated = "lambda_1 + (n-1) lambda_n < 0";
  }
  return rep;
}

Dim2Residuals dim2_reformulation_residual(const Spectrum& lambda, double theta0) {
  if (lambda.dim() != 2) throw Error("dim-2 reformulation requires n = 2");
  if (!(theta0 > 0.0 && theta0 < kPi)) throw Error("theta0 outside (0, pi)");
  const double c = std::cos(theta0) / std::sin(theta0);
  const double l1 = lambda[0], l2 = lambda[1];
  Dim2Residuals r;
  r.monge_ampere = (l1 - c) * (l2 - c) - (1.0 + c * c);
  r.original = (l1 * l2 - 1.0) - c * (l1 + l2);
  return r;
}

Dim3Residuals dim3_reformulation_residual(const Spectrum& lambda, double theta0, double rhs) {
  if (lambda.dim() != 3) throw Error("dim-3 reformulation requires n = 3");
  if (!(theta0 > 0.0 && theta0 < kPi)) throw Error("theta0 outside (0, pi)");
  const double c = std::cos(theta0) / std::sin(theta0);
  Spectrum mu({lambda[0] - c, lambda[1] - c, lambda[2] - c});
  Dim3Residuals r;
  r.monge_ampere = elementary_symmetric(mu, 3) - (c * c + 1.0) * elementary_symmetric(mu, 1) -
                   2.0 * c * (c * c + 1.0) - rhs;
  r.original = (elementary_symmetric(lambda, 3) - elementary_symmetric(lambda, 1)) -
               c * (elementary_symmetric(lambda, 2) - 1.0) - rhs;
  return r;
}

std::vector<double> operator_hessian_fd(const Spectrum& lambda, OperatorShift shift,
                                        double step) {
  const int n = lambda.dim();
  const std::vector<double>& base = lambda.values();
  auto eval = [&](const std::vector<double>& v) {
    return operator_value(Spectrum(std::vector<double>(v)), shift);
  };
  std::vector<double> h(static_cast<std::size_t>(n * n), 0.0);
  const double f0 = eval(base);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double val;
      if (i == j) {
        std::vector<double> vp = base, vm = base;
        vp[static_cast<std::size_t>(i)] += step;
        vm[static_cast<std::size_t>(i)] -= step;
        val = (eval(vp) - 2.0 * f0 + eval(vm)) / (step * step);
      } else {
        std::vector<double> vpp = base, vpm = base, vmp = base, vmm = base;
        vpp[static_cast<std::size_t>(i)] += step;
        vpp[static_cast<std::size_t>(j)] += step;
        vpm[static_cast<std::size_t>(i)] += step;
        vpm[static_cast<std::size_t>(j)] -= step;
        vmp[static_cast<std::size_t>(i)] -= step;
        vmp[static_cast<std::size_t>(j)] += step;
        vmm[static_cast<std::size_t>(i)] -= step;
        vmm[static_cast<std::size_t>(j)] -= step;
        val = (eval(vpp) - eval(vpm) - eval(vmp) + eval(vmm)) / (4.0 * step * step);
      }
      h[static_cast<std::size_t>(i * n + j)] = val;
      h[static_cast<std::size_t>(j * n + i)] = val;
    }
  }
  return h;
}

double operator_hessian_max_eig(const Spectrum& lambda, OperatorShift shift, double step) {
  const int n = lambda.dim();
  const std::vector<double> h = operator_hessian_fd(lambda, shift, step);
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = h[static_cast<std::size_t>(i * n + j)];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

Spectrum midpoint(const Spectrum& a, const Spectrum& b) {
  if (a.dim() != b.dim()) throw Error("midpoint requires equal dimensions");
  std::vector<double> m(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) m[static_cast<std::size_t>(i)] = 0.5 * (a[i] + b[i]);
  return Spectrum(std::move(m));
}

ChenAuditRecord chen_lemma_audit(const Spectrum& lambda, OperatorShift shift,
                                 const PhaseWindow& w, const Spectrum& probe) {
  ChenAuditRecord rec;
  const int n = lambda.dim();
  const ReIm z = sigma_product(lambda);
  rec.im = z.im;

  // Property (2): |d(1/im)/dlambda_i| against the bound shape
  // sqrt(P^2 / im^3) / sqrt(1 + lambda_i^2); report the best constant.
  const double p2 = sigma_modulus(lambda) * sigma_modulus(lambda);
  double best_c = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double li = lambda[i];
    const double dim_i = (li * z.im - z.re) / (1.0 + li * li);  // d im / d lambda_i
    const double deriv = std::abs(-dim_i / (z.im * z.im));
    const double shape = std::sqrt(p2 / (z.im * z.im * z.im)) / std::sqrt(1.0 + li * li);
    if (deriv > 0.0) {
      const double c = (shape / deriv) * (shape / deriv);
      best_c = std::min(best_c, c);
    }
  }
  rec.best_inverse_im_C = best_c;

  rec.hessian_max_eig = operator_hessian_max_eig(lambda, shift);

  // Margin against -eps2 * (P^2 / im^3) * diag(1/(1+lambda_i^2)).
  {
    const std::vector<double> h = operator_hessian_fd(lambda, shift);
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = h[static_cast<std::size_t>(i * n + j)];
    Eigen::VectorXd dinv_sqrt(n);
    for (int i = 0; i < n; ++i) dinv_sqrt(i) = std::sqrt(1.0 + lambda[i] * lambda[i]);
    const Eigen::MatrixXd scaled =
        dinv_sqrt.asDiagonal() * m * dinv_sqrt.asDiagonal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(scaled, Eigen::EigenvaluesOnly);
    const double c0 = p2 / (z.im * z.im * z.im);
    rec.empirical_eps2 = -es.eigenvalues().maxCoeff() / c0;
  }

  {
    const ConeReport mid = window_membership(midpoint(lambda, probe), w);
    rec.midpoint_in_closure = mid.subsolution_margin >= -1e-12 && mid.phase <= w.Theta0 + 1e-12;
  }

  const std::vector<double> g = operator_gradient(lambda, shift);
  rec.gradient_positive = std::all_of(g.begin(), g.end(), [](double x) { return x > 0.0; });
  return rec;
}

double sk_ratio_concavity_probe(const Spectrum& a, const Spectrum& b, int k) {
  if (a.dim() != b.dim()) throw Error("concavity probe requires equal dimensions");
  if (k < 1 || k + 1 > a.dim()) throw Error("cone index out of range");
  if (!gamma_k_membership(a, k).member || !gamma_k_membership(b, k).member) {
    throw ConeViolation("concavity probe endpoint outside Gamma^k");
  }
  auto ratio = [k](const Spectrum& s) {
    return elementary_symmetric(s, k + 1) / elementary_symmetric(s, k);
  };
  return ratio(midpoint(a, b)) - 0.5 * (ratio(a) + ratio(b));
}

}  // namespace dhym

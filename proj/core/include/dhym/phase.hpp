#pragma once

// Pointwise algebra of the Lagrangian phase operator: phases, symmetric
// polynomials, admissibility cones, the shifted quotient operator with its
// gradient, and the concavity/identity certificates used by the test suites.

#include <string>
#include <vector>

#include "dhym/errors.hpp"

namespace dhym {

/// Ordered eigenvalue vector of a Hermitian form relative to the metric at
/// one point, stored non-increasing.
class Spectrum {
 public:
  /// Sorts the entries descending; rejects empty or non-finite input.
  explicit Spectrum(std::vector<double> values);

  /// Trusts the caller that `values` is already sorted non-increasing.
  static Spectrum from_sorted(std::vector<double> values);

  int dim() const { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& values() const { return values_; }

 private:
  Spectrum() = default;
  std::vector<double> values_;
};

/// The pair (theta0, Theta0) cutting out the admissible cone, 0 < theta0 <
/// Theta0 < pi.
struct PhaseWindow {
  double theta0;
  double Theta0;

  PhaseWindow(double theta0_, double Theta0_);

  /// Theta0 halfway between theta0 and pi when not specified.
  static PhaseWindow with_default_upper(double theta0);
};

/// Pointwise right-hand shift of the quotient operator. Only b >= 0 is
/// certified for n <= 3; mildly negative shifts are admitted for n >= 4.
struct OperatorShift {
  double b = 0.0;

  bool valid_for(int n) const { return b >= 0.0 || n >= 4; }
};

struct ConeReport {
  bool in_window = false;
  double subsolution_margin = 0.0;  // theta0 minus the worst (n-1)-fold phase sum
  double phase = 0.0;               // total phase Theta(lambda)
  int gamma_k_max = 0;              // largest k with lambda in Gamma^k (0 if none)
};

/// arccot with range (0, pi): pi/2 - arctan(x). Strictly decreasing and
/// continuous across x = 0.
double arccot(double x);

/// Total phase Theta(lambda) = sum_i arccot(lambda_i), in (0, n*pi).
double lagrangian_phase(const Spectrum& lambda);

struct ReIm {
  double re = 0.0;
  double im = 0.0;
};

/// Real and imaginary part of prod_i (lambda_i + sqrt(-1)), by incremental
/// complex multiplication. Guards against overflow of partial magnitudes.
ReIm sigma_product(const Spectrum& lambda);

/// prod_i sqrt(1 + lambda_i^2); the modulus of sigma_product.
double sigma_modulus(const Spectrum& lambda);

/// True when im has lost all relative accuracy (phase within roundoff of the
/// pi boundary).
bool near_phase_boundary(const Spectrum& lambda, double rel_floor = 1e-12);

/// (re - b) / im. Equals cot(Theta) at b = 0. Throws PhaseOutOfRange unless
/// Theta(lambda) lies in (0, pi).
double operator_value(const Spectrum& lambda, OperatorShift shift);

/// Analytic partials of operator_value in each eigenvalue:
///   d/dlambda_i = (P^2 + b (lambda_i im - re)) / (im^2 (1 + lambda_i^2)),
/// with P^2 = prod (1 + lambda_k^2), obtained from dTheta/dlambda_i =
/// -1/(1+lambda_i^2) and the product rule. All entries are positive on the
/// closed window for shifts in the valid branch.
std::vector<double> operator_gradient(const Spectrum& lambda, OperatorShift shift);

/// k-th elementary symmetric polynomial, S_0 := 1. Throws on k out of [0, n].
double elementary_symmetric(const Spectrum& lambda, int k);

struct GammaReport {
  bool member = false;
  double margin = 0.0;  // min_{j<=k} S_j
};

/// lambda in Gamma^k iff S_j > 0 for all j = 1..k.
GammaReport gamma_k_membership(const Spectrum& lambda, int k);

/// Window membership with the subsolution margin theta0 - max_j sum_{i != j}
/// arccot(lambda_i). All n omitted-index sums are evaluated.
ConeReport window_membership(const Spectrum& lambda, const PhaseWindow& w);

/// The (n-1)-fold phase sums, one per omitted index, in eigenvalue order.
std::vector<double> partial_phase_sums(const Spectrum& lambda);

struct WangYuanReport {
  bool applicable = false;  // total phase <= pi
  bool pass = false;
  std::string violated;  // first violated clause, empty when pass
};

/// Certifies, for Theta(lambda) <= pi: lambda in closure(Gamma^{n-1}),
/// lambda_{n-1} > 0, and lambda_1 + (n-1) lambda_n >= 0.
WangYuanReport wang_yuan_audit(const Spectrum& lambda);

struct Dim2Residuals {
  double monge_ampere = 0.0;  // (l1-c)(l2-c) - csc^2(theta0)
  double original = 0.0;      // (l1 l2 - 1) - c (l1 + l2)
  double discrepancy() const { return monge_ampere - original; }
};

/// n = 2 reformulation residuals; the two vanish simultaneously.
Dim2Residuals dim2_reformulation_residual(const Spectrum& lambda, double theta0);

struct Dim3Residuals {
  double monge_ampere = 0.0;  // S3(mu) - (c^2+1) S1(mu) - 2c(c^2+1) - rhs, mu = lambda - c
  double original = 0.0;      // (S3 - S1) - c (S2 - 1) - rhs
  double discrepancy() const { return monge_ampere - original; }
};

/// n = 3 Monge-Ampere-type reformulation residuals against a pointwise
/// right-hand value.
Dim3Residuals dim3_reformulation_residual(const Spectrum& lambda, double theta0, double rhs);

struct ChenAuditRecord {
  double im = 0.0;                 // property (1): positive floor observed
  double best_inverse_im_C = 0.0;  // property (2): largest C consistent with the bound shape
  double hessian_max_eig = 0.0;    // property (4): finite-difference certificate
  double empirical_eps2 = 0.0;     // property (4), n >= 4: margin against the stated shape
  bool midpoint_in_closure = false;  // property (7) probe
  bool gradient_positive = false;    // property (3), checked alongside
};

/// Finite-difference Hessian of operator_value, symmetric central stencil.
/// Step defaults to the certified audit step.
std::vector<double> operator_hessian_fd(const Spectrum& lambda, OperatorShift shift,
                                        double step = 1e-4);

/// Largest eigenvalue of the finite-difference Hessian.
double operator_hessian_max_eig(const Spectrum& lambda, OperatorShift shift,
                                double step = 1e-4);

/// Midpoint of two spectra (entrywise on the sorted vectors).
Spectrum midpoint(const Spectrum& a, const Spectrum& b);

/// Numerical certificate for the quotient-operator properties at one point.
/// `probe` supplies the second endpoint for the convexity check; pass the
/// point itself for a degenerate probe.
ChenAuditRecord chen_lemma_audit(const Spectrum& lambda, OperatorShift shift,
                                 const PhaseWindow& w, const Spectrum& probe);

/// Midpoint concavity probe of S_{k+1}/S_k on Gamma^k:
///   ratio(midpoint) - (ratio(a) + ratio(b)) / 2,
/// non-negative by concavity. Throws ConeViolation if either endpoint is
/// outside Gamma^k.
double sk_ratio_concavity_probe(const Spectrum& a, const Spectrum& b, int k);

}  // namespace dhym

#pragma once

// Damped, cone-preserving Newton solver for the approximation equation, the
// continuity path in t, the exponential Monge-Ampere family, and the
// intermediate equation with its constants.

#include <vector>

#include "dhym/field.hpp"
#include "dhym/geometry.hpp"
#include "dhym/phase.hpp"

namespace dhym {

struct SolveConfig {
  double residual_tol = 1e-10;  // sup-norm
  int max_newton = 50;
  double cone_safety = 1e-3;  // minimum window margin during line search
  double linear_tol = 1e-8;   // Krylov relative tolerance
  int max_backtrack = 40;     // halvings, factor 0.5
  int krylov_max_iter = 400;
  int krylov_restart = 120;

  void validate(double theta0) const;
};

struct Backgrounds {
  HermitianField chi;
  HermitianField chi_tilde;
  HermitianField omega;
};

/// One continuity-path snapshot.
struct PathState {
  double t = 0.0;
  PotentialField phi;  // sup-normalized
  double c_t = 0.0;
  double cone_margin_min = 0.0;
  double residual_sup = 0.0;
  int newton_iters = 0;
};

/// Pointwise residual operator_value(lambda(z), shift * f(z)) - cot(theta0)
/// for X = base + i ddbar phi. Throws ConeExit if the spectrum leaves the
/// open window anywhere.
PotentialField residual_field(const PotentialField& phi, double t, const PotentialField& f,
                              double theta0, const Backgrounds& bg, const PhaseWindow& window);

/// Solves the approximation equation at fixed t with the cohomological
/// normalization. The iterate is kept mean-zero, each Newton step is
/// backtracked until the window margin stays >= cone_safety everywhere and
/// the residual sup-norm decreases, and the published potential is
/// sup-normalized.
PathState newton_solve(const PotentialField& phi0, double t, const PotentialField& f,
                       double theta0, const Backgrounds& bg, const PhaseWindow& window,
                       const SolveConfig& cfg);

/// Lower-level entry: explicit background and constant shift (the right-hand
/// side is shift * f). Used by the intermediate equation.
PathState solve_shifted_equation(const HermitianField& base, const HermitianField& omega,
                                 const PotentialField& f, double shift, double theta0,
                                 const PhaseWindow& window, const PotentialField& phi0,
                                 const SolveConfig& cfg, double t_label);

struct ContinuityPath {
  std::vector<PathState> states;
  bool ct_non_increasing = true;  // along decreasing t
  double raised_t_start = 0.0;    // first solved t after the auto-raise, 0 if not raised
};

/// Warm-started path over a strictly decreasing positive schedule. The first
/// t is auto-raised until the zero potential has window margin >=
/// 2 * cone_safety; a failed step bisects the t-decrement up to 8 times.
ContinuityPath continuity_path(const std::vector<double>& schedule, const PotentialField& f,
                               double theta0, const Backgrounds& bg, const PhaseWindow& window,
                               const SolveConfig& cfg);

/// Unique admissible solution of (chi_tilde + t omega + i ddbar u)^n =
/// e^{beta u} omega^n, by Newton on the log determinant ratio. Positivity of
/// the argument form is preserved by line search; no normalization (the
/// exponential term fixes the constant).
PotentialField solve_ma_exponential(const HermitianField& chi_tilde, const HermitianField& omega,
                                    double t, double beta, const SolveConfig& cfg);

struct StabilityConstants {
  double sigma1 = 0.0;
  double s1 = 0.0;
  double T1 = 0.0;
  double b_t = 0.0;
};

/// Mean of (re - cot(theta0) im) over the grid for X relative to omega; the
/// scalar balance entering every normalization constant.
double phase_balance(const HermitianField& x, const HermitianField& omega, double theta0);

/// s1 in (1/2, 1) solving the sigma1-shifted class balance for
/// chi + s1 chi_tilde, by bisection; BracketFailure when no sign change.
double find_s1(double sigma1, const Backgrounds& bg, double theta0);

/// T1 > 0 solving the class balance for chi + s1 chi_tilde + T1 omega.
double find_T1(double s1, const Backgrounds& bg, double theta0);

struct IntermediateSolution {
  PotentialField v_t;  // sup-normalized
  double b_t = 0.0;
  PathState state;
};

/// Solves the intermediate equation with backgrounds chi + s1 (chi_tilde +
/// t omega) and right-hand shift b_t - sigma1 determined by the balance. The
/// negative-shift branch is only admitted for n >= 4.
IntermediateSolution solve_intermediate(double s1, double sigma1, double t, double theta0,
                                        const Backgrounds& bg, const PhaseWindow& window,
                                        const SolveConfig& cfg);

}  // namespace dhym

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bohr/series.hpp"

namespace bohr {

// Every radius the verification suites claim, each with a closed form and
// an independent monotone-bisection route.
enum class RadiusId {
  classical,        // 1/3
  lemma_B,          // 1/3
  derivative,       // 1 - sqrt(2/3)
  odd_majorization, // 1/sqrt(3)
  odd_derivative,   // sqrt((4 - sqrt(13))/3)
  lemma1_ratio,     // inf_{n >= m} |a_{n+1}/a_n| of a coefficient list
  bombieri_radius,  // |a0| (validity radius of the Bombieri bound)
  r_a0,             // (sqrt((1+|a0|)^2 + |a0|^2) - (1+|a0|)) / |a0|^2
  a_tilde,          // root of x^4 + 2x^2 + 2x - 1 in (0, 1)
  spherical_rs,     // 1/(1 + 2 sqrt(1 - alpha^2))
  convex_rc,        // R2/(3 R2 - 2 delta)
};

struct RadiusParams {
  double a0 = 0.0;
  double alpha = 0.0;
  double R2 = 0.0;
  double delta = 0.0;
  std::vector<cplx> coeffs;  // lemma1_ratio
  int m = 0;
  int horizon = kDefaultOrder;
};

struct RadiusResult {
  double closed_form = 0.0;
  std::optional<double> independent;  // bisected (or ratio-derived) value
  double discrepancy = 0.0;
  int iterations = 0;
};

// Exact closed-form value; throws std::domain_error naming the violated
// hypothesis when the parameters leave the theorem's range.
double closed_form(RadiusId id, const RadiusParams& params = {});

struct BisectOutcome {
  double root = 0.0;
  int iterations = 0;
};

// Threshold of a monotone predicate: holds(lo) must be true and holds(hi)
// false; the returned root is within tol of the switch point.
BisectOutcome bisect_root(const std::function<bool(double)>& holds, double lo,
                          double hi, double tol);

// Closed form plus the independent route, with their discrepancy.
RadiusResult radius_result(RadiusId id, const RadiusParams& params = {});

enum class ThresholdFamily {
  derivative,        // M_{xi'_a}(r) <= 1
  odd_derivative,    // M_{g'_a}(r) <= 1
  lemma_B,           // M_{xi_a}(r) <= r, closed form 1/(1 + 2a)
  odd_majorization,  // M_{g_a}(r) <= r
  intro_mobius,      // M_{f'_a}(r) <= 1
};

// Largest radius at which the family's closed majorant inequality still
// holds, by bisection (lemma_B returns its closed form directly).
double family_threshold(ThresholdFamily which, double a);

// Independent closed forms for the same thresholds (root formulas of the
// defining quadratics), used as cross-checks.
double family_threshold_closed(ThresholdFamily which, double a);

struct InfimumResult {
  double grid_min = 0.0;
  double grid_argmin = 0.0;
  double limit = 0.0;       // explicit a -> 1- limit value
  bool decreasing = true;   // thresholds strictly decreasing over the grid
  bool min_at_largest = true;
  bool above_limit = true;  // grid minimum strictly exceeds the limit
};

InfimumResult infimum_over_family(ThresholdFamily which,
                                  const std::vector<double>& grid);

struct Lemma1Result {
  double value = 0.0;
  int argmin = 0;
  bool interior = false;  // minimizing index strictly inside the horizon
};

// min over m' <= n < horizon of |a_{n+1}/a_n|, with m' = max(m, 1).
Lemma1Result lemma1_radius(const std::vector<cplx>& coeffs, int m,
                           int horizon);

// r (1 - |a0|^2) / (1 - |a0| r), valid for 0 <= r <= |a0|.
double bombieri_bound(double a0_mod, double r);

// M(a, r) = (1 + a) (r/(1-ar) + r/(1-ar)^2) - 1; the derivative-radius
// inequality for xi_a holds exactly when M(a, r) <= 0.
double theorem21_M(double a, double r);

// Default sharpness grid {0, 0.1, ..., 0.9, 0.99, 0.999}.
std::vector<double> default_param_grid();

// Named constants.
double radius_classical();        // 1/3
double radius_derivative();       // 1 - sqrt(2/3)
double radius_odd_majorization(); // 1/sqrt(3)
double radius_odd_derivative();   // sqrt((4 - sqrt(13))/3)
double a_tilde_closed();          // quartic root by Ferrari's method

}  // namespace bohr

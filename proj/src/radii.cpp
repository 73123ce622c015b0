#include "bohr/radii.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bohr/families.hpp"

namespace bohr {

namespace {

constexpr double kBisectTol = 1e-12;
constexpr double kBracketHi = 1.0 - 1e-6;
constexpr int kMaxIterations = 200;

double sq(double x) { return x * x; }

}  // namespace

double radius_classical() { return 1.0 / 3.0; }
double radius_derivative() { return 1.0 - std::sqrt(2.0 / 3.0); }
double radius_odd_majorization() { return 1.0 / std::sqrt(3.0); }
double radius_odd_derivative() {
  return std::sqrt((4.0 - std::sqrt(13.0)) / 3.0);
}

double a_tilde_closed() {
  // x^4 + 2x^2 + 2x - 1 is already depressed; Ferrari's method needs the
  // real root of the resolvent 2m^3 + 4m^2 + 4m - 1 = 0, after which
  //   (x^2 + 1 + m)^2 = 2m (x - 1/(2m))^2
  // splits into two quadratics. Cardano for the resolvent: substitute
  // m = y - 2/3 to get y^3 + (2/3) y - 67/54 = 0.
  const double p = 2.0 / 3.0;
  const double q = -67.0 / 54.0;
  const double disc = std::sqrt(sq(q) / 4.0 + p * p * p / 27.0);
  const double m =
      std::cbrt(-q / 2.0 + disc) + std::cbrt(-q / 2.0 - disc) - 2.0 / 3.0;
  const double s = std::sqrt(2.0 * m);
  // branch x^2 + s x + (1 + m - s/(2m)) carries the root in (0, 1)
  const double cterm = 1.0 + m - s * 2.0 / (4.0 * m);
  const double d = std::sqrt(s * s - 4.0 * cterm);
  return (-s + d) / 2.0;
}

double theorem21_M(double a, double r) {
  const double d = 1.0 - a * r;
  return (1.0 + a) * (r / d + r / (d * d)) - 1.0;
}

BisectOutcome bisect_root(const std::function<bool(double)>& holds, double lo,
                          double hi, double tol) {
  if (!holds(lo)) throw std::domain_error("bisection bracket: pred(lo) false");
  if (holds(hi)) throw std::domain_error("bisection bracket: pred(hi) true");
  BisectOutcome out;
  for (int i = 0; i < kMaxIterations && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (holds(mid))
      lo = mid;
    else
      hi = mid;
    ++out.iterations;
  }
  out.root = 0.5 * (lo + hi);
  return out;
}

double closed_form(RadiusId id, const RadiusParams& p) {
  switch (id) {
    case RadiusId::classical:
    case RadiusId::lemma_B:
      return radius_classical();
    case RadiusId::derivative:
      return radius_derivative();
    case RadiusId::odd_majorization:
      return radius_odd_majorization();
    case RadiusId::odd_derivative:
      return radius_odd_derivative();
    case RadiusId::a_tilde:
      return a_tilde_closed();
    case RadiusId::lemma1_ratio:
      return lemma1_radius(p.coeffs, p.m, p.horizon).value;
    case RadiusId::bombieri_radius:
      if (!(p.a0 > 0.0 && p.a0 < 1.0))
        throw std::domain_error("bombieri_radius requires |a0| in (0, 1)");
      return p.a0;
    case RadiusId::r_a0: {
      const double x = p.a0;
      if (!(x >= a_tilde_closed() && x <= 1.0))
        throw std::domain_error(
            "r_a0 requires |a0| >= a_tilde (about 0.361103)");
      return (std::sqrt(sq(1.0 + x) + sq(x)) - (1.0 + x)) / sq(x);
    }
    case RadiusId::spherical_rs: {
      const double alpha = p.alpha;
      if (!(alpha > 0.0 && alpha <= std::sqrt(3.0) / 2.0))
        throw std::domain_error(
            "spherical_rs requires 0 < alpha <= sqrt(3)/2");
      return 1.0 / (1.0 + 2.0 * std::sqrt(1.0 - alpha * alpha));
    }
    case RadiusId::convex_rc: {
      if (!(p.delta > 0.0 && p.R2 >= 2.0 * p.delta))
        throw std::domain_error("convex_rc requires R2 >= 2*delta > 0");
      return p.R2 / (3.0 * p.R2 - 2.0 * p.delta);
    }
  }
  throw std::logic_error("unreachable radius id");
}

RadiusResult radius_result(RadiusId id, const RadiusParams& p) {
  RadiusResult out;
  out.closed_form = closed_form(id, p);

  auto bisect = [&](const std::function<bool(double)>& holds) {
    BisectOutcome b = bisect_root(holds, 0.0, kBracketHi, kBisectTol);
    out.independent = b.root;
    out.iterations = b.iterations;
  };

  switch (id) {
    case RadiusId::classical:
    case RadiusId::lemma_B:
      // a -> 1- limit of the Mobius / xi_a sharpness predicate
      bisect([](double r) { return 2.0 * r / (1.0 - r) <= 1.0; });
      break;
    case RadiusId::derivative:
      bisect([](double r) { return 2.0 * (1.0 / sq(1.0 - r) - 1.0) <= 1.0; });
      break;
    case RadiusId::odd_majorization:
      bisect([](double r) { return 2.0 * r * r / (1.0 - r * r) <= 1.0; });
      break;
    case RadiusId::odd_derivative:
      // 2 sum_{k>=1} (2k+1) r^{2k} <= 1, summed in closed form
      bisect([](double r) {
        const double x = r * r;
        return 2.0 * x * (3.0 - x) / sq(1.0 - x) <= 1.0;
      });
      break;
    case RadiusId::a_tilde:
      bisect([](double x) { return x * x * x * x + 2 * x * x + 2 * x <= 1.0; });
      break;
    case RadiusId::r_a0: {
      const double x = p.a0;
      // Schwarz-Pick circle bound plus the Bombieri estimate
      bisect([x](double r) {
        return (r + x) / (1.0 + x * r) +
                   r * (1.0 - x * x) / (1.0 - x * r) <=
               1.0;
      });
      break;
    }
    case RadiusId::spherical_rs: {
      const double alpha = p.alpha;
      const double beta = std::sqrt(1.0 - alpha * alpha);
      bisect([alpha, beta](double r) {
        return alpha * r / (1.0 - beta * r) <= alpha / (1.0 + beta);
      });
      break;
    }
    case RadiusId::convex_rc: {
      const double A = (p.R2 - p.delta) / p.R2;
      const double B = (2.0 * p.R2 - p.delta) * p.delta / p.R2;
      const double delta = p.delta;
      bisect([A, B, delta](double r) { return B * r / (1.0 - A * r) <= delta; });
      break;
    }
    case RadiusId::bombieri_radius: {
      // independent route: the coefficient-ratio radius of the Mobius map
      TruncatedSeries f = generate(FamilySpec::mobius(p.a0), p.horizon);
      out.independent = lemma1_radius(f.coeffs(), 0, p.horizon).value;
      break;
    }
    case RadiusId::lemma1_ratio:
      break;  // the ratio scan is itself the only route
  }

  if (out.independent)
    out.discrepancy = std::abs(out.closed_form - *out.independent);
  return out;
}

double family_threshold_closed(ThresholdFamily which, double a) {
  if (!(a >= 0.0 && a < 1.0))
    throw std::domain_error("family parameter requires a in [0, 1)");
  switch (which) {
    case ThresholdFamily::derivative: {
      // M(a, r) = 0 reduces to a(2a+1) r^2 - 2(1+2a) r + 1 = 0
      if (a == 0.0) return 0.5;
      const double b = 1.0 + 2.0 * a;
      return (b - std::sqrt(b * b - a * (2.0 * a + 1.0))) /
             (a * (2.0 * a + 1.0));
    }
    case ThresholdFamily::odd_derivative: {
      // a(2a+1) x^2 - (3+5a) x + 1 = 0 in x = r^2
      if (a == 0.0) return 1.0 / std::sqrt(3.0);
      const double b = 3.0 + 5.0 * a;
      const double x =
          (b - std::sqrt(b * b - 4.0 * a * (2.0 * a + 1.0))) /
          (2.0 * a * (2.0 * a + 1.0));
      return std::sqrt(x);
    }
    case ThresholdFamily::lemma_B:
      return 1.0 / (1.0 + 2.0 * a);
    case ThresholdFamily::odd_majorization:
      return 1.0 / std::sqrt(1.0 + 2.0 * a);
    case ThresholdFamily::intro_mobius:
      return a / (1.0 + std::sqrt(1.0 - a * a));
  }
  throw std::logic_error("unreachable threshold family");
}

double family_threshold(ThresholdFamily which, double a) {
  if (!(a >= 0.0 && a < 1.0))
    throw std::domain_error("family parameter requires a in [0, 1)");
  switch (which) {
    case ThresholdFamily::lemma_B:
      return family_threshold_closed(which, a);
    case ThresholdFamily::intro_mobius: {
      if (a == 0.0) return 0.0;  // M_{f'_0} == 1 everywhere
      ClosedMajorant m =
          closed_majorant(FamilySpec::mobius(a), MajorantOf::derivative);
      return bisect_root([&](double r) { return m.eval(r) <= 1.0; }, 0.0,
                         kBracketHi, kBisectTol)
          .root;
    }
    case ThresholdFamily::derivative: {
      ClosedMajorant m =
          closed_majorant(FamilySpec::xi(a), MajorantOf::derivative);
      return bisect_root([&](double r) { return m.eval(r) <= 1.0; }, 0.0,
                         kBracketHi, kBisectTol)
          .root;
    }
    case ThresholdFamily::odd_derivative: {
      ClosedMajorant m =
          closed_majorant(FamilySpec::odd_g(a), MajorantOf::derivative);
      return bisect_root([&](double r) { return m.eval(r) <= 1.0; }, 0.0,
                         kBracketHi, kBisectTol)
          .root;
    }
    case ThresholdFamily::odd_majorization: {
      ClosedMajorant m =
          closed_majorant(FamilySpec::odd_g(a), MajorantOf::function);
      return bisect_root([&](double r) { return m.eval(r) <= r; }, 0.0,
                         kBracketHi, kBisectTol)
          .root;
    }
  }
  throw std::logic_error("unreachable threshold family");
}

InfimumResult infimum_over_family(ThresholdFamily which,
                                  const std::vector<double>& grid) {
  if (grid.empty()) throw std::domain_error("infimum grid must be nonempty");
  if (which == ThresholdFamily::intro_mobius)
    throw std::domain_error(
        "the intro family admits no positive uniform radius");
  InfimumResult out;
  switch (which) {
    case ThresholdFamily::derivative:
      out.limit = radius_derivative();
      break;
    case ThresholdFamily::odd_derivative:
      out.limit = radius_odd_derivative();
      break;
    case ThresholdFamily::lemma_B:
      out.limit = radius_classical();
      break;
    case ThresholdFamily::odd_majorization:
      out.limit = radius_odd_majorization();
      break;
    default:
      break;
  }
  double prev = 0.0;
  double largest_a = -1.0;
  for (size_t i = 0; i < grid.size(); ++i) {
    const double t = family_threshold(which, grid[i]);
    if (i == 0 || t < out.grid_min) {
      out.grid_min = t;
      out.grid_argmin = grid[i];
    }
    if (i > 0 && !(t < prev)) out.decreasing = false;
    prev = t;
    largest_a = std::max(largest_a, grid[i]);
  }
  out.min_at_largest = out.grid_argmin == largest_a;
  out.above_limit = out.grid_min > out.limit;
  return out;
}

Lemma1Result lemma1_radius(const std::vector<cplx>& coeffs, int m,
                           int horizon) {
  const int first = std::max(m, 1);  // m = 0 starts the scan at n = 1
  const int last = std::min<int>(horizon, static_cast<int>(coeffs.size()) - 1);
  if (first >= last)
    throw std::domain_error("lemma1_radius needs at least two coefficients");
  for (int n = first; n <= last; ++n)
    if (coeffs[static_cast<size_t>(n)] == cplx{})
      throw std::domain_error(
          "lemma1_radius requires nonzero coefficients in range");
  Lemma1Result out;
  bool found = false;
  for (int n = first; n < last; ++n) {
    const double an = std::abs(coeffs[static_cast<size_t>(n)]);
    const double ratio = std::abs(coeffs[static_cast<size_t>(n) + 1]) / an;
    if (!found || ratio < out.value) {
      out.value = ratio;
      out.argmin = n;
      found = true;
    }
  }
  out.interior = out.argmin > first && out.argmin < last - 1;
  return out;
}

double bombieri_bound(double a0_mod, double r) {
  if (!(a0_mod > 0.0 && a0_mod < 1.0))
    throw std::domain_error("bombieri_bound requires |a0| in (0, 1)");
  if (!(r >= 0.0 && r <= a0_mod))
    throw std::domain_error("bombieri_bound is valid only for r <= |a0|");
  return r * (1.0 - a0_mod * a0_mod) / (1.0 - a0_mod * r);
}

std::vector<double> default_param_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 9; ++i) g.push_back(0.1 * i);
  g.push_back(0.99);
  g.push_back(0.999);
  return g;
}

}  // namespace bohr

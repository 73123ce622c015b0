#include "bohr/families.hpp"

#include <cmath>
#include <stdexcept>

namespace bohr {

namespace rng {

namespace {
std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace

double unit_real(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

cplx disk_point(std::uint64_t& state, double radius) {
  const double r = radius * std::sqrt(unit_real(state));
  const double theta = 2.0 * 3.141592653589793238462643 * unit_real(state);
  return std::polar(r, theta);
}

std::uint64_t stream(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t s = seed ^ (tag * 0xD1B54A32D192ED03ULL);
  splitmix64(s);
  return s;
}

}  // namespace rng

void FamilySpec::validate() const {
  switch (kind) {
    case FamilyKind::mobius_fa:
    case FamilyKind::xi_a:
    case FamilyKind::g_a:
    case FamilyKind::k_a_convex:
      if (!(a >= 0.0 && a < 1.0))
        throw std::domain_error("family parameter requires a in [0, 1)");
      break;
    case FamilyKind::k_alpha:
      if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::domain_error("family parameter requires alpha in (0, 1]");
      break;
    case FamilyKind::intro_square:
      if (!(alpha1 > 0.0 && alpha1 < 1.0))
        throw std::domain_error("family parameter requires alpha1 in (0, 1)");
      break;
    case FamilyKind::blaschke_witness:
      for (const cplx& z : zeros)
        if (std::abs(z) > 0.9)
          throw std::domain_error("Blaschke zeros must satisfy |z_k| <= 0.9");
      break;
    case FamilyKind::remark_product:
      break;
  }
}

namespace {

// (z - z0)/(1 - conj(z0) z): constant -z0, then conj(z0)^{n-1} (1 - |z0|^2).
TruncatedSeries blaschke_factor_series(cplx z0, int order) {
  if (z0 == cplx{}) return TruncatedSeries::identity(order);
  std::vector<cplx> c(static_cast<size_t>(order) + 1);
  c[0] = -z0;
  const double m2 = std::norm(z0);
  cplx p = 1.0;
  for (int n = 1; n <= order; ++n) {
    c[static_cast<size_t>(n)] = p * (1.0 - m2);
    p *= std::conj(z0);
  }
  const double m = std::abs(z0);
  return TruncatedSeries(std::move(c),
                         TailBound{(1.0 - m2) / m, m, order + 1});
}

}  // namespace

TruncatedSeries blaschke_product(const std::vector<cplx>& zeros, int order) {
  TruncatedSeries b = TruncatedSeries::constant(1.0, order);
  for (const cplx& z : zeros) b = mul(b, blaschke_factor_series(z, order));
  return b;
}

std::vector<cplx> sample_disk_zeros(std::uint64_t seed, int count,
                                    double radius) {
  std::uint64_t s = rng::stream(seed, 0x5eedb1a5c4e5ULL);
  std::vector<cplx> zeros;
  zeros.reserve(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k) zeros.push_back(rng::disk_point(s, radius));
  return zeros;
}

TruncatedSeries generate(const FamilySpec& spec, int order) {
  spec.validate();
  const double a = spec.a;
  std::vector<cplx> c(static_cast<size_t>(order) + 1);
  switch (spec.kind) {
    case FamilyKind::mobius_fa: {
      c[0] = a;
      double p = 1.0 - a * a;
      for (int n = 1; n <= order; ++n) {
        c[static_cast<size_t>(n)] = p;
        p *= -a;
      }
      std::optional<TailBound> t;
      if (a > 0.0) t = TailBound{(1.0 - a * a) / a, a, order + 1};
      return TruncatedSeries(std::move(c), t);
    }
    case FamilyKind::xi_a: {
      if (order >= 1) c[1] = -a;
      double p = 1.0 - a * a;
      for (int n = 2; n <= order; ++n) {
        c[static_cast<size_t>(n)] = p;
        p *= a;
      }
      std::optional<TailBound> t;
      if (a > 0.0) t = TailBound{(1.0 - a * a) / (a * a), a, order + 1};
      return TruncatedSeries(std::move(c), t);
    }
    case FamilyKind::g_a: {
      if (order >= 1) c[1] = -a;
      double p = 1.0 - a * a;
      for (int m = 3; m <= order; m += 2) {
        c[static_cast<size_t>(m)] = p;
        p *= a;
      }
      std::optional<TailBound> t;
      if (a > 0.0)
        t = TailBound{(1.0 - a * a) / std::pow(a, 1.5), std::sqrt(a),
                      order + 1};
      return TruncatedSeries(std::move(c), t);
    }
    case FamilyKind::k_alpha: {
      const double beta = std::sqrt(1.0 - spec.alpha * spec.alpha);
      double p = spec.alpha;
      for (int n = 1; n <= order; ++n) {
        c[static_cast<size_t>(n)] = p;
        p *= beta;
      }
      std::optional<TailBound> t;
      if (beta > 0.0) t = TailBound{spec.alpha / beta, beta, order + 1};
      return TruncatedSeries(std::move(c), t);
    }
    case FamilyKind::k_a_convex: {
      double p = 1.0;
      for (int n = 1; n <= order; ++n) {
        c[static_cast<size_t>(n)] = p;
        p *= a;
      }
      std::optional<TailBound> t;
      if (a > 0.0) t = TailBound{1.0 / a, a, order + 1};
      return TruncatedSeries(std::move(c), t);
    }
    case FamilyKind::intro_square: {
      c[0] = spec.alpha1 * spec.alpha1;
      if (order >= 1) c[1] = -2.0 * spec.alpha1;
      if (order >= 2) c[2] = 1.0;
      return TruncatedSeries(std::move(c));
    }
    case FamilyKind::remark_product: {
      if (order >= 1) c[1] = 1.0;
      if (order >= 2) c[2] = 1.0;
      return TruncatedSeries(std::move(c));
    }
    case FamilyKind::blaschke_witness:
      return mul_z(blaschke_product(spec.zeros, order));
  }
  throw std::logic_error("unreachable family kind");
}

ClosedMajorant closed_majorant(const FamilySpec& spec, MajorantOf which) {
  spec.validate();
  const double a = spec.a;
  const bool deriv = which == MajorantOf::derivative;
  switch (spec.kind) {
    case FamilyKind::xi_a:
      if (deriv)
        return {[a](double r) {
                  const double d = 1.0 - a * r;
                  return a + (1.0 - a * a) * r * (2.0 - a * r) / (d * d);
                },
                1.0};
      return {[a](double r) {
                return a * r + (1.0 - a * a) * r * r / (1.0 - a * r);
              },
              1.0};
    case FamilyKind::g_a:
      if (deriv)
        return {[a](double r) {
                  const double d = 1.0 - a * r * r;
                  return a +
                         (1.0 - a * a) * r * r * (3.0 - a * r * r) / (d * d);
                },
                1.0};
      return {[a](double r) {
                return a * r + (1.0 - a * a) * r * r * r / (1.0 - a * r * r);
              },
              1.0};
    case FamilyKind::mobius_fa:
      if (deriv)
        return {[a](double r) {
                  const double d = 1.0 - a * r;
                  return (1.0 - a * a) / (d * d);
                },
                1.0};
      return {[a](double r) { return a + (1.0 - a * a) * r / (1.0 - a * r); },
              1.0};
    case FamilyKind::k_alpha: {
      const double alpha = spec.alpha;
      const double beta = std::sqrt(1.0 - alpha * alpha);
      if (deriv)
        return {[alpha, beta](double r) {
                  const double d = 1.0 - beta * r;
                  return alpha / (d * d);
                },
                1.0};
      return {[alpha, beta](double r) { return alpha * r / (1.0 - beta * r); },
              1.0};
    }
    case FamilyKind::k_a_convex:
      if (deriv)
        return {[a](double r) {
                  const double d = 1.0 - a * r;
                  return 1.0 / (d * d);
                },
                1.0};
      return {[a](double r) { return r / (1.0 - a * r); }, 1.0};
    case FamilyKind::intro_square: {
      const double a1 = spec.alpha1;
      if (deriv) return {[a1](double r) { return 2.0 * a1 + 2.0 * r; }, 1.0};
      return {[a1](double r) { return a1 * a1 + 2.0 * a1 * r + r * r; }, 1.0};
    }
    case FamilyKind::remark_product:
      if (deriv) return {[](double r) { return 1.0 + 2.0 * r; }, 1.0};
      return {[](double r) { return r + r * r; }, 1.0};
    case FamilyKind::blaschke_witness:
      break;
  }
  throw std::invalid_argument("witness families have no closed majorant");
}

TruncatedSeries sample_schwarz(std::uint64_t seed, int degree, int order) {
  if (degree < 0 || degree > 6)
    throw std::domain_error("witness degree must lie in [0, 6]");
  FamilySpec spec{FamilyKind::blaschke_witness};
  spec.zeros = sample_disk_zeros(seed, degree);
  return generate(spec, order);
}

TruncatedSeries SelfMapSample::series(int order) const {
  TruncatedSeries b = blaschke_product(zeros, order);
  if (even) b = stretch2(b);
  if (c0 == cplx{}) return b;
  return compose_automorphism(b, c0);
}

TruncatedSeries SelfMapSample::composed_with(const TruncatedSeries& w) const {
  const int order = w.order();
  TruncatedSeries arg = even ? mul(w, w) : w;
  TruncatedSeries b = TruncatedSeries::constant(1.0, order);
  for (const cplx& z : zeros) b = mul(b, compose_blaschke_factor(arg, z));
  b = b.without_tail().with_tail(TailBound::self_map(order));
  if (c0 == cplx{}) return b;
  return compose_automorphism(b, c0);
}

SelfMapSample sample_self_map(std::uint64_t seed, int degree) {
  SelfMapSample s;
  s.zeros = sample_disk_zeros(seed, degree);
  std::uint64_t st = rng::stream(seed, 0xc0a7ULL);
  s.c0 = rng::disk_point(st, 0.8);
  return s;
}

SelfMapSample sample_even_self_map(std::uint64_t seed, int degree) {
  SelfMapSample s = sample_self_map(seed, degree);
  s.even = true;
  return s;
}

TruncatedSeries sample_odd_schwarz(std::uint64_t seed, int degree, int order) {
  FamilySpec spec{FamilyKind::blaschke_witness};
  spec.zeros = sample_disk_zeros(seed, degree);
  return mul_z(stretch2(blaschke_product(spec.zeros, order)));
}

TruncatedSeries compose_blaschke_factor(const TruncatedSeries& w, cplx zero) {
  const int order = w.order();
  TruncatedSeries num = add(w, TruncatedSeries::constant(-zero, order));
  TruncatedSeries den =
      add(scale(w, -std::conj(zero)), TruncatedSeries::constant(1.0, order));
  TruncatedSeries out = mul(num, reciprocal(den));
  return out.without_tail().with_tail(TailBound::self_map(order));
}

TruncatedSeries compose_automorphism(const TruncatedSeries& w, cplx c0) {
  if (std::abs(c0) >= 1.0)
    throw std::domain_error("automorphism shift must satisfy |c0| < 1");
  const int order = w.order();
  TruncatedSeries num = add(w, TruncatedSeries::constant(c0, order));
  TruncatedSeries den =
      add(scale(w, std::conj(c0)), TruncatedSeries::constant(1.0, order));
  TruncatedSeries out = mul(num, reciprocal(den));
  return out.without_tail().with_tail(TailBound::self_map(order));
}

TruncatedSeries compose_mobius(const TruncatedSeries& w, double a) {
  return compose_automorphism(w, cplx{a, 0.0});
}

TruncatedSeries compose_geometric(const TruncatedSeries& w, double A,
                                  double B) {
  if (!(A >= 0.0 && A < 1.0))
    throw std::domain_error("geometric target requires A in [0, 1)");
  const int order = w.order();
  TruncatedSeries den =
      add(scale(w, -A), TruncatedSeries::constant(1.0, order));
  TruncatedSeries out = scale(mul(w, reciprocal(den)), B);
  return out.without_tail().with_tail(
      TailBound{B / (1.0 - A), 1.0, order + 1});
}

TruncatedSeries compose_reciprocal_shift(const TruncatedSeries& w,
                                         double beta) {
  if (!(beta >= 0.0 && beta < 1.0))
    throw std::domain_error("reciprocal shift requires beta in [0, 1)");
  const int order = w.order();
  TruncatedSeries den =
      add(scale(w, beta), TruncatedSeries::constant(1.0, order));
  TruncatedSeries out = reciprocal(den);
  return out.with_tail(TailBound{1.0 / (1.0 - beta), 1.0, order + 1});
}

}  // namespace bohr

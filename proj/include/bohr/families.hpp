#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bohr/series.hpp"

namespace bohr {

// Extremal families of the unit disk. Each non-witness kind has
// closed-form coefficients and an exact geometric tail.
//
//   mobius_fa      (z + a)/(1 + a z),      a in [0, 1)
//   xi_a           z (z - a)/(1 - a z),    a in [0, 1)
//   g_a            xi_a(z^2)/z,            a in [0, 1)
//   k_alpha        alpha z/(1 - sqrt(1-alpha^2) z),  alpha in (0, 1]
//   k_a_convex     z/(1 - a z),            a in [0, 1)
//   intro_square   (z - alpha1)^2,         alpha1 in (0, 1)
//   remark_product z (z + 1)
//   blaschke_witness  z * prod (z - z_k)/(1 - conj(z_k) z), |z_k| <= 0.9
enum class FamilyKind {
  mobius_fa,
  xi_a,
  g_a,
  k_alpha,
  k_a_convex,
  blaschke_witness,
  intro_square,
  remark_product,
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::xi_a;
  double a = 0.0;
  double alpha = 1.0;
  double alpha1 = 0.0;
  std::vector<cplx> zeros;  // blaschke_witness only

  static FamilySpec mobius(double a) { return {FamilyKind::mobius_fa, a}; }
  static FamilySpec xi(double a) { return {FamilyKind::xi_a, a}; }
  static FamilySpec odd_g(double a) { return {FamilyKind::g_a, a}; }
  static FamilySpec spherical(double alpha) {
    FamilySpec s{FamilyKind::k_alpha};
    s.alpha = alpha;
    return s;
  }
  static FamilySpec convex(double a) { return {FamilyKind::k_a_convex, a}; }

  void validate() const;
};

// Closed-form majorant of a family member (or of its derivative), valid on
// [0, valid_hi).
struct ClosedMajorant {
  std::function<double(double)> eval;
  double valid_hi = 1.0;
};

enum class MajorantOf { function, derivative };

// Taylor coefficients of the family member, with the family's exact
// geometric tail attached.
TruncatedSeries generate(const FamilySpec& spec, int order);

ClosedMajorant closed_majorant(const FamilySpec& spec, MajorantOf which);

// Expansion of prod_k (z - z_k)/(1 - conj(z_k) z) with its exact geometric
// tail (empty product = 1).
TruncatedSeries blaschke_product(const std::vector<cplx>& zeros, int order);

// Deterministic zeros with |z_k| <= radius.
std::vector<cplx> sample_disk_zeros(std::uint64_t seed, int count,
                                    double radius = 0.9);

// Schwarz witness w(z) = z * B(z) for a Blaschke product B with zeros drawn
// from the seed, |z_k| <= 0.9. w(0) = 0 and sup |w| <= 1.
TruncatedSeries sample_schwarz(std::uint64_t seed, int degree, int order);

// Structured self-map samples used by the verification suites. Keeping the
// Blaschke data around lets g = f(w(z)) be expanded through series division
// instead of generic composition.
struct SelfMapSample {
  std::vector<cplx> zeros;
  cplx c0;        // automorphism shift, |c0| < 1
  bool even = false;  // substitute z^2 into the Blaschke product

  TruncatedSeries series(int order) const;
  TruncatedSeries composed_with(const TruncatedSeries& w) const;
};

SelfMapSample sample_self_map(std::uint64_t seed, int degree);
SelfMapSample sample_even_self_map(std::uint64_t seed, int degree);
TruncatedSeries sample_odd_schwarz(std::uint64_t seed, int degree, int order);

// Rational substitutions: each takes a self-map series w (w(0) = 0 for the
// subordination uses) and returns the expansion of the named function of w,
// with the tail certificate the target function's range bound provides.
TruncatedSeries compose_blaschke_factor(const TruncatedSeries& w, cplx zero);
TruncatedSeries compose_automorphism(const TruncatedSeries& w, cplx c0);
TruncatedSeries compose_mobius(const TruncatedSeries& w, double a);
TruncatedSeries compose_geometric(const TruncatedSeries& w, double A,
                                  double B);
TruncatedSeries compose_reciprocal_shift(const TruncatedSeries& w,
                                         double beta);

// Deterministic uniforms for the witness generators.
namespace rng {
double unit_real(std::uint64_t& state);
cplx disk_point(std::uint64_t& state, double radius);
std::uint64_t stream(std::uint64_t seed, std::uint64_t tag);
}  // namespace rng

}  // namespace bohr

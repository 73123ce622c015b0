#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace bohr {

using cplx = std::complex<double>;

// Truncation order used by the verification suites unless overridden.
inline constexpr int kDefaultOrder = 256;

// Geometric certificate for the coefficients a truncation dropped: the
// underlying function satisfies |a_n| <= c * rho^n for every n >= start,
// hence
//
//     sum_{n >= start} |a_n| r^n  <=  c (rho r)^start / (1 - rho r)
//
// for rho * r < 1. rho == 1 is allowed; the bound then reads
// c r^start / (1 - r), the right shape for analytic self maps of the disk
// (|a_n| <= 1).
struct TailBound {
  double c = 0.0;
  double rho = 0.0;
  int start = 0;

  double bound(double r) const;

  static TailBound self_map(int order, double c = 1.0) {
    return TailBound{c, 1.0, order + 1};
  }
};

// Value of a majorant series at a radius: the truncated sum and, when a
// tail certificate is attached, the truncated sum plus the tail bound.
// Without a tail the two coincide and refer to the polynomial itself.
struct MajorantValue {
  double lower = 0.0;
  double upper = 0.0;
};

// Finitely many Taylor coefficients of an analytic function on the unit
// disk plus an optional TailBound. A series without a tail is treated as
// exact (a polynomial); every operation below produces exact coefficients
// up to the result order and propagates a tail only when one can be derived
// from the inputs' certificates.
class TruncatedSeries {
 public:
  TruncatedSeries() : coeffs_(1, cplx{}) {}
  explicit TruncatedSeries(std::vector<cplx> coeffs,
                           std::optional<TailBound> tail = std::nullopt);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  cplx coeff(int n) const {
    return (n >= 0 && n <= order()) ? coeffs_[static_cast<size_t>(n)] : cplx{};
  }
  const std::optional<TailBound>& tail() const { return tail_; }

  TruncatedSeries with_tail(TailBound t) const;
  TruncatedSeries without_tail() const { return TruncatedSeries(coeffs_); }

  static TruncatedSeries zero(int order);
  static TruncatedSeries constant(cplx value, int order);
  static TruncatedSeries identity(int order);  // z

 private:
  std::vector<cplx> coeffs_;  // coefficient of z^n at index n
  std::optional<TailBound> tail_;
};

// M_f(r) = sum |a_n| r^n, summed in ascending index order.
// Requires 0 <= r < 1.
MajorantValue majorant_eval(const TruncatedSeries& f, double r);

// Coefficientwise sum, truncated to the smaller order. Tails combine into a
// fresh geometric cover of everything the result no longer represents.
TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);

TruncatedSeries scale(const TruncatedSeries& f, cplx factor);

// Cauchy product truncated to the smaller order.
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);

// f(phi(z)) truncated to the common order. phi must have an exactly zero
// constant term, which makes every output coefficient a finite computation.
// The result carries no tail.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& phi);

// Coefficient n*a_n moves to index n-1. A geometric tail with rho < 1
// survives with a bumped ratio; a rho == 1 tail cannot be carried.
TruncatedSeries derivative(const TruncatedSeries& f);

TruncatedSeries odd_part(const TruncatedSeries& f);
TruncatedSeries even_part(const TruncatedSeries& f);

// f(z)/z for f with zero constant term.
TruncatedSeries shift_div_z(const TruncatedSeries& f);

// z * f(z), same order.
TruncatedSeries mul_z(const TruncatedSeries& f);

// f(z^2), same order.
TruncatedSeries stretch2(const TruncatedSeries& f);

// 1/f to the same order; requires f(0) != 0. No tail on the result.
TruncatedSeries reciprocal(const TruncatedSeries& f);

// Horner evaluation of the truncated polynomial.
cplx eval_at(const TruncatedSeries& f, cplx z);

namespace detail {
// Full linear convolution, direct for small sizes and FFT-based above a
// work threshold. Exposed for the polynomial machinery in tests.
std::vector<cplx> convolve(const std::vector<cplx>& a,
                           const std::vector<cplx>& b);
}  // namespace detail

}  // namespace bohr

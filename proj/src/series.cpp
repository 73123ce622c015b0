#include "bohr/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace bohr {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

size_t next_pow2(size_t n) {
  size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

const std::vector<cplx>& twiddles(size_t n) {
  // one table per size, grown on demand; thread_local keeps the series
  // operations free of shared mutable state
  thread_local std::unordered_map<size_t, std::vector<cplx>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<cplx> w(n / 2);
  for (size_t k = 0; k < n / 2; ++k)
    w[k] = std::polar(1.0, -2.0 * kPi * static_cast<double>(k) /
                               static_cast<double>(n));
  return cache.emplace(n, std::move(w)).first->second;
}

void fft_in_place(std::vector<cplx>& a, bool inverse) {
  const size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const auto& w = twiddles(n);
  for (size_t len = 2; len <= n; len <<= 1) {
    const size_t step = n / len;
    for (size_t i = 0; i < n; i += len) {
      for (size_t k = 0; k < len / 2; ++k) {
        cplx t = w[k * step];
        if (inverse) t = std::conj(t);
        t *= a[i + k + len / 2];
        a[i + k + len / 2] = a[i + k] - t;
        a[i + k] += t;
      }
    }
  }
  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv;
  }
}

std::vector<cplx> convolve_direct(const std::vector<cplx>& a,
                                  const std::vector<cplx>& b) {
  std::vector<cplx> out(a.size() + b.size() - 1, cplx{});
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<cplx> convolve_fft(const std::vector<cplx>& a,
                               const std::vector<cplx>& b) {
  const size_t out_len = a.size() + b.size() - 1;
  const size_t n = next_pow2(out_len);
  std::vector<cplx> fa(n, cplx{}), fb(n, cplx{});
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  fft_in_place(fa, false);
  fft_in_place(fb, false);
  for (size_t i = 0; i < n; ++i) fa[i] *= fb[i];
  fft_in_place(fa, true);
  fa.resize(out_len);
  return fa;
}

// |coeff_n| of the underlying function: explicit inside the truncation,
// from the tail certificate beyond it, zero for an exact polynomial.
double coeff_bound(const TruncatedSeries& f, int n) {
  if (n <= f.order()) return std::abs(f.coeff(n));
  if (!f.tail()) return 0.0;
  return f.tail()->c * std::pow(f.tail()->rho, n);
}

// Sum of |coeff_n| over all n >= 0 of the underlying function; infinite
// tails converge only for rho < 1.
double total_mass(const TruncatedSeries& f) {
  double s = 0.0;
  for (const cplx& c : f.coeffs()) s += std::abs(c);
  if (f.tail() && f.tail()->rho < 1.0) {
    const auto& t = *f.tail();
    s += t.c * std::pow(t.rho, f.order() + 1) / (1.0 - t.rho);
  }
  return s;
}

double global_coeff_cap(const TruncatedSeries& f) {
  double m = f.tail() ? f.tail()->c : 0.0;
  for (const cplx& c : f.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

// Geometric cover (c', rho', start) for per-index requirements
// |coeff_n| <= spot_n on a finite range plus an eventually-valid envelope
// sum_i c_i rho_i^n. rho' is lifted to at least 0.75 when finite spots are
// present so that spot / rho'^n stays far from overflow at large orders.
std::optional<TailBound> build_cover(
    const std::vector<std::pair<int, double>>& spots, double env_c,
    double env_rho, int start) {
  bool have_spots = false;
  for (const auto& [n, v] : spots)
    if (v > 0.0) have_spots = true;
  if (!have_spots && env_c <= 0.0) return std::nullopt;
  double rho = env_rho;
  if (have_spots) rho = env_c > 0.0 ? std::max(rho, 0.75) : 1.0;
  double c = env_c;
  for (const auto& [n, v] : spots)
    if (v > 0.0) c = std::max(c, v / std::pow(rho, n));
  return TailBound{c, rho, start};
}

void check_unit_interval(double r) {
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error("majorant radius must lie in [0, 1)");
}

}  // namespace

double TailBound::bound(double r) const {
  if (rho * r >= 1.0)
    throw std::domain_error("tail bound requires rho * r < 1");
  return c * std::pow(rho * r, start) / (1.0 - rho * r);
}

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs,
                                 std::optional<TailBound> tail)
    : coeffs_(std::move(coeffs)), tail_(tail) {
  if (coeffs_.empty())
    throw std::invalid_argument("a series needs at least the constant term");
  if (tail_) {
    if (!(tail_->c >= 0.0) || !(tail_->rho >= 0.0 && tail_->rho <= 1.0))
      throw std::invalid_argument("tail bound requires c >= 0, rho in [0, 1]");
    if (tail_->start > order() + 1)
      throw std::invalid_argument(
          "tail bound must cover everything beyond the truncation order");
  }
}

TruncatedSeries TruncatedSeries::with_tail(TailBound t) const {
  return TruncatedSeries(coeffs_, t);
}

TruncatedSeries TruncatedSeries::zero(int order) {
  return TruncatedSeries(std::vector<cplx>(static_cast<size_t>(order) + 1));
}

TruncatedSeries TruncatedSeries::constant(cplx value, int order) {
  std::vector<cplx> c(static_cast<size_t>(order) + 1);
  c[0] = value;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::identity(int order) {
  std::vector<cplx> c(static_cast<size_t>(order) + 1);
  if (order >= 1) c[1] = 1.0;
  return TruncatedSeries(std::move(c));
}

MajorantValue majorant_eval(const TruncatedSeries& f, double r) {
  check_unit_interval(r);
  double sum = 0.0;
  double rp = 1.0;
  for (const cplx& c : f.coeffs()) {
    sum += std::abs(c) * rp;
    rp *= r;
  }
  MajorantValue v{sum, sum};
  if (f.tail()) v.upper += f.tail()->bound(r);
  return v;
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int n = std::min(f.order(), g.order());
  std::vector<cplx> c(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[static_cast<size_t>(i)] = f.coeff(i) + g.coeff(i);

  std::vector<std::pair<int, double>> spots;
  const int m = std::max(f.order(), g.order());
  for (int i = n + 1; i <= m; ++i)
    spots.emplace_back(i, coeff_bound(f, i) + coeff_bound(g, i));
  double env_c = 0.0, env_rho = 0.0;
  if (f.tail()) {
    env_c += f.tail()->c;
    env_rho = std::max(env_rho, f.tail()->rho);
  }
  if (g.tail()) {
    env_c += g.tail()->c;
    env_rho = std::max(env_rho, g.tail()->rho);
  }
  return TruncatedSeries(std::move(c), build_cover(spots, env_c, env_rho, n + 1));
}

TruncatedSeries scale(const TruncatedSeries& f, cplx factor) {
  std::vector<cplx> c = f.coeffs();
  for (auto& x : c) x *= factor;
  std::optional<TailBound> t = f.tail();
  if (t) t->c *= std::abs(factor);
  return TruncatedSeries(std::move(c), t);
}

namespace detail {
std::vector<cplx> convolve(const std::vector<cplx>& a,
                           const std::vector<cplx>& b) {
  if (a.size() * b.size() <= 4096) return convolve_direct(a, b);
  return convolve_fft(a, b);
}
}  // namespace detail

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int n = std::min(f.order(), g.order());
  std::vector<cplx> full = detail::convolve(f.coeffs(), g.coeffs());
  std::vector<cplx> c(full.begin(), full.begin() + n + 1);

  std::optional<TailBound> t;
  const bool tf = f.tail().has_value(), tg = g.tail().has_value();
  if (!tf && !tg) {
    // polynomial * polynomial: the dropped part is explicit
    double cap = 0.0;
    for (size_t i = static_cast<size_t>(n) + 1; i < full.size(); ++i)
      cap = std::max(cap, std::abs(full[i]));
    if (cap > 0.0) t = TailBound{cap, 1.0, n + 1};
  } else {
    const double rf = tf ? f.tail()->rho : 0.0;
    const double rg = tg ? g.tail()->rho : 0.0;
    if (rf < 1.0 && rg < 1.0) {
      // |h_n| <= [x^n](F G) <= F(x0) G(x0) / x0^n for the majorant
      // generating bounds F, G of the factors, any x0 within their radius
      const double rho = std::max(0.75, 0.5 * (1.0 + std::max(rf, rg)));
      const double x0 = 1.0 / rho;
      auto gen_bound = [x0](const TruncatedSeries& s) {
        double acc = 0.0, xp = 1.0;
        for (const cplx& a : s.coeffs()) {
          acc += std::abs(a) * xp;
          xp *= x0;
        }
        if (s.tail()) {
          const auto& tb = *s.tail();
          acc += tb.c * std::pow(tb.rho * x0, s.order() + 1) /
                 (1.0 - tb.rho * x0);
        }
        return acc;
      };
      t = TailBound{gen_bound(f) * gen_bound(g), rho, n + 1};
    } else if (rf < 1.0 || rg < 1.0) {
      // one factor has bounded total mass, the other a flat cap
      const TruncatedSeries& flat = (rf == 1.0) ? f : g;
      const TruncatedSeries& summable = (rf == 1.0) ? g : f;
      t = TailBound{global_coeff_cap(flat) * total_mass(summable), 1.0, n + 1};
    }
    // two flat (rho == 1) certificates admit no geometric cover
  }
  return TruncatedSeries(std::move(c), t);
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& phi) {
  if (phi.coeff(0) != cplx{})
    throw std::invalid_argument("compose requires phi(0) = 0");
  const int n = std::min(f.order(), phi.order());
  std::vector<cplx> p(phi.coeffs().begin(), phi.coeffs().begin() + n + 1);
  std::vector<cplx> acc(1, f.coeff(n));
  for (int k = n - 1; k >= 0; --k) {
    acc = detail::convolve(acc, p);
    if (acc.size() > static_cast<size_t>(n) + 1) acc.resize(n + 1);
    acc[0] += f.coeff(k);
  }
  acc.resize(n + 1, cplx{});
  return TruncatedSeries(std::move(acc));
}

TruncatedSeries derivative(const TruncatedSeries& f) {
  const int n = f.order();
  std::vector<cplx> c(static_cast<size_t>(std::max(n, 1)));
  for (int i = 1; i <= n; ++i)
    c[static_cast<size_t>(i) - 1] = static_cast<double>(i) * f.coeff(i);
  std::optional<TailBound> t;
  if (f.tail() && f.tail()->rho < 1.0 && f.tail()->c > 0.0) {
    // the explicit part is exact for m < n, so cover m >= n:
    // (m+1) c rho^{m+1} <= c' rho'^m with rho' > rho
    const double rho0 = f.tail()->rho;
    const double rho = std::max(0.75, 0.5 * (1.0 + rho0));
    const double ratio = rho0 / rho;
    auto h = [&](int m) {
      return static_cast<double>(m + 1) * std::pow(ratio, m);
    };
    double sup = h(n);
    if (ratio > 0.0) {
      // (m+1) ratio^m is unimodal with its peak near -1/log(ratio) - 1
      const double peak = -1.0 / std::log(ratio) - 1.0;
      if (peak > n) {
        const int lo = static_cast<int>(std::floor(peak));
        sup = std::max({sup, h(std::max(lo, n)), h(lo + 1)});
      }
    }
    t = TailBound{f.tail()->c * rho0 * sup, rho, n};
  }
  return TruncatedSeries(std::move(c), t);
}

TruncatedSeries odd_part(const TruncatedSeries& f) {
  std::vector<cplx> c = f.coeffs();
  for (int i = 0; i <= f.order(); i += 2) c[static_cast<size_t>(i)] = cplx{};
  return TruncatedSeries(std::move(c), f.tail());
}

TruncatedSeries even_part(const TruncatedSeries& f) {
  std::vector<cplx> c = f.coeffs();
  for (int i = 1; i <= f.order(); i += 2) c[static_cast<size_t>(i)] = cplx{};
  return TruncatedSeries(std::move(c), f.tail());
}

TruncatedSeries shift_div_z(const TruncatedSeries& f) {
  if (std::abs(f.coeff(0)) > 1e-12)
    throw std::invalid_argument("shift_div_z requires a zero constant term");
  const int n = f.order();
  std::vector<cplx> c(static_cast<size_t>(std::max(n, 1)));
  for (int i = 1; i <= n; ++i) c[static_cast<size_t>(i) - 1] = f.coeff(i);
  std::optional<TailBound> t;
  if (f.tail()) {
    // coefficient at m comes from index m+1: c rho^{m+1} = (c rho) rho^m
    t = TailBound{f.tail()->c * f.tail()->rho, f.tail()->rho,
                  std::max(f.tail()->start - 1, 0)};
    if (t->start > std::max(n, 1)) t->start = std::max(n, 1);
  }
  return TruncatedSeries(std::move(c), t);
}

TruncatedSeries mul_z(const TruncatedSeries& f) {
  const int n = f.order();
  std::vector<cplx> c(static_cast<size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) c[static_cast<size_t>(i)] = f.coeff(i - 1);
  std::vector<std::pair<int, double>> spots{{n + 1, coeff_bound(f, n)}};
  double env_c = 0.0, env_rho = 0.0;
  if (f.tail()) {
    // coefficient at m comes from index m-1: c rho^{m-1} = (c/rho) rho^m
    env_rho = f.tail()->rho;
    env_c = env_rho > 0.0 ? f.tail()->c / env_rho : 0.0;
  }
  return TruncatedSeries(std::move(c), build_cover(spots, env_c, env_rho, n + 1));
}

TruncatedSeries stretch2(const TruncatedSeries& f) {
  const int n = f.order();
  std::vector<cplx> c(static_cast<size_t>(n) + 1);
  for (int i = 0; 2 * i <= n; ++i) c[static_cast<size_t>(2 * i)] = f.coeff(i);
  // indices 2k beyond n come from explicit coefficients k <= n or the tail
  std::vector<std::pair<int, double>> spots;
  for (int k = n / 2 + 1; k <= n; ++k)
    spots.emplace_back(2 * k, std::abs(f.coeff(k)));
  double env_c = 0.0, env_rho = 0.0;
  if (f.tail()) {
    env_c = f.tail()->c;
    env_rho = std::sqrt(f.tail()->rho);
  }
  return TruncatedSeries(std::move(c), build_cover(spots, env_c, env_rho, n + 1));
}

TruncatedSeries reciprocal(const TruncatedSeries& f) {
  const cplx f0 = f.coeff(0);
  if (f0 == cplx{})
    throw std::invalid_argument("reciprocal requires f(0) != 0");
  const size_t len = static_cast<size_t>(f.order()) + 1;
  // Newton doubling: y <- y (2 - f y), exact through the current order
  std::vector<cplx> y{1.0 / f0};
  size_t m = 1;
  while (m < len) {
    const size_t m2 = std::min(2 * m, len);
    std::vector<cplx> fh(f.coeffs().begin(), f.coeffs().begin() + m2);
    std::vector<cplx> t = detail::convolve(fh, y);
    t.resize(m2);
    for (auto& x : t) x = -x;
    t[0] += 2.0;
    y = detail::convolve(y, t);
    y.resize(m2);
    m = m2;
  }
  return TruncatedSeries(std::move(y));
}

cplx eval_at(const TruncatedSeries& f, cplx z) {
  cplx acc{};
  for (int i = f.order(); i >= 0; --i) acc = acc * z + f.coeff(i);
  return acc;
}

}  // namespace bohr

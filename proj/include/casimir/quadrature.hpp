// Globally adaptive 21-point Gauss-Kronrod quadrature on finite intervals.
//
// The panel with the largest error estimate is bisected until the summed
// estimate meets max(abs_tol, rel_tol * |value|) or the panel budget is
// exhausted. Panel error is |K21 - G10|, floored at a few ulps of the
// panel's absolute integral.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <span>
#include <stdexcept>
#include <vector>

namespace casimir::quad {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int subdivisions = 0;
  bool converged = false;
};

namespace detail {

inline constexpr std::array<double, 11> kXgk{
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 11> kWgk{
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980029250, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

// 10-point Gauss weights for the odd-indexed Kronrod nodes.
inline constexpr std::array<double, 5> kWg{
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651146};

struct Panel {
  double lo, hi, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gauss_kronrod21(F& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = fc * kWgk[10];
  double gauss = 0.0;
  double absval = std::abs(fc) * kWgk[10];
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    absval += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  absval *= std::abs(half);
  const double roundoff = 20.0 * std::numeric_limits<double>::epsilon() * absval;
  return Panel{lo, hi, kronrod, std::max(std::abs(kronrod - gauss), roundoff)};
}

}  // namespace detail

/// Integrates f over [breaks.front(), breaks.back()], starting from the
/// panels delimited by `breaks` (at least two increasing points).
template <class F>
QuadResult integrate(F&& f, std::span<const double> breaks, double rel_tol, double abs_tol,
                     int max_panels) {
  if (breaks.size() < 2) throw std::invalid_argument("integrate: need at least two breakpoints");
  std::priority_queue<detail::Panel> heap;
  double value = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    auto p = detail::gauss_kronrod21(f, breaks[i], breaks[i + 1]);
    value += p.value;
    error += p.error;
    heap.push(p);
  }
  const int budget = std::max<int>(max_panels, static_cast<int>(heap.size()));
  int panels = static_cast<int>(heap.size());
  auto target = [&] { return std::max(abs_tol, rel_tol * std::abs(value)); };
  while (error > target() && panels < budget && !heap.empty()) {
    const auto worst = heap.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) break;
    heap.pop();
    auto left = detail::gauss_kronrod21(f, worst.lo, mid);
    auto right = detail::gauss_kronrod21(f, mid, worst.hi);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++panels;
  }
  // Re-sum from the panels to shed the running-update rounding.
  double v = 0.0, e = 0.0;
  std::vector<detail::Panel> all;
  all.reserve(heap.size());
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
  for (const auto& p : all) {
    v += p.value;
    e += p.error;
  }
  return QuadResult{v, e, panels, e <= std::max(abs_tol, rel_tol * std::abs(v))};
}

template <class F>
QuadResult integrate(F&& f, double lo, double hi, double rel_tol, double abs_tol, int max_panels) {
  const std::array<double, 2> b{lo, hi};
  return integrate(std::forward<F>(f), std::span<const double>(b), rel_tol, abs_tol, max_panels);
}

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace casimir::quad

#pragma once

#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kga {

/// Thrown when the adaptive integrator exhausts its subdivision budget
/// before reaching the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (positive half).
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

// 7-point Gauss weights; the Gauss nodes are the odd-index Kronrod nodes.
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
void gauss_kronrod_15(F&& f, double a, double b, double& value, double& error) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double samples[15];
  const double f_center = f(center);
  samples[7] = f_center;
  double kronrod = f_center * kKronrodWeights[7];
  double gauss = f_center * kGaussWeights[3];
  double resabs = std::abs(f_center) * kKronrodWeights[7];

  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double lo = f(center - dx);
    const double hi = f(center + dx);
    samples[i] = lo;
    samples[14 - i] = hi;
    kronrod += (lo + hi) * kKronrodWeights[i];
    resabs += (std::abs(lo) + std::abs(hi)) * kKronrodWeights[i];
    if (i % 2 == 1) gauss += (lo + hi) * kGaussWeights[i / 2];
  }
  value = kronrod * half;

  // QUADPACK error estimate: scale the 7-vs-15 point difference by the
  // variation of f over the segment so narrow peaks are not mistaken for
  // convergence.
  const double mean = 0.5 * kronrod;
  double resasc = kKronrodWeights[7] * std::abs(f_center - mean);
  for (int i = 0; i < 7; ++i)
    resasc += kKronrodWeights[i] *
              (std::abs(samples[i] - mean) + std::abs(samples[14 - i] - mean));
  resasc *= std::abs(half);
  resabs *= std::abs(half);

  error = std::abs((kronrod - gauss) * half);
  if (resasc != 0.0 && error != 0.0)
    error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
  const double round_off = 50.0 * std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / round_off)
    error = std::max(error, round_off * resabs);
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over [a, b].
/// Splits the segment with the largest error estimate until the total
/// estimated error drops below max(abs_tol, rel_tol * |integral|).
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double rel_tol,
                           double abs_tol = 0.0, int max_subdivisions = 2000) {
  struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& other) const { return error < other.error; }
  };

  QuadratureResult result;
  Segment whole{a, b, 0.0, 0.0};
  detail::gauss_kronrod_15(f, a, b, whole.value, whole.error);

  std::priority_queue<Segment> segments;
  segments.push(whole);
  double total_value = whole.value;
  double total_error = whole.error;

  while (total_error > std::max(abs_tol, rel_tol * std::abs(total_value))) {
    if (result.subdivisions >= max_subdivisions) {
      throw QuadratureError("adaptive quadrature did not converge after " +
                            std::to_string(max_subdivisions) +
                            " subdivisions (remaining error " +
                            std::to_string(total_error) + ")");
    }
    Segment worst = segments.top();
    segments.pop();
    if (worst.b - worst.a <= std::abs(worst.a) * 1e-15) {
      // Interval at machine resolution; accept its estimate as is.
      total_error -= worst.error;
      total_value -= worst.value;
      result.value += worst.value;
      result.error_estimate += worst.error;
      if (segments.empty()) break;
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left{worst.a, mid, 0.0, 0.0};
    Segment right{mid, worst.b, 0.0, 0.0};
    detail::gauss_kronrod_15(f, left.a, left.b, left.value, left.error);
    detail::gauss_kronrod_15(f, right.a, right.b, right.value, right.error);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    segments.push(left);
    segments.push(right);
    ++result.subdivisions;
  }

  while (!segments.empty()) {
    result.value += segments.top().value;
    result.error_estimate += segments.top().error;
    segments.pop();
  }
  return result;
}

}  // namespace kga

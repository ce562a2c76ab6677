#pragma once

// Special functions backing the closed-form BER and optimal-K machinery.
// All gamma-family ratios are evaluated in log space so beta functions with
// arguments up to 1e6 never overflow.

namespace kga::specfun {

/// ln Gamma(x) for x > 0. Lanczos approximation (g = 7, 9 terms),
/// reflection below 0.5. Relative error <= 1e-12 on [1e-3, 1e6].
double log_gamma(double x);

/// psi(x) = d/dx ln Gamma(x) for x > 0. Recurrence shift to x >= 6,
/// then the asymptotic series through the x^-14 term.
double digamma(double x);

/// ln B(x, y) = ln Gamma(x) + ln Gamma(y) - ln Gamma(x + y), x, y > 0.
double log_beta(double x, double y);

/// B(x, y) computed as exp(log_beta); safe for arguments up to 1e6.
double beta(double x, double y);

/// Lower incomplete gamma gamma(a, b) = int_0^b t^(a-1) e^-t dt,
/// a > 0, b >= 0. Overflows for a beyond ~170; use the regularized
/// variant when only the ratio to Gamma(a) is needed.
double lower_inc_gamma(double a, double b);

/// Regularized form P(a, b) = gamma(a, b) / Gamma(a) in [0, 1].
/// Power series for b < a + 1, continued fraction of the complement
/// otherwise.
double reg_lower_inc_gamma(double a, double b);

/// Gaussian tail probability Q(x) = P(N(0,1) > x) for x >= 0,
/// via the complementary error function.
double q_function(double x);

/// Q(x) evaluated through the finite-range single integral
/// (1/pi) int_0^{pi/2} exp(-x^2 / (2 sin^2 t)) dt.
/// Slower than q_function; kept as an independent cross-check path.
double q_function_craig(double x);

}  // namespace kga::specfun

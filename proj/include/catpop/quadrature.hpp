#pragma once

#include <cmath>

namespace catpop {

namespace detail {

template <class F>
double adaptive_simpson(F& f, double a, double fa, double m, double fm, double b,
                        double fb, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson quadrature of f over [a, b] to the given relative
// tolerance. The integrand must be finite on the closed interval.
template <class F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-10,
                 int max_depth = 48) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double scale = std::fabs(whole);
  if (scale == 0.0) scale = std::fabs(b - a);
  const double tol = rel_tol * scale;
  return detail::adaptive_simpson(f, a, fa, m, fm, b, fb, whole, tol, max_depth);
}

}  // namespace catpop

#ifndef VURKIT_GOLDEN_SECTION_HPP
#define VURKIT_GOLDEN_SECTION_HPP

#include <cmath>

namespace vurkit {

struct ScalarMax {
  double x;
  double value;
};

/// Golden-section search for a maximum of f on [lo, hi]. Converges to the maximum
/// when f is unimodal on the bracket, otherwise to some local maximum inside it.
/// The returned point is the best of all evaluated points (endpoints included).
template <typename F>
ScalarMax golden_section_maximize(F&& f, double lo, double hi, double x_tol = 1e-13, int max_iter = 200) {
  constexpr double inv_phi = 0.6180339887498948482;  // (sqrt 5 - 1)/2
  ScalarMax best{lo, f(lo)};
  const auto eval = [&](double x) {
    const double v = f(x);
    if (v > best.value) best = {x, v};
    return v;
  };
  eval(hi);
  if (!(hi > lo)) return best;

  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = eval(c), fd = eval(d);
  for (int it = 0; it < max_iter && (b - a) > x_tol * (1.0 + std::abs(a) + std::abs(b)); ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = eval(d);
    }
  }
  return best;
}

} // namespace vurkit

#endif // VURKIT_GOLDEN_SECTION_HPP

#pragma once

#include <functional>
#include <vector>

#include "kz/polylog.hpp"

namespace kz {

using Point = std::vector<Complex>;
// omega_p(v): the one-form at point p applied to tangent vector v.
using FormFn = std::function<Complex(const Point& p, const Point& v)>;

struct QuadConfig {
  double tolerance = 1e-12;
  int nodes = 24;            // Chebyshev nodes per panel
  int initial_panels = 4;    // per segment
  int max_refinements = 7;   // panel doublings
  // Innermost function F(p) replacing the constant 1; used for tangential
  // regularization (e.g. log^m(t)/m!). Assumed integrable at the start point.
  std::function<Complex(const Point& p)> inner;
};

// Iterated integral of forms[0] (outermost) ... forms.back() (innermost) along
// the polyline through `path`. Panels near the start point are refined
// geometrically so that log-type endpoint behavior is resolved.
Complex quad_iterint(const std::vector<FormFn>& forms, const std::vector<Point>& path, const QuadConfig& cfg = {});

// Binary-alphabet helpers on the segment [0, z]: xi0 = dt/t, xi1 = dt/(1-t).
FormFn xi0_form();
FormFn xi1_form();
// Iterated integral of a word from the tangential base point at 0: trailing
// xi0's contribute log^m(t)/m!.
double quad_word(const Word& w, double z, const QuadConfig& cfg = {});

}  // namespace kz

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace mvsde::quad {

// Gauss-Legendre nodes and weights on [-1, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const Rule& gauss_legendre(int order);

// Composite Gauss-Legendre on [a, b]: `panels` equal panels, flattened to
// absolute nodes and weights.
Rule composite_gauss_legendre(double a, double b, int panels, int order);

double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels = 8, int order = 16);

// Composite Simpson over uniformly spaced samples (trapezoid fallback on the
// last interval when the sample count is even).
double simpson(std::span<const double> values, double step);

}  // namespace mvsde::quad

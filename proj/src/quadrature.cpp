#include "mvsde/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mvsde::quad {

namespace {

Rule build_gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  Rule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration from the Chebyshev-like initial guess.
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

}  // namespace

const Rule& gauss_legendre(int order) {
  static std::map<int, Rule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_gauss_legendre(order)).first;
  return it->second;
}

Rule composite_gauss_legendre(double a, double b, int panels, int order) {
  if (panels < 1) throw std::invalid_argument("composite_gauss_legendre: panels must be >= 1");
  const Rule& base = gauss_legendre(order);
  Rule out;
  out.nodes.reserve(static_cast<std::size_t>(panels) * order);
  out.weights.reserve(static_cast<std::size_t>(panels) * order);
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double mid = lo + 0.5 * width;
    for (int j = 0; j < order; ++j) {
      out.nodes.push_back(mid + 0.5 * width * base.nodes[j]);
      out.weights.push_back(0.5 * width * base.weights[j]);
    }
  }
  return out;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels, int order) {
  const Rule rule = composite_gauss_legendre(a, b, panels, order);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(rule.nodes[i]);
  return sum;
}

double simpson(std::span<const double> values, double step) {
  const std::size_t n = values.size();
  if (n < 2) throw std::invalid_argument("simpson: need at least two samples");
  double sum = 0.0;
  std::size_t i = 0;
  for (; i + 2 < n; i += 2) {
    sum += step / 3.0 * (values[i] + 4.0 * values[i + 1] + values[i + 2]);
  }
  if (i + 2 == n) sum += 0.5 * step * (values[i] + values[i + 1]);
  return sum;
}

}  // namespace mvsde::quad

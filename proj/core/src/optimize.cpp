#include "gaussia/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "gaussia/error.hpp"

namespace gaussia::optimize {

ScalarMinimum golden_section(const std::function<double(double)>& f, double lo, double hi,
                             double x_tolerance, int max_evaluations) {
  if (!(lo <= hi)) throw InvalidArgument("golden_section: empty bracket");
  constexpr double inv_phi = 0.6180339887498949;

  ScalarMinimum best;
  best.value = std::numeric_limits<double>::infinity();
  auto eval = [&](double x) {
    const double v = f(x);
    ++best.evaluations;
    if (v < best.value) {
      best.value = v;
      best.x = x;
    }
    return v;
  };

  double a = lo;
  double b = hi;
  eval(a);
  eval(b);
  double c = b - (b - a) * inv_phi;
  double d = a + (b - a) * inv_phi;
  double fc = eval(c);
  double fd = eval(d);

  while (best.evaluations < max_evaluations &&
         (b - a) > x_tolerance * std::max(1.0, std::abs(best.x))) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = eval(d);
    }
  }
  return best;
}

NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& start, const NelderMeadOptions& options) {
  const Eigen::Index n = start.size();
  if (n == 0) throw InvalidArgument("nelder_mead: empty parameter vector");

  NelderMeadResult result;
  auto eval = [&](const Eigen::VectorXd& x) {
    ++result.evaluations;
    return f(x);
  };

  std::vector<Eigen::VectorXd> simplex(n + 1, start);
  std::vector<double> values(n + 1);
  for (Eigen::Index i = 0; i < n; ++i) simplex[i + 1](i) += options.initial_step;
  for (Eigen::Index i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

  std::vector<Eigen::Index> order(n + 1);
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return values[a] < values[b]; });
    const Eigen::Index lo = order.front();
    const Eigen::Index hi = order.back();
    const Eigen::Index second = order[n - 1];

    double diameter = 0.0;
    for (Eigen::Index i = 0; i <= n; ++i)
      diameter = std::max(diameter, (simplex[i] - simplex[lo]).cwiseAbs().maxCoeff());
    if (std::abs(values[hi] - values[lo]) <= options.f_tolerance &&
        diameter <= options.x_tolerance) {
      result.converged = true;
      break;
    }
    if (result.evaluations >= options.max_evaluations) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i <= n; ++i)
      if (i != hi) centroid += simplex[i];
    centroid /= static_cast<double>(n);

    const Eigen::VectorXd reflected = centroid + (centroid - simplex[hi]);
    const double fr = eval(reflected);
    if (fr < values[lo]) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - simplex[hi]);
      const double fe = eval(expanded);
      if (fe < fr) {
        simplex[hi] = expanded;
        values[hi] = fe;
      } else {
        simplex[hi] = reflected;
        values[hi] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[hi] = reflected;
      values[hi] = fr;
      continue;
    }
    const bool outside = fr < values[hi];
    const Eigen::VectorXd contracted =
        outside ? Eigen::VectorXd(centroid + 0.5 * (reflected - centroid))
                : Eigen::VectorXd(centroid + 0.5 * (simplex[hi] - centroid));
    const double fc = eval(contracted);
    if (fc < (outside ? fr : values[hi])) {
      simplex[hi] = contracted;
      values[hi] = fc;
      continue;
    }
    for (Eigen::Index i = 0; i <= n; ++i) {
      if (i == lo) continue;
      simplex[i] = simplex[lo] + 0.5 * (simplex[i] - simplex[lo]);
      values[i] = eval(simplex[i]);
    }
  }

  const auto best = std::min_element(values.begin(), values.end()) - values.begin();
  result.x = simplex[best];
  result.value = values[best];
  return result;
}

}  // namespace gaussia::optimize

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "distrl/distribution.hpp"
#include "distrl/fraction_set.hpp"

namespace distrl::oracle {

// Central-difference gradient check. Relative error per coordinate is
// |fd - analytic| / max(1, |analytic|); returns the max over coordinates.
// The callable is evaluated at perturbed copies of params; params itself is
// restored after every probe.
inline double finite_diff_check(const std::function<double(std::span<const double>)>& f,
                                std::span<double> params, std::span<const double> analytic_grad,
                                double eps = 1e-6) {
  if (params.size() != analytic_grad.size())
    throw std::invalid_argument("finite_diff_check: gradient size mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < params.size(); ++k) {
    const double saved = params[k];
    params[k] = saved + eps;
    const double fp = f(params);
    params[k] = saved - eps;
    const double fm = f(params);
    params[k] = saved;
    const double fd = (fp - fm) / (2.0 * eps);
    const double rel = std::abs(fd - analytic_grad[k]) / std::max(1.0, std::abs(analytic_grad[k]));
    worst = std::max(worst, rel);
  }
  return worst;
}

// The W1 approximation error of representing the distribution with quantile
// function `qf` by the atoms qf(tauhat_i) on the given fraction intervals:
//   sum_i integral_{t_i}^{t_{i+1}} |qf(w) - qf(tauhat_i)| dw
// evaluated by Simpson quadrature on each half-interval. For monotone qf the
// integrand kink sits exactly at the midpoint, so both halves are smooth.
inline double numeric_w1_error(const std::function<double(double)>& qf,
                               const FractionSet& fractions, int subdivisions = 256) {
  auto simpson = [&](double a, double b, double center_value) {
    // integrates |qf(w) - center_value| over [a, b]
    const int n = subdivisions % 2 == 0 ? subdivisions : subdivisions + 1;
    const double h = (b - a) / n;
    double acc = std::abs(qf(a) - center_value) + std::abs(qf(b) - center_value);
    for (int k = 1; k < n; ++k)
      acc += std::abs(qf(a + k * h) - center_value) * (k % 2 == 1 ? 4.0 : 2.0);
    return acc * h / 3.0;
  };
  double total = 0.0;
  for (int i = 0; i < fractions.size(); ++i) {
    const double lo = fractions.boundary(i);
    const double hi = fractions.boundary(i + 1);
    const double mid = fractions.midpoint(i);
    const double cv = qf(mid);
    total += simpson(lo, mid, cv) + simpson(mid, hi, cv);
  }
  return total;
}

struct BruteForceW1Result {
  std::vector<double> values;  // best equal-weight atom values found
  double w1;                   // achieved distance to the input distribution
};

// Exhaustive search over a value grid for the n-atom equal-weight
// distribution closest to d in W1. Ties broken toward smaller values, which
// falls out of the enumeration order. Guards against oversized searches.
inline BruteForceW1Result brute_force_w1_min(const DiscreteDistribution& d, int n,
                                             double grid_step,
                                             std::uint64_t max_candidates = 10'000'000) {
  if (n < 1) throw std::invalid_argument("brute_force_w1_min: n must be >= 1");
  if (!(grid_step > 0.0)) throw std::invalid_argument("brute_force_w1_min: bad grid step");
  std::vector<double> grid;
  for (double x = d.min_value(); x < d.max_value() + 0.5 * grid_step; x += grid_step)
    grid.push_back(x);
  if (grid.empty()) grid.push_back(d.min_value());

  // number of non-decreasing n-tuples: C(G + n - 1, n)
  const std::uint64_t g = grid.size();
  std::uint64_t count = 1;
  for (int k = 1; k <= n; ++k) {
    count = count * (g + static_cast<std::uint64_t>(n) - k) / k;
    if (count > max_candidates)
      throw std::runtime_error("brute_force_w1_min: candidate grid too large");
  }

  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  std::vector<DiscreteDistribution::Atom> atoms(static_cast<std::size_t>(n));
  BruteForceW1Result best{{}, std::numeric_limits<double>::infinity()};
  const double w = 1.0 / n;
  for (;;) {
    for (int k = 0; k < n; ++k) atoms[static_cast<std::size_t>(k)] = {grid[idx[k]], w};
    const double dist = wasserstein_p(d, DiscreteDistribution::from_atoms(atoms), 1.0);
    if (dist < best.w1 - 1e-15) {
      best.w1 = dist;
      best.values.assign(static_cast<std::size_t>(n), 0.0);
      for (int k = 0; k < n; ++k) best.values[static_cast<std::size_t>(k)] = grid[idx[k]];
    }
    // next non-decreasing tuple
    int pos = n - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == g) --pos;
    if (pos < 0) break;
    const std::size_t v = idx[static_cast<std::size_t>(pos)] + 1;
    for (int k = pos; k < n; ++k) idx[static_cast<std::size_t>(k)] = v;
  }
  return best;
}

}  // namespace distrl::oracle

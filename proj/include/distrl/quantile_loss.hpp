#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "distrl/distribution.hpp"

namespace distrl {

// Huber function: quadratic within kappa of zero, linear outside.
inline double huber(double u, double kappa) {
  const double a = std::abs(u);
  return a <= kappa ? 0.5 * u * u : kappa * (a - 0.5 * kappa);
}

// d huber / d u. The subgradient at the |u| = kappa joints is continuous;
// at u = 0 it is 0.
inline double huber_grad(double u, double kappa) {
  return u > kappa ? kappa : (u < -kappa ? -kappa : u);
}

// Quantile Huber loss rho_tau^kappa(u) = |tau - 1{u<0}| * L_kappa(u) / kappa.
inline double huber_quantile_loss(double u, double tau, double kappa) {
  if (!(kappa > 0.0)) throw std::invalid_argument("huber_quantile_loss: kappa must be > 0");
  if (tau < 0.0 || tau > 1.0) throw std::invalid_argument("huber_quantile_loss: tau outside [0,1]");
  const double weight = std::abs(tau - (u < 0.0 ? 1.0 : 0.0));
  return weight * huber(u, kappa) / kappa;
}

// d rho / d u for the same subgradient convention.
inline double huber_quantile_grad_u(double u, double tau, double kappa) {
  const double weight = std::abs(tau - (u < 0.0 ? 1.0 : 0.0));
  return weight * huber_grad(u, kappa) / kappa;
}

struct QrLossResult {
  double loss;
  std::vector<double> grad_values;  // d loss / d theta_i
};

// Quantile-regression loss between predicted quantiles and a sample of
// target values: mean over targets, sum over predicted quantiles.
// loss = (1/M) sum_j sum_i rho_{tauhat_i}^kappa(y_j - theta_i).
inline QrLossResult pairwise_qr_loss(const QuantileDistribution& predicted,
                                     std::span<const double> target_values, double kappa) {
  if (target_values.empty())
    throw std::invalid_argument("pairwise_qr_loss: empty target list");
  if (!(kappa > 0.0)) throw std::invalid_argument("pairwise_qr_loss: kappa must be > 0");
  const int n = predicted.fractions.size();
  const double inv_m = 1.0 / static_cast<double>(target_values.size());
  QrLossResult out{0.0, std::vector<double>(static_cast<std::size_t>(n), 0.0)};
  for (int i = 0; i < n; ++i) {
    const double tau = predicted.fractions.midpoint(i);
    const double theta = predicted.values[static_cast<std::size_t>(i)];
    double loss_i = 0.0, grad_i = 0.0;
    for (double y : target_values) {
      const double u = y - theta;
      loss_i += huber_quantile_loss(u, tau, kappa);
      grad_i -= huber_quantile_grad_u(u, tau, kappa);  // d u / d theta = -1
    }
    out.loss += loss_i * inv_m;
    out.grad_values[static_cast<std::size_t>(i)] = grad_i * inv_m;
  }
  return out;
}

// Distribution mean under the induced measure: sum_i (t_{i+1} - t_i) theta_i
// where theta_i estimates the quantile at the interval midpoint. Coincides
// with the plain mean for equidistant fractions.
inline double fqf_mean(const QuantileDistribution& q) {
  double m = 0.0;
  for (int i = 0; i < q.fractions.size(); ++i)
    m += q.fractions.width(i) * q.values[static_cast<std::size_t>(i)];
  return m;
}

// Gradient of the 1-Wasserstein approximation error with respect to each
// interior boundary, for a monotone quantile function:
//   dW1/dt_i = 2 qf(t_i) - qf(tauhat_i) - qf(tauhat_{i-1}).
inline std::vector<double> w1_fraction_gradient(const std::function<double(double)>& quantile_fn,
                                                const FractionSet& fractions) {
  const int n = fractions.size();
  std::vector<double> grads;
  if (n < 2) return grads;
  grads.reserve(static_cast<std::size_t>(n) - 1);
  for (int i = 1; i < n; ++i) {
    grads.push_back(2.0 * quantile_fn(fractions.boundary(i)) -
                    quantile_fn(fractions.midpoint(i)) - quantile_fn(fractions.midpoint(i - 1)));
  }
  return grads;
}

}  // namespace distrl

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "distrl/fraction_set.hpp"

namespace distrl {

// Exact finitely-supported probability distribution. Oracle-side ground
// truth representation: atoms sorted by value, probabilities positive and
// summing to 1 within 1e-12.
struct DiscreteDistribution {
  struct Atom {
    double value;
    double prob;
  };
  std::vector<Atom> atoms;

  // Sorts by value, merges duplicates (1e-12 value tolerance), validates.
  static DiscreteDistribution from_atoms(std::vector<Atom> raw) {
    if (raw.empty()) throw std::invalid_argument("DiscreteDistribution: no atoms");
    std::sort(raw.begin(), raw.end(),
              [](const Atom& a, const Atom& b) { return a.value < b.value; });
    DiscreteDistribution d;
    for (const Atom& a : raw) {
      if (!std::isfinite(a.value) || !std::isfinite(a.prob))
        throw std::invalid_argument("DiscreteDistribution: non-finite atom");
      if (a.prob < 0.0) throw std::invalid_argument("DiscreteDistribution: negative probability");
      if (a.prob == 0.0) continue;
      if (!d.atoms.empty() && a.value - d.atoms.back().value <= 1e-12)
        d.atoms.back().prob += a.prob;
      else
        d.atoms.push_back(a);
    }
    if (d.atoms.empty()) throw std::invalid_argument("DiscreteDistribution: zero total mass");
    double sum = 0.0;
    for (const Atom& a : d.atoms) sum += a.prob;
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("DiscreteDistribution: probabilities must sum to 1");
    return d;
  }

  static DiscreteDistribution point_mass(double v) { return from_atoms({{v, 1.0}}); }

  double mean() const {
    double m = 0.0;
    for (const Atom& a : atoms) m += a.value * a.prob;
    return m;
  }

  double min_value() const { return atoms.front().value; }
  double max_value() const { return atoms.back().value; }
};

// Quantile values theta_i paired with the fractions they estimate: theta_i
// approximates F^{-1}(midpoint_i). Values are raw network outputs and are
// not required monotone.
struct QuantileDistribution {
  FractionSet fractions;
  std::vector<double> values;

  QuantileDistribution(FractionSet f, std::vector<double> v)
      : fractions(std::move(f)), values(std::move(v)) {
    if (values.size() != static_cast<std::size_t>(fractions.size()))
      throw std::invalid_argument("QuantileDistribution: values/midpoints size mismatch");
    for (double x : values)
      if (!std::isfinite(x)) throw std::invalid_argument("QuantileDistribution: non-finite value");
  }
};

// Generalized inverse CDF: inf{x : F(x) >= omega}, omega in (0, 1].
inline double inverse_cdf(const DiscreteDistribution& d, double omega) {
  if (!(omega > 0.0) || omega > 1.0)
    throw std::invalid_argument("inverse_cdf: omega must be in (0, 1]");
  double cum = 0.0;
  for (const auto& a : d.atoms) {
    cum += a.prob;
    if (cum >= omega - 1e-12) return a.value;
  }
  return d.atoms.back().value;
}

namespace detail {

// Walks the merged CDF breakpoints of two discrete distributions and calls
// fn(segment_length, u_value, v_value) for every constant piece of the two
// inverse CDFs. Final cumulatives are clamped to exactly 1 so the walk
// terminates under the 1e-12 normalization tolerance.
template <typename F>
inline void for_each_inverse_cdf_segment(const DiscreteDistribution& u,
                                         const DiscreteDistribution& v, F&& fn) {
  std::size_t i = 0, j = 0;
  double cu = i + 1 < u.atoms.size() ? u.atoms[0].prob : 1.0;
  double cv = j + 1 < v.atoms.size() ? v.atoms[0].prob : 1.0;
  double w = 0.0;
  while (true) {
    const double next = std::min(cu, cv);
    if (next - w > 0.0) fn(next - w, u.atoms[i].value, v.atoms[j].value);
    w = next;
    if (w >= 1.0 - 1e-15) break;
    if (cu <= next + 1e-15) {
      if (i + 1 < u.atoms.size()) cu += u.atoms[++i].prob;
      if (i + 1 >= u.atoms.size()) cu = std::max(cu, 1.0);
    }
    if (cv <= next + 1e-15) {
      if (j + 1 < v.atoms.size()) cv += v.atoms[++j].prob;
      if (j + 1 >= v.atoms.size()) cv = std::max(cv, 1.0);
    }
  }
}

}  // namespace detail

// p-Wasserstein distance between discrete distributions: both inverse CDFs
// are piecewise constant, so the integral over omega is a finite sum across
// the merged CDF breakpoints.
inline double wasserstein_p(const DiscreteDistribution& u, const DiscreteDistribution& v,
                            double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("wasserstein_p: p must be >= 1");
  double acc = 0.0;
  detail::for_each_inverse_cdf_segment(u, v, [&](double seg, double a, double b) {
    acc += seg * std::pow(std::abs(a - b), p);
  });
  return std::pow(acc, 1.0 / p);
}

// Infinity-Wasserstein: max inverse-CDF gap across the merged breakpoints.
inline double wasserstein_inf(const DiscreteDistribution& u, const DiscreteDistribution& v) {
  double best = 0.0;
  detail::for_each_inverse_cdf_segment(u, v, [&](double seg, double a, double b) {
    if (seg > 1e-15) best = std::max(best, std::abs(a - b));
  });
  return best;
}

// W1-optimal n-atom equal-weight approximation: quantiles of d at the
// equidistant interval midpoints.
inline QuantileDistribution project_w1(const DiscreteDistribution& d, int n) {
  FractionSet f = fixed_fractions(n);
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values[i] = inverse_cdf(d, f.midpoint(i));
  return QuantileDistribution(std::move(f), std::move(values));
}

// The discrete measure induced by a quantile representation: mass
// (t_{i+1} - t_i) at value theta_i. Crossed (non-monotone) values are
// handled by the sort inside from_atoms.
inline DiscreteDistribution to_distribution(const QuantileDistribution& q) {
  std::vector<DiscreteDistribution::Atom> atoms;
  atoms.reserve(q.values.size());
  for (int i = 0; i < q.fractions.size(); ++i)
    atoms.push_back({q.values[static_cast<std::size_t>(i)], q.fractions.width(i)});
  return DiscreteDistribution::from_atoms(std::move(atoms));
}

}  // namespace distrl

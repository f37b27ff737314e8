#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "distrl/rng.hpp"

namespace distrl {

// A sorted set of quantile-fraction boundaries t_0 < t_1 < ... < t_N with
// t_0 = 0, t_N = 1, plus the interval midpoints the critic heads are
// evaluated at. Value type, immutable after construction.
class FractionSet {
 public:
  static FractionSet from_boundaries(std::vector<double> b) {
    if (b.size() < 2) throw std::invalid_argument("FractionSet: need at least 2 boundaries");
    if (b.front() != 0.0 || b.back() != 1.0)
      throw std::invalid_argument("FractionSet: boundaries must start at 0 and end at 1");
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
      if (!(b[i] < b[i + 1]))
        throw std::invalid_argument("FractionSet: boundaries must be strictly increasing");
    }
    std::vector<double> mid(b.size() - 1);
    for (std::size_t i = 0; i + 1 < b.size(); ++i) mid[i] = 0.5 * (b[i] + b[i + 1]);
    return FractionSet(std::move(b), std::move(mid));
  }

  const std::vector<double>& boundaries() const { return boundaries_; }
  const std::vector<double>& midpoints() const { return midpoints_; }

  // Number of intervals N (== number of midpoints == number of atoms).
  int size() const { return static_cast<int>(midpoints_.size()); }

  double boundary(int i) const { return boundaries_[static_cast<std::size_t>(i)]; }
  double midpoint(int i) const { return midpoints_[static_cast<std::size_t>(i)]; }
  double width(int i) const { return boundaries_[i + 1] - boundaries_[i]; }

 private:
  FractionSet(std::vector<double> b, std::vector<double> m)
      : boundaries_(std::move(b)), midpoints_(std::move(m)) {}

  std::vector<double> boundaries_;
  std::vector<double> midpoints_;
};

// Equidistant boundaries {i/n}, midpoints {(2i+1)/(2n)}.
inline FractionSet fixed_fractions(int n) {
  if (n < 1) throw std::invalid_argument("fixed_fractions: n must be >= 1");
  std::vector<double> b(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) b[i] = static_cast<double>(i) / n;
  b.back() = 1.0;
  return FractionSet::from_boundaries(std::move(b));
}

// n-1 interior boundaries drawn i.i.d. uniform on (0,1), sorted. A draw with
// coincident points (possible only through finite precision) is retried.
inline FractionSet sample_fractions(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_fractions: n must be >= 1");
  std::vector<double> b(static_cast<std::size_t>(n) + 1);
  for (;;) {
    b.front() = 0.0;
    b.back() = 1.0;
    for (int i = 1; i < n; ++i) b[i] = rng.uniform_pos();
    std::sort(b.begin() + 1, b.end() - 1);
    bool strict = b[static_cast<std::size_t>(n) - 1] < 1.0;
    for (int i = 0; strict && i + 1 < n; ++i) strict = b[i] < b[i + 1];
    if (strict) return FractionSet::from_boundaries(std::move(b));
  }
}

// softmax(logits) -> interval widths -> cumulative boundaries. The softmax
// guarantees monotone boundaries; a tiny probability floor keeps them
// strictly increasing even for extreme logit gaps.
inline FractionSet fractions_from_logits(std::span<const double> logits) {
  if (logits.empty()) throw std::invalid_argument("fractions_from_logits: need at least 1 logit");
  double max_logit = logits[0];
  for (double l : logits) {
    if (!std::isfinite(l)) throw std::invalid_argument("fractions_from_logits: non-finite logit");
    max_logit = std::max(max_logit, l);
  }
  const std::size_t n = logits.size();
  std::vector<double> p(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = std::exp(logits[i] - max_logit);
    sum += p[i];
  }
  constexpr double kFloor = 1e-12;
  double floored_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = std::max(p[i] / sum, kFloor);
    floored_sum += p[i];
  }
  std::vector<double> b(n + 1);
  b[0] = 0.0;
  double cum = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    cum += p[i] / floored_sum;
    b[i + 1] = cum;
  }
  b[n] = 1.0;
  return FractionSet::from_boundaries(std::move(b));
}

}  // namespace distrl

// Copyright 2026 The socnetgen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Discrete power-law fit with KS-minimizing tail selection.
//
// For every candidate lower cutoff x_min the tail x >= x_min is fit by
// maximum likelihood and compared with the fitted distribution through the
// Kolmogorov-Smirnov distance; the cutoff with the smallest distance wins.

#ifndef SOCNETGEN_POWERLAW_HPP_
#define SOCNETGEN_POWERLAW_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "socnetgen/diagnostics.hpp"

namespace socnetgen {

/// Hurwitz zeta sum_{k>=0} (q + k)^-s for s > 1, q > 0, by Euler-Maclaurin.
inline double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0) || !(q > 0.0)) throw std::domain_error("hurwitz_zeta requires s > 1 and q > 0");
  // B_{2j} / (2j)!
  static constexpr std::array<double, 10> kCoeff = {
      1.0 / 12.0,
      -1.0 / 720.0,
      1.0 / 30240.0,
      -1.0 / 1209600.0,
      1.0 / 47900160.0,
      -691.0 / 1307674368000.0,
      1.0 / 74724249600.0,
      -3617.0 / 10670622842880000.0,
      43867.0 / 5109094217170944000.0,
      -174611.0 / 802857662698291200000.0,
  };
  constexpr int kDirect = 16;
  double sum = 0.0;
  for (int k = 0; k < kDirect; ++k) sum += std::pow(q + k, -s);
  const double a = q + kDirect;
  const double a_s = std::pow(a, -s);
  sum += a * a_s / (s - 1.0) + 0.5 * a_s;
  // Rising factorial s (s+1) ... (s+2j-2) times a^(-s-2j+1).
  double term = s * a_s / a;
  for (std::size_t j = 0; j < kCoeff.size(); ++j) {
    const double add = kCoeff[j] * term;
    sum += add;
    if (std::abs(add) < 1e-17 * sum) break;
    term *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0) / (a * a);
  }
  return sum;
}

enum class PowerLawEstimator {
  exact,        ///< maximizes the Hurwitz-zeta likelihood numerically
  approximate,  ///< 1 + n / sum ln(x / (x_min - 1/2))
};

inline std::string_view to_string(PowerLawEstimator e) {
  return e == PowerLawEstimator::exact ? "exact" : "approximate";
}

struct PowerLawFit {
  double alpha = 0.0;
  std::uint64_t x_min = 0;
  double ks_statistic = 0.0;
  std::size_t tail_size = 0;
  /// The chosen tail holds a single distinct value; alpha is then pinned at
  /// the search bound and carries no information.
  bool degenerate = false;
  PowerLawEstimator estimator = PowerLawEstimator::exact;
};

namespace detail {

inline constexpr double kAlphaLow = 1.0 + 1e-9;
inline constexpr double kAlphaHigh = 50.0;

/// argmax of -n ln zeta(a, x_min) - a * log_sum over (1, 50]; the objective
/// is concave in a, so golden-section search suffices.
inline double discrete_mle(std::size_t n, double log_sum, std::uint64_t x_min) {
  const auto nll = [&](double a) {
    return static_cast<double>(n) * std::log(hurwitz_zeta(a, static_cast<double>(x_min))) + a * log_sum;
  };
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = kAlphaLow;
  double hi = kAlphaHigh;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = nll(x1);
  double f2 = nll(x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = nll(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = nll(x2);
    }
  }
  return 0.5 * (lo + hi);
}

/// Max |S(x) - P(x)| over the observed tail values, with S the empirical CDF
/// of `tail` (sorted ascending) and P the discrete power-law CDF.
inline double ks_distance(std::span<const std::uint64_t> tail, double alpha, std::uint64_t x_min) {
  const double norm = hurwitz_zeta(alpha, static_cast<double>(x_min));
  const double n = static_cast<double>(tail.size());
  double model = 0.0;
  double worst = 0.0;
  std::uint64_t x = x_min;
  std::size_t i = 0;
  while (i < tail.size()) {
    const std::uint64_t value = tail[i];
    for (; x <= value; ++x) model += std::pow(static_cast<double>(x), -alpha) / norm;
    while (i < tail.size() && tail[i] == value) ++i;
    worst = std::max(worst, std::abs(static_cast<double>(i) / n - model));
  }
  return worst;
}

}  // namespace detail

/// Fits a discrete power law to the positive entries of `values`.
///
/// Candidate cutoffs are the distinct observed values whose tails hold at
/// least `min_tail` points and at least two distinct values. Throws
/// InsufficientDataError when no cutoff qualifies. If every qualifying-size
/// tail is single-valued (all data equal), a degenerate fit is returned.
inline PowerLawFit powerlaw_fit(std::span<const std::uint64_t> values,
                                PowerLawEstimator estimator = PowerLawEstimator::exact, std::size_t min_tail = 10) {
  std::vector<std::uint64_t> x;
  x.reserve(values.size());
  for (auto v : values) {
    if (v > 0) x.push_back(v);
  }
  if (x.size() < min_tail) {
    throw InsufficientDataError("power-law fit needs at least " + std::to_string(min_tail) +
                                " positive values, got " + std::to_string(x.size()) + "; use a larger sample");
  }
  std::sort(x.begin(), x.end());

  // Suffix sums of ln x so each candidate's log-sum is O(1).
  std::vector<double> log_suffix(x.size() + 1, 0.0);
  for (std::size_t i = x.size(); i-- > 0;) log_suffix[i] = log_suffix[i + 1] + std::log(static_cast<double>(x[i]));

  const auto fit_at = [&](std::size_t start) {
    PowerLawFit fit;
    fit.estimator = estimator;
    fit.x_min = x[start];
    fit.tail_size = x.size() - start;
    const double log_sum = log_suffix[start];
    if (estimator == PowerLawEstimator::exact) {
      fit.alpha = detail::discrete_mle(fit.tail_size, log_sum, fit.x_min);
    } else {
      const double shift = static_cast<double>(fit.tail_size) * std::log(static_cast<double>(fit.x_min) - 0.5);
      fit.alpha = 1.0 + static_cast<double>(fit.tail_size) / (log_sum - shift);
    }
    fit.ks_statistic = detail::ks_distance(std::span(x).subspan(start), fit.alpha, fit.x_min);
    fit.degenerate = x[start] == x.back();
    return fit;
  };

  bool found = false;
  PowerLawFit best;
  for (std::size_t start = 0; start < x.size(); start = static_cast<std::size_t>(std::upper_bound(x.begin(), x.end(), x[start]) - x.begin())) {
    if (x.size() - start < min_tail) break;
    if (x[start] == x.back()) break;
    const PowerLawFit fit = fit_at(start);
    if (!found || fit.ks_statistic < best.ks_statistic) {
      best = fit;
      found = true;
    }
  }
  if (!found) {
    if (x.front() == x.back()) return fit_at(0);
    throw InsufficientDataError("no cutoff leaves " + std::to_string(min_tail) +
                                " tail points with distinct values; use a larger sample");
  }
  return best;
}

}  // namespace socnetgen

#endif  // SOCNETGEN_POWERLAW_HPP_

#ifndef MIXREC_NUMERIC_HPP
#define MIXREC_NUMERIC_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace mixrec {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Closed interval used as a quadrature range.
struct Range {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
};

inline double normal_pdf(double x, double mean, double variance) {
  const double d = x - mean;
  return std::exp(-0.5 * d * d / variance) / std::sqrt(kTwoPi * variance);
}

inline double normal_cdf(double x, double mean, double stddev) {
  return 0.5 * std::erfc(-(x - mean) / (stddev * std::sqrt(2.0)));
}

/// Density of N(mu, sigma2) truncated to [lo, hi].
double truncated_normal_pdf(double x, double mu, double sigma2, double lo, double hi);

/// Composite trapezoid rule with `points` equally spaced nodes (>= 2).
double trapezoid(const std::function<double(double)>& f, Range range, std::size_t points);

/// Equally spaced quadrature nodes spanning [range.lo, range.hi].
std::vector<double> quad_nodes(Range range, std::size_t points);

/// Trapezoid weights matching quad_nodes (h/2 at the ends, h inside).
std::vector<double> quad_weights(Range range, std::size_t points);

/// Ordinary least squares y = a + b x.
struct LineFit {
  double intercept = 0.0;
  double slope = 0.0;
  double r2 = 0.0;
  std::size_t n = 0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Nodes and weights for Gauss-Hermite quadrature with weight e^{-x^2}.
struct GaussHermite {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch-free construction: Hermite roots by Newton iteration on the
/// three-term recurrence. Exact enough for the diagnostic oracles (n <= 128).
GaussHermite gauss_hermite(std::size_t n);

}  // namespace mixrec

#endif  // MIXREC_NUMERIC_HPP

#ifndef MIXREC_KERNELS_HPP
#define MIXREC_KERNELS_HPP

#include <optional>
#include <span>
#include <string>

#include "mixrec/support.hpp"

namespace mixrec {

/// Mixture kernel p(x | theta), optionally indexed by an observation-time
/// covariate. Evaluations are floored at 1e-300 so ratios formed inside the
/// recursion stay finite for far-out observations.
class Kernel {
 public:
  enum class Kind { GaussianLocation, LinearDriftGaussian };

  /// N(theta, sigma2) location kernel, theta scalar.
  static Kernel gaussian_location(double sigma2);

  /// N(a + b * t / time_scale, sigma2) with theta = (a, b) and covariate t.
  static Kernel linear_drift_gaussian(double sigma2, double time_scale);

  Kind kind() const { return kind_; }
  double sigma2() const { return sigma2_; }
  double time_scale() const { return time_scale_; }
  bool needs_covariate() const { return kind_ == Kind::LinearDriftGaussian; }
  int theta_dim() const { return kind_ == Kind::LinearDriftGaussian ? 2 : 1; }

  /// Kernel density at x given theta (and covariate t when required).
  double eval(double x, std::span<const double> theta,
              std::optional<double> t = std::nullopt) const;

  std::string spec_string() const;

 private:
  Kernel(Kind kind, double sigma2, double time_scale);

  Kind kind_;
  double sigma2_;
  double time_scale_;
};

/// Mixture marginal m_f(x) = sum_k p(x | theta_k) mass_k.
/// Throws NumericError("observation outside model support") if the sum
/// underflows to zero.
double marginal(const Kernel& kernel, const MixingDensity& f, double x,
                std::optional<double> t = std::nullopt);

/// Floor applied to kernel evaluations before they enter ratios.
inline constexpr double kKernelFloor = 1e-300;

}  // namespace mixrec

#endif  // MIXREC_KERNELS_HPP

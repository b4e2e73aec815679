#ifndef MIXREC_DIAGNOSTICS_HPP
#define MIXREC_DIAGNOSTICS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "mixrec/kernels.hpp"
#include "mixrec/numeric.hpp"
#include "mixrec/processes.hpp"
#include "mixrec/recursion.hpp"
#include "mixrec/support.hpp"

namespace mixrec {

using DensityFn = std::function<double(double)>;

/// K_n: sum over atoms of mass_true * log(mass_true / mass_est), 0 log 0 = 0.
/// Returns +infinity when f_est has zero mass where f_true is positive.
double kl_mixing(const MixingDensity& f_true, const MixingDensity& f_est);

/// K_n*: trapezoid quadrature of m log(m / m_est) over x_range.
/// Small negative quadrature noise is clamped to 0; +infinity when m_est
/// vanishes where m_true does not.
double kl_marginal(const DensityFn& m_true, const DensityFn& m_est,
                   Range x_range, std::size_t quad_points);

/// Hellinger distance sqrt(int (sqrt(m1) - sqrt(m2))^2), in [0, sqrt(2)].
double hellinger(const DensityFn& m1, const DensityFn& m2, Range x_range,
                 std::size_t quad_points);

/// One row of the dependence-decay report.
struct DependenceEntry {
  std::size_t lag = 0;
  double chi2 = 0.0;    // >= 0 after noise clamping
  double stderr_ = 0.0; // Monte Carlo standard error
};

struct DependenceEstimate {
  std::vector<DependenceEntry> entries;
  std::size_t mc_size = 0;
  double rho_hat = 0.0;  // geometric decay fitted over informative lags
};

/// Monte Carlo estimate of the expected chi-square divergence between the
/// conditional density of X_{i+lag} given a history X_{1:i} and the marginal.
/// Supported kinds: ar1_mixture (exact indicator-posterior filter, covers
/// iid and pure AR(1)), mean_mixture_ar1 (grid filter over the AR state),
/// ma_q (exactly 0 at lags >= q; Gaussian conditioning below q, pure MA
/// only). gp_drift has no tractable conditional.
DependenceEntry dependence_coefficient(const ProcessConfig& process,
                                       std::size_t lag, std::size_t mc_size,
                                       std::uint64_t seed);

/// dependence_coefficient across lags plus a geometric-decay fit of rho.
/// Only lags with chi2 > 10 * stderr enter the fit.
DependenceEstimate dependence_profile(const ProcessConfig& process,
                                      const std::vector<std::size_t>& lags,
                                      std::size_t mc_size, std::uint64_t seed);

/// Quadrature oracle for the same quantity on a pure stationary AR(1)
/// process (2D Gauss-Hermite over the state and the future observation).
double ar1_chi2_gauss_hermite(double r, std::size_t lag, std::size_t gh_points = 96);

/// Computable envelope dominating any ratio of mixture marginals at x:
///   A1(x) = c_u * sum over ordered pairs (k, l) in Theta_H of
///           p(x | theta_k) * b / (p(x | theta_l) * a).
/// Returns +infinity when the kernel vanishes at some theta_l.
double a1_bound(const Kernel& kernel,
                const std::vector<std::vector<double>>& theta_H, double a,
                double b, double c_u, double x,
                std::optional<double> t = std::nullopt);

/// Fitted tail slope of log K_n* against log n.
struct RateEstimate {
  double gamma_slope = 0.0;
  std::size_t n_lo = 0;
  std::size_t n_hi = 0;
  double r2 = 0.0;
  std::size_t points = 0;
};

/// Least-squares slope over trace snapshots with n in [n_lo, n_hi] and
/// positive K_n*. Fewer than 10 usable points is an error.
RateEstimate rate_fit(const FitTrace& trace, std::size_t n_lo, std::size_t n_hi);

}  // namespace mixrec

#endif  // MIXREC_DIAGNOSTICS_HPP

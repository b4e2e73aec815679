#ifndef MIXREC_ORACLE_HPP
#define MIXREC_ORACLE_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "mixrec/diagnostics.hpp"
#include "mixrec/kernels.hpp"
#include "mixrec/processes.hpp"
#include "mixrec/support.hpp"

namespace mixrec {

/// Result of projecting a marginal onto the mixtures generated by a support.
struct ProjectionResult {
  MixingDensity f_tilde;
  double k_tilde = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Information projection: minimize KL(m_true, sum_k p(.|theta_k) pi_k) over
/// the probability simplex by multiplicative updates
///   pi_k <- pi_k * int m_true(x) p(x|theta_k) / m_pi(x) dx.
/// The objective is convex in pi and decreases monotonically, so the fixed
/// point is the global minimum.
ProjectionResult kl_projection(const DensityFn& m_true, GridPtr grid0,
                               const Kernel& kernel, Range quad_range,
                               std::size_t quad_points,
                               std::size_t max_iter = 100000,
                               double tol = 1e-9);

/// As above but started from explicit simplex weights (restart checks).
ProjectionResult kl_projection_from(const DensityFn& m_true, GridPtr grid0,
                                    const Kernel& kernel, Range quad_range,
                                    std::size_t quad_points,
                                    std::vector<double> start,
                                    std::size_t max_iter = 100000,
                                    double tol = 1e-9);

/// Nonparametric MLE of the mixing weights on a fixed grid via EM:
///   pi_k <- (1/n) sum_i p(X_i | theta_k) pi_k / m_pi(X_i).
/// The log-likelihood is asserted non-decreasing every iteration.
MixingDensity npmle_em(const ObservationStream& data, GridPtr grid,
                       const Kernel& kernel, std::size_t max_iter = 10000,
                       double tol = 1e-9,
                       std::vector<double>* loglik_path = nullptr);

}  // namespace mixrec

#endif  // MIXREC_ORACLE_HPP

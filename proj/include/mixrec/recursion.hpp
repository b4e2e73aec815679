#ifndef MIXREC_RECURSION_HPP
#define MIXREC_RECURSION_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mixrec/kernels.hpp"
#include "mixrec/processes.hpp"
#include "mixrec/support.hpp"

namespace mixrec {

/// Step sizes w_i of the recursion. harmonic is w_i = 1/(i+1); power is
/// w_i = c * i^(-alpha) with c clamped so w_1 <= 0.99.
class WeightSchedule {
 public:
  static WeightSchedule harmonic();
  static WeightSchedule power(double alpha, double c);

  double weight(std::size_t i) const;  // i >= 1

  /// B1: w_i ~ i^(-alpha) with alpha in (0.5, 1].
  bool satisfies_b1() const;
  /// B1': alpha in (0.75, 1].
  bool satisfies_b1_prime() const;
  /// A1: every q-strided subsequence of weights has a divergent sum, which
  /// for power laws holds exactly when alpha <= 1.
  bool satisfies_a1() const;

  bool is_harmonic() const { return harmonic_; }
  double alpha() const { return alpha_; }
  double scale() const { return c_; }

 private:
  WeightSchedule(bool harmonic, double alpha, double c)
      : harmonic_(harmonic), alpha_(alpha), c_(c) {}
  bool harmonic_;
  double alpha_;
  double c_;
};

/// What pr_fit records while it runs.
struct TraceSpec {
  /// Record iterations 1..100, then every `stride`; 0 picks ceil(n/1000).
  std::size_t stride = 0;
  /// Atom indices whose masses are recorded at each snapshot.
  std::vector<std::size_t> atom_indices;
  /// Iterations at which the full density is snapshotted (plot data).
  std::vector<std::size_t> checkpoints;
  /// Compute K_n / K_n* / Hellinger at snapshots (needs ground truth).
  bool diagnostics = true;
  /// Quadrature settings for the marginal diagnostics.
  std::size_t quad_points = 2000;
};

struct FitTrace {
  std::vector<std::size_t> iterations;
  std::vector<double> weights;
  std::vector<std::size_t> atom_indices;
  std::vector<std::vector<double>> atom_masses;  // one row per recorded atom
  std::vector<double> kl_mixing;                 // empty when no truth
  std::vector<double> kl_marginal;
  std::vector<double> hellinger;
  std::vector<std::pair<std::size_t, std::vector<double>>> checkpoints;
};

struct FitResult {
  MixingDensity density;
  FitTrace trace;
};

/// Ground truth against which pr_fit computes its diagnostics.
struct GroundTruth {
  MixingDensity f_true;
};

/// One update of the recursion:
///   f'(k) = (1 - w) f(k) + w * p(x | theta_k) f(k) / m_f(x).
/// w = 0 returns f unchanged. Zero masses stay zero; the returned masses sum
/// to exactly 1.
MixingDensity pr_step(const MixingDensity& f_prev, double x, double w,
                      const Kernel& kernel,
                      std::optional<double> t = std::nullopt);

/// Run the recursion over the stream in order. Errors from individual steps
/// are rethrown with the failing 1-based observation index attached.
FitResult pr_fit(const ObservationStream& stream, const MixingDensity& f0,
                 const WeightSchedule& schedule, const Kernel& kernel,
                 const TraceSpec& trace_spec = {},
                 const std::optional<GroundTruth>& truth = std::nullopt);

/// Marginal form of the same update evaluated on a probe set:
///   m'(x) = m(x) * {1 + w * (h(x) / (m(x) m(x_i)) - 1)},
///   h(x)  = sum_k p(x | theta_k) p(x_i | theta_k) mass_k.
/// Must agree with marginal(pr_step(...)) at every probe point.
std::vector<double> marginal_step_check(std::span<const double> m_prev_at_probes,
                                        std::span<const double> probes,
                                        const MixingDensity& f_prev, double x_i,
                                        double w, const Kernel& kernel,
                                        std::optional<double> t = std::nullopt);

/// Default snapshot iterations: 1..100 then every `stride`, always n.
std::vector<std::size_t> snapshot_iterations(std::size_t n, std::size_t stride);

}  // namespace mixrec

#endif  // MIXREC_RECURSION_HPP

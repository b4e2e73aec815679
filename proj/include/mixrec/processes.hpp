#ifndef MIXREC_PROCESSES_HPP
#define MIXREC_PROCESSES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixrec/kernels.hpp"
#include "mixrec/support.hpp"

namespace mixrec {

/// The mixing law a simulated process realizes, carried as stream metadata so
/// diagnostics can be computed against ground truth.
struct TrueMixture {
  enum class Kind {
    TwoPoint,              // mass p0 at a0, 1 - p0 at a1
    TruncatedNormal,       // TN(mu, sigma2, lo, hi)
    DeltaTruncNormalMix,   // delta_w * delta(delta_loc) + (1-delta_w) * TN
    PointMass2D            // single atom (pa, pb)
  };

  Kind kind = Kind::TwoPoint;
  double a0 = 0.0, a1 = 0.0, p0 = 1.0;
  double mu = 0.0, sigma2 = 1.0, lo = 0.0, hi = 0.0;
  double delta_w = 0.0, delta_loc = 0.0;
  double pa = 0.0, pb = 0.0;

  static TrueMixture two_point(double a0, double a1, double p0);
  static TrueMixture truncated_normal(double mu, double sigma2, double lo, double hi);
  static TrueMixture delta_trunc_normal_mix(double delta_w, double delta_loc,
                                            double mu, double sigma2,
                                            double lo, double hi);
  static TrueMixture point_mass_2d(double pa, double pb);

  /// Project the law onto a grid: point masses go to the nearest atom,
  /// continuous parts are evaluated at the atoms and weighted by cell size.
  MixingDensity discretize(GridPtr grid) const;

  std::string to_json() const;
  static TrueMixture from_json(const std::string& text);
};

/// Process kinds with known mixture marginals.
enum class ProcessKind { Ar1Mixture, MeanMixtureAr1, MaQ, GpDrift };

/// Mixing law of the mean in the mean-mixture process.
enum class ThetaLaw { TruncNorm, DeltaTruncNormMix };

enum class GpMode { TwoPointShift, LinearDrift };

/// Full description of a simulated process; serializes to the meta sidecar.
struct ProcessConfig {
  ProcessKind kind = ProcessKind::Ar1Mixture;
  std::size_t n = 0;

  // ar1_mixture: X_i = I_i * AR1_i + (1 - I_i) * N(mu2, 1), I_i ~ Bern(p)
  double p = 0.3;
  double r = 0.3;
  double mu2 = 2.5;

  // mean_mixture_ar1: X_i = theta_i + AR1_i
  ThetaLaw theta_law = ThetaLaw::TruncNorm;
  double tn_mu = 0.0, tn_sigma2 = 1.0, tn_lo = -3.0, tn_hi = 3.0;
  double delta_w = 0.5, delta_loc = 0.0;

  // ma_q: X_i = MA(q-1)_i + two-point shift
  std::size_t q = 1;
  std::vector<double> psi;     // q - 1 coefficients
  double shift_p0 = 0.3;       // P(shift = 0); otherwise shift = shift_mu
  double shift_mu = 2.5;

  // gp_drift
  GpMode gp_mode = GpMode::TwoPointShift;
  double gp_mean = -1.0;
  double gp_amplitude = 0.1;
  double gp_length_scale2 = 10.0;
  double gp_shift = 3.0;
  double gp_bernoulli_p = 0.3;
  double gp_alpha = 5.0, gp_beta = 2.0;
  std::vector<double> times;   // defaults to 1..n when empty

  void validate() const;
  TrueMixture truth() const;

  std::string to_json() const;
  static ProcessConfig from_json(const std::string& text);
};

/// Ordered observations with optional covariates and the metadata needed to
/// reproduce and diagnose them.
struct ObservationStream {
  std::vector<double> values;
  std::vector<double> covariates;    // empty, or strictly increasing times
  std::vector<double> latent_means;  // per-observation latent mean when the
                                     // simulator has one (tests only)
  std::uint64_t seed = 0;
  ProcessConfig config;
  TrueMixture truth;

  std::size_t size() const { return values.size(); }
  bool has_covariates() const { return !covariates.empty(); }
};

ObservationStream simulate(const ProcessConfig& config, std::uint64_t seed);

/// Named entry points matching the process kinds.
ObservationStream simulate_ar1_mixture(double p, double r, double mu2,
                                       std::size_t n, std::uint64_t seed);
ObservationStream simulate_mean_mixture_ar1(const ProcessConfig& theta_spec,
                                            double r, std::size_t n,
                                            std::uint64_t seed);
ObservationStream simulate_ma(std::size_t q, const std::vector<double>& psi,
                              double shift_p0, double shift_mu, std::size_t n,
                              std::uint64_t seed);
ObservationStream simulate_gp_drift(const ProcessConfig& config,
                                    std::uint64_t seed);

}  // namespace mixrec

#endif  // MIXREC_PROCESSES_HPP

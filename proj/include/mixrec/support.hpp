#ifndef MIXREC_SUPPORT_HPP
#define MIXREC_SUPPORT_HPP

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace mixrec {

/// Discretized parameter space: an ordered list of atoms in R^d (d = 1 or 2)
/// with one positive quadrature weight per atom. Regular grids place atoms at
/// cell centers so the weights sum exactly to the covered volume; explicit
/// atom lists model finite supports and carry unit weights.
///
/// Immutable after construction; shared across densities via shared_ptr.
class SupportGrid {
 public:
  /// Regular 1D grid of `cells` cell-centered atoms on [lo, hi].
  static std::shared_ptr<const SupportGrid> regular_1d(double lo, double hi,
                                                       std::size_t cells);

  /// Regular 2D grid, lexicographic atom order (first coordinate major).
  static std::shared_ptr<const SupportGrid> regular_2d(double lo1, double hi1,
                                                       std::size_t cells1,
                                                       double lo2, double hi2,
                                                       std::size_t cells2);

  /// Finite support at explicit strictly increasing points, unit weights.
  static std::shared_ptr<const SupportGrid> from_atoms(std::vector<double> atoms);

  /// Parse "lo:hi:K" (1D) or "lo1:hi1:K1,lo2:hi2:K2" (2D).
  static std::shared_ptr<const SupportGrid> parse(const std::string& spec);

  int dim() const { return dim_; }
  std::size_t size() const { return weights_.size(); }

  /// Atom k as a span of `dim()` coordinates.
  std::span<const double> atom(std::size_t k) const {
    return {coords_.data() + static_cast<std::ptrdiff_t>(k) * dim_,
            static_cast<std::size_t>(dim_)};
  }
  double atom1(std::size_t k) const { return coords_[k * dim_]; }

  double quad_weight(std::size_t k) const { return weights_[k]; }
  const std::vector<double>& quad_weights() const { return weights_; }

  double lower(int d = 0) const { return bounds_[d][0]; }
  double upper(int d = 0) const { return bounds_[d][1]; }

  /// Index of the atom closest to `point` (Euclidean).
  std::size_t nearest(std::span<const double> point) const;

  bool same_layout(const SupportGrid& other) const;

  std::string spec_string() const { return spec_; }

 private:
  SupportGrid() = default;
  void validate() const;

  int dim_ = 1;
  std::vector<double> coords_;   // size() * dim_ values, atom-major
  std::vector<double> weights_;  // one per atom, all positive
  std::array<std::array<double, 2>, 2> bounds_{{{0, 0}, {0, 0}}};
  std::string spec_;
};

using GridPtr = std::shared_ptr<const SupportGrid>;

/// Probability masses over a SupportGrid (one mass per atom). The stored
/// vector always sums to exactly 1.0 under left-to-right summation; the
/// constructor renormalizes and nudges the last positive entry by at most a
/// few ulps to close the sum. Density values are masses / quad_weights.
class MixingDensity {
 public:
  MixingDensity(GridPtr grid, std::vector<double> masses);

  const SupportGrid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  std::size_t size() const { return masses_.size(); }
  double mass(std::size_t k) const { return masses_[k]; }
  const std::vector<double>& masses() const { return masses_; }
  double density(std::size_t k) const {
    return masses_[k] / grid_->quad_weight(k);
  }

  /// Total mass in the closed interval [lo, hi] of the first coordinate.
  double mass_in(double lo, double hi) const;

 private:
  GridPtr grid_;
  std::vector<double> masses_;
};

/// Scale a nonnegative vector to a probability vector on `grid`.
/// Throws ConfigError("degenerate density") for all-zero or negative input.
MixingDensity normalize(std::span<const double> raw_masses, GridPtr grid);

/// Equal mass 1/K on each atom.
MixingDensity uniform_density(GridPtr grid);

namespace detail {
/// Divide by the left-to-right sum and close the residual on the last
/// positive entry so that the canonical sum is exactly 1.0. Zeros stay zero.
void renormalize_exact(std::vector<double>& masses);
}  // namespace detail

}  // namespace mixrec

#endif  // MIXREC_SUPPORT_HPP

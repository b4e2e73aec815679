#include "mixrec/support.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "mixrec/errors.hpp"

namespace mixrec {

namespace detail {

namespace {

double canonical_sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

void renormalize_exact(std::vector<double>& masses) {
  // Left-to-right summation is the canonical order everywhere in this file,
  // so an exact sum of 1.0 here survives later verification.
  for (int pass = 0; pass < 64; ++pass) {
    const double s = canonical_sum(masses);
    if (s == 1.0) return;
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw ConfigError("degenerate density: masses sum to " + std::to_string(s));
    }
    for (double& m : masses) m /= s;
    // Close the residual on the last positive entry; trailing zeros do not
    // perturb a left-to-right sum, so the adjusted vector sums to exactly 1.
    std::size_t last = masses.size();
    for (std::size_t k = masses.size(); k-- > 0;) {
      if (masses[k] > 0.0) {
        last = k;
        break;
      }
    }
    if (last == masses.size()) {
      throw ConfigError("degenerate density: all masses zero");
    }
    double partial = 0.0;
    for (std::size_t k = 0; k < last; ++k) partial += masses[k];
    const double closed = 1.0 - partial;
    if (closed > 0.0) {
      masses[last] = closed;
      return;
    }
    // The closing entry was dominated by rounding; zero it and go again.
    masses[last] = 0.0;
  }
  throw NumericError("renormalize_exact failed to converge");
}

}  // namespace detail

std::shared_ptr<const SupportGrid> SupportGrid::regular_1d(double lo, double hi,
                                                           std::size_t cells) {
  if (!(lo < hi)) throw ConfigError("grid: lo must be < hi");
  if (cells == 0) throw ConfigError("grid: need at least one cell");
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw ConfigError("grid: bounds must be finite");
  }
  auto g = std::shared_ptr<SupportGrid>(new SupportGrid());
  g->dim_ = 1;
  const double h = (hi - lo) / static_cast<double>(cells);
  g->coords_.resize(cells);
  g->weights_.assign(cells, h);
  for (std::size_t k = 0; k < cells; ++k) {
    g->coords_[k] = lo + h * (static_cast<double>(k) + 0.5);
  }
  g->bounds_[0] = {lo, hi};
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.17g:%.17g:%zu", lo, hi, cells);
  g->spec_ = buf;
  g->validate();
  return g;
}

std::shared_ptr<const SupportGrid> SupportGrid::regular_2d(
    double lo1, double hi1, std::size_t cells1, double lo2, double hi2,
    std::size_t cells2) {
  if (!(lo1 < hi1) || !(lo2 < hi2)) throw ConfigError("grid: lo must be < hi");
  if (cells1 == 0 || cells2 == 0) throw ConfigError("grid: need at least one cell");
  auto g = std::shared_ptr<SupportGrid>(new SupportGrid());
  g->dim_ = 2;
  const double h1 = (hi1 - lo1) / static_cast<double>(cells1);
  const double h2 = (hi2 - lo2) / static_cast<double>(cells2);
  g->coords_.resize(cells1 * cells2 * 2);
  g->weights_.assign(cells1 * cells2, h1 * h2);
  std::size_t k = 0;
  for (std::size_t i = 0; i < cells1; ++i) {
    const double a = lo1 + h1 * (static_cast<double>(i) + 0.5);
    for (std::size_t j = 0; j < cells2; ++j) {
      g->coords_[2 * k] = a;
      g->coords_[2 * k + 1] = lo2 + h2 * (static_cast<double>(j) + 0.5);
      ++k;
    }
  }
  g->bounds_[0] = {lo1, hi1};
  g->bounds_[1] = {lo2, hi2};
  char buf[192];
  std::snprintf(buf, sizeof(buf), "%.17g:%.17g:%zu,%.17g:%.17g:%zu", lo1, hi1,
                cells1, lo2, hi2, cells2);
  g->spec_ = buf;
  g->validate();
  return g;
}

std::shared_ptr<const SupportGrid> SupportGrid::from_atoms(
    std::vector<double> atoms) {
  if (atoms.empty()) throw ConfigError("grid: empty atom list");
  auto g = std::shared_ptr<SupportGrid>(new SupportGrid());
  g->dim_ = 1;
  g->coords_ = std::move(atoms);
  g->weights_.assign(g->coords_.size(), 1.0);
  g->bounds_[0] = {g->coords_.front(), g->coords_.back()};
  std::ostringstream spec;
  spec << "atoms:";
  for (std::size_t k = 0; k < g->coords_.size(); ++k) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", g->coords_[k]);
    spec << (k ? "," : "") << buf;
  }
  g->spec_ = spec.str();
  g->validate();
  return g;
}

std::shared_ptr<const SupportGrid> SupportGrid::parse(const std::string& spec) {
  auto parse_part = [](const std::string& part, double* lo, double* hi,
                       std::size_t* cells) {
    std::istringstream in(part);
    char c1 = 0, c2 = 0;
    long long k = 0;
    if (!(in >> *lo >> c1 >> *hi >> c2 >> k) || c1 != ':' || c2 != ':' ||
        k <= 0 || !(in >> std::ws).eof()) {
      throw ConfigError("grid spec: expected lo:hi:K, got '" + part + "'");
    }
    *cells = static_cast<std::size_t>(k);
  };

  if (spec.rfind("atoms:", 0) == 0) {
    std::vector<double> atoms;
    std::istringstream in(spec.substr(6));
    std::string tok;
    while (std::getline(in, tok, ',')) {
      atoms.push_back(std::stod(tok));
    }
    return from_atoms(std::move(atoms));
  }
  const auto comma = spec.find(',');
  if (comma == std::string::npos) {
    double lo, hi;
    std::size_t cells;
    parse_part(spec, &lo, &hi, &cells);
    return regular_1d(lo, hi, cells);
  }
  double lo1, hi1, lo2, hi2;
  std::size_t c1, c2;
  parse_part(spec.substr(0, comma), &lo1, &hi1, &c1);
  parse_part(spec.substr(comma + 1), &lo2, &hi2, &c2);
  return regular_2d(lo1, hi1, c1, lo2, hi2, c2);
}

void SupportGrid::validate() const {
  if (weights_.empty()) throw ConfigError("grid: no atoms");
  for (double w : weights_) {
    if (!(w > 0.0)) throw ConfigError("grid: quadrature weights must be positive");
  }
  for (double c : coords_) {
    if (!std::isfinite(c)) throw ConfigError("grid: atoms must be finite");
  }
  // strictly increasing (lexicographic in 2D), inside bounds
  for (std::size_t k = 0; k < size(); ++k) {
    for (int d = 0; d < dim_; ++d) {
      const double c = coords_[k * dim_ + d];
      if (c < bounds_[d][0] || c > bounds_[d][1]) {
        throw ConfigError("grid: atom outside bounds");
      }
    }
    if (k == 0) continue;
    const double* prev = &coords_[(k - 1) * dim_];
    const double* cur = &coords_[k * dim_];
    bool greater = false;
    for (int d = 0; d < dim_; ++d) {
      if (cur[d] > prev[d]) {
        greater = true;
        break;
      }
      if (cur[d] < prev[d]) {
        throw ConfigError("grid: atoms must be strictly increasing");
      }
    }
    if (!greater) throw ConfigError("grid: duplicate atoms");
  }
}

std::size_t SupportGrid::nearest(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != dim_) {
    throw ConfigError("nearest: point dimension mismatch");
  }
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < size(); ++k) {
    double d = 0.0;
    for (int i = 0; i < dim_; ++i) {
      const double diff = coords_[k * dim_ + i] - point[i];
      d += diff * diff;
    }
    if (d < best_d) {
      best_d = d;
      best = k;
    }
  }
  return best;
}

bool SupportGrid::same_layout(const SupportGrid& other) const {
  return dim_ == other.dim_ && coords_ == other.coords_ &&
         weights_ == other.weights_;
}

MixingDensity::MixingDensity(GridPtr grid, std::vector<double> masses)
    : grid_(std::move(grid)), masses_(std::move(masses)) {
  if (!grid_) throw ConfigError("density: null grid");
  if (masses_.size() != grid_->size()) {
    throw ConfigError("density: one mass per grid atom required");
  }
  for (double m : masses_) {
    if (!(m >= 0.0) || !std::isfinite(m)) {
      throw ConfigError("degenerate density: negative or non-finite mass");
    }
  }
  detail::renormalize_exact(masses_);
}

double MixingDensity::mass_in(double lo, double hi) const {
  double acc = 0.0;
  for (std::size_t k = 0; k < size(); ++k) {
    const double a = grid_->atom1(k);
    if (a >= lo && a <= hi) acc += masses_[k];
  }
  return acc;
}

MixingDensity normalize(std::span<const double> raw_masses, GridPtr grid) {
  if (!grid) throw ConfigError("normalize: null grid");
  if (raw_masses.size() != grid->size()) {
    throw ConfigError("normalize: length mismatch with grid");
  }
  double sum = 0.0;
  for (double m : raw_masses) {
    if (!(m >= 0.0) || !std::isfinite(m)) {
      throw ConfigError("degenerate density: negative or non-finite entry");
    }
    sum += m;
  }
  if (!(sum > 0.0)) throw ConfigError("degenerate density: all-zero input");
  return MixingDensity(std::move(grid),
                       std::vector<double>(raw_masses.begin(), raw_masses.end()));
}

MixingDensity uniform_density(GridPtr grid) {
  if (!grid) throw ConfigError("uniform_density: null grid");
  if (grid->size() == 0) throw ConfigError("uniform_density: empty grid");
  std::vector<double> masses(grid->size(), 1.0 / static_cast<double>(grid->size()));
  return MixingDensity(std::move(grid), std::move(masses));
}

}  // namespace mixrec

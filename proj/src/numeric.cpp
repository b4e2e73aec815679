#include "mixrec/numeric.hpp"

#include <algorithm>
#include <stdexcept>

#include "mixrec/errors.hpp"

namespace mixrec {

double truncated_normal_pdf(double x, double mu, double sigma2, double lo,
                            double hi) {
  if (!(lo < hi)) throw ConfigError("truncated normal: lo must be < hi");
  if (x < lo || x > hi) return 0.0;
  const double sd = std::sqrt(sigma2);
  const double z = normal_cdf(hi, mu, sd) - normal_cdf(lo, mu, sd);
  return normal_pdf(x, mu, sigma2) / z;
}

double trapezoid(const std::function<double(double)>& f, Range range,
                 std::size_t points) {
  if (points < 2) throw ConfigError("trapezoid: need at least 2 nodes");
  const double h = range.width() / static_cast<double>(points - 1);
  double acc = 0.5 * (f(range.lo) + f(range.hi));
  for (std::size_t j = 1; j + 1 < points; ++j) {
    acc += f(range.lo + h * static_cast<double>(j));
  }
  return acc * h;
}

std::vector<double> quad_nodes(Range range, std::size_t points) {
  std::vector<double> xs(points);
  const double h = range.width() / static_cast<double>(points - 1);
  for (std::size_t j = 0; j < points; ++j) {
    xs[j] = range.lo + h * static_cast<double>(j);
  }
  xs.back() = range.hi;
  return xs;
}

std::vector<double> quad_weights(Range range, std::size_t points) {
  const double h = range.width() / static_cast<double>(points - 1);
  std::vector<double> ws(points, h);
  ws.front() = 0.5 * h;
  ws.back() = 0.5 * h;
  return ws;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw ConfigError("fit_line: need two same-length vectors of size >= 2");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw ConfigError("fit_line: x values are all equal");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  fit.n = x.size();
  return fit;
}

namespace {

// Hermite polynomial H_n (physicists') and derivative via the recurrence.
void hermite_eval(std::size_t n, double x, double* h, double* dh) {
  double hm1 = 0.0, h0 = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double hp = 2.0 * x * h0 - 2.0 * static_cast<double>(k) * hm1;
    hm1 = h0;
    h0 = hp;
  }
  *h = h0;
  *dh = 2.0 * static_cast<double>(n) * hm1;
}

}  // namespace

GaussHermite gauss_hermite(std::size_t n) {
  // The unscaled recurrence overflows near n = 190; cap well below that.
  if (n < 1 || n > 150) throw ConfigError("gauss_hermite: n out of range");
  GaussHermite gh;
  gh.nodes.resize(n);
  gh.weights.resize(n);

  // Initial guesses from the classic asymptotic ordering, refined by Newton.
  const double sqrt2np1 = std::sqrt(2.0 * static_cast<double>(n) + 1.0);
  double x = 0.0;
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    if (i == 0) {
      x = sqrt2np1 - 1.85575 * std::pow(sqrt2np1, -1.0 / 6.0);
    } else if (i == 1) {
      x -= 1.14 * std::pow(static_cast<double>(n), 0.426) / x;
    } else if (i == 2) {
      x = 1.86 * x - 0.86 * gh.nodes[0];
    } else if (i == 3) {
      x = 1.91 * x - 0.91 * gh.nodes[1];
    } else {
      x = 2.0 * x - gh.nodes[i - 2];
    }
    double h = 0.0, dh = 1.0;
    for (int it = 0; it < 100; ++it) {
      hermite_eval(n, x, &h, &dh);
      const double dx = h / dh;
      x -= dx;
      if (std::abs(dx) < 1e-15 * (1.0 + std::abs(x))) break;
    }
    hermite_eval(n, x, &h, &dh);
    gh.nodes[i] = x;
    // w_i = 2^{n+1} n! sqrt(pi) / H'_n(x_i)^2, computed in log space
    double log_w = (static_cast<double>(n) + 1.0) * std::log(2.0) +
                   0.5 * std::log(kTwoPi / 2.0);
    for (std::size_t k = 2; k <= n; ++k) log_w += std::log(static_cast<double>(k));
    log_w -= 2.0 * std::log(std::abs(dh));
    gh.weights[i] = std::exp(log_w);
  }
  // Mirror to the negative half (nodes stored descending then sorted).
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    gh.nodes[n - 1 - i] = -gh.nodes[i];
    gh.weights[n - 1 - i] = gh.weights[i];
  }
  if (n % 2 == 1) {
    gh.nodes[n / 2] = 0.0;
  }
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return gh.nodes[a] < gh.nodes[b]; });
  GaussHermite out;
  out.nodes.reserve(n);
  out.weights.reserve(n);
  for (std::size_t i : idx) {
    out.nodes.push_back(gh.nodes[i]);
    out.weights.push_back(gh.weights[i]);
  }
  return out;
}

}  // namespace mixrec

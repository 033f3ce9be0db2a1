/// Lipschitz flux functions on [0, K]: dense polynomials or sampled tables
/// with linear interpolation.
#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hydrolim {

/// Default density grid step used by envelope construction, admissibility
/// sampling and the brute-force oracles.
inline constexpr double kDensityGridStep = 1e-4;

class FluxFunction {
 public:
  static FluxFunction polynomial(std::vector<double> coeffs, double domain_hi) {
    FluxFunction f;
    f.poly_ = std::move(coeffs);
    f.domain_hi_ = domain_hi;
    if (f.poly_.empty()) f.poly_.push_back(0.0);
    f.lipschitz_ = f.scan_lipschitz();
    return f;
  }

  /// Table flux: piecewise-linear through (rho_i, g_i); grid must be strictly
  /// increasing and span [0, domain_hi].
  static FluxFunction table(std::vector<double> rho, std::vector<double> g) {
    if (rho.size() != g.size() || rho.size() < 2)
      throw std::invalid_argument("FluxFunction::table: need matching grids with >= 2 points");
    for (size_t i = 1; i < rho.size(); ++i)
      if (!(rho[i - 1] < rho[i]))
        throw std::invalid_argument("FluxFunction::table: grid must be strictly increasing");
    FluxFunction f;
    f.tab_rho_ = std::move(rho);
    f.tab_g_ = std::move(g);
    f.domain_hi_ = f.tab_rho_.back();
    f.lipschitz_ = f.scan_lipschitz();
    return f;
  }

  bool is_polynomial() const { return !poly_.empty(); }
  bool is_table() const { return !tab_rho_.empty(); }
  const std::vector<double>& coefficients() const { return poly_; }
  const std::vector<double>& table_rho() const { return tab_rho_; }
  const std::vector<double>& table_g() const { return tab_g_; }
  double domain_hi() const { return domain_hi_; }

  /// Lipschitz bound V >= sup |G'|.
  double lipschitz_bound() const { return lipschitz_; }

  double operator()(double u) const {
    if (is_polynomial()) {
      double acc = 0.0;
      for (size_t i = poly_.size(); i-- > 0;) acc = acc * u + poly_[i];
      return acc;
    }
    // clamp into the table range, then linear interpolation
    if (u <= tab_rho_.front()) return tab_g_.front();
    if (u >= tab_rho_.back()) return tab_g_.back();
    size_t j = std::upper_bound(tab_rho_.begin(), tab_rho_.end(), u) - tab_rho_.begin();
    double t = (u - tab_rho_[j - 1]) / (tab_rho_[j] - tab_rho_[j - 1]);
    return tab_g_[j - 1] + t * (tab_g_[j] - tab_g_[j - 1]);
  }

  /// Exact derivative for polynomials; one-sided secant for tables.
  double derivative(double u) const {
    if (is_polynomial()) {
      double acc = 0.0;
      for (size_t i = poly_.size(); i-- > 1;) acc = acc * u + poly_[i] * static_cast<double>(i);
      return acc;
    }
    size_t j = std::upper_bound(tab_rho_.begin(), tab_rho_.end(), u) - tab_rho_.begin();
    if (j == 0) j = 1;
    if (j == tab_rho_.size()) j = tab_rho_.size() - 1;
    return (tab_g_[j] - tab_g_[j - 1]) / (tab_rho_[j] - tab_rho_[j - 1]);
  }

  double second_derivative(double u) const {
    if (!is_polynomial())
      throw std::logic_error("FluxFunction: second derivative needs polynomial form");
    double acc = 0.0;
    for (size_t i = poly_.size(); i-- > 2;)
      acc = acc * u + poly_[i] * static_cast<double>(i) * static_cast<double>(i - 1);
    return acc;
  }

  /// Density grid over [lo, hi] used for envelopes and oracles, always
  /// containing both endpoints.  A piecewise-linear table needs only its own
  /// breakpoints; everything else gets a uniform grid of the given step.
  std::vector<double> grid(double lo, double hi, double step = kDensityGridStep) const {
    std::vector<double> g;
    if (hi < lo) std::swap(lo, hi);
    if (is_table()) {
      g.push_back(lo);
      for (double r : tab_rho_)
        if (r > lo && r < hi) g.push_back(r);
      if (hi > lo) g.push_back(hi);
      return g;
    }
    auto n = static_cast<size_t>(std::ceil((hi - lo) / step));
    if (n == 0) n = 1;
    g.reserve(n + 1);
    for (size_t i = 0; i < n; ++i)
      g.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n));
    g.push_back(hi);
    return g;
  }

 private:
  FluxFunction() = default;

  double scan_lipschitz() const {
    double v = 0.0;
    if (is_table()) {
      for (size_t j = 1; j < tab_rho_.size(); ++j)
        v = std::max(v, std::fabs((tab_g_[j] - tab_g_[j - 1]) / (tab_rho_[j] - tab_rho_[j - 1])));
      return v;
    }
    auto g = grid(0.0, domain_hi_);
    for (double u : g) v = std::max(v, std::fabs(derivative(u)));
    return v;
  }

  std::vector<double> poly_;
  std::vector<double> tab_rho_, tab_g_;
  double domain_hi_ = 1.0;
  double lipschitz_ = 0.0;
};

}  // namespace hydrolim

/// Convex envelopes of a flux restricted to a density interval.
///
/// The envelope is held as the hull polygon over a dense density grid;
/// strictly convex contact arcs appear as runs of unit-gap edges, genuine
/// chords (linear-flux pieces or hull bridges) as edges spanning several grid
/// points.  For polynomial fluxes the chord endpoints are refined to the
/// tangency conditions by Newton iterations.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hydrolim/flux.hpp"

namespace hydrolim {

/// Lower envelope for increasing data (lambda < rho); upper for decreasing.
enum class EnvelopeSide { lower, upper };

class ConvexEnvelope {
 public:
  /// Hull of G on [min(a,b), max(a,b)]; side picks lower/upper.
  ConvexEnvelope(const FluxFunction& g, double a, double b, EnvelopeSide side,
                 double grid_step = kDensityGridStep)
      : side_(side), lo_(std::min(a, b)), hi_(std::max(a, b)) {
    const double sgn = (side == EnvelopeSide::lower) ? 1.0 : -1.0;
    if (lo_ == hi_) {
      r_ = {lo_};
      gr_ = {g(lo_)};
      return;
    }
    auto xs = g.grid(lo_, hi_, grid_step);
    // monotone chain on (x, sgn*G(x)); for the upper side this flips the hull
    std::vector<double> ys(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) ys[i] = sgn * g(xs[i]);
    std::vector<size_t> hull;
    for (size_t i = 0; i < xs.size(); ++i) {
      while (hull.size() >= 2) {
        size_t p = hull[hull.size() - 2], q = hull[hull.size() - 1];
        double cross = (xs[q] - xs[p]) * (ys[i] - ys[p]) - (ys[q] - ys[p]) * (xs[i] - xs[p]);
        if (cross <= 0.0)
          hull.pop_back();
        else
          break;
      }
      hull.push_back(i);
    }
    r_.reserve(hull.size());
    gr_.reserve(hull.size());
    std::vector<bool> bridges;  // true if a vertex pair skips grid points
    for (size_t j = 0; j < hull.size(); ++j) {
      r_.push_back(xs[hull[j]]);
      gr_.push_back(g(xs[hull[j]]));
      if (j > 0) bridges.push_back(hull[j] - hull[j - 1] > 1);
    }
    if (g.is_polynomial()) refine_tangencies(g, bridges, sgn, grid_step);
    flat_edge_.assign(r_.size() > 0 ? r_.size() - 1 : 0, false);
    for (size_t j = 0; j + 1 < r_.size(); ++j)
      // every hull edge of a piecewise-linear flux is an affine stretch of
      // G_c (a contact jump); for smooth fluxes only bridging chords are
      flat_edge_[j] = g.is_table() || (bridges[j] && (r_[j + 1] - r_[j] > 1.5 * grid_step));
  }

  EnvelopeSide side() const { return side_; }
  double interval_lo() const { return lo_; }
  double interval_hi() const { return hi_; }

  /// Hull vertices (densities) and G values there; G_c equals G at vertices.
  const std::vector<double>& breakpoints() const { return r_; }
  const std::vector<double>& breakpoint_values() const { return gr_; }

  size_t edge_count() const { return r_.size() > 1 ? r_.size() - 1 : 0; }

  /// Chord slope of edge j; nondecreasing in j for the lower side,
  /// nonincreasing for the upper side.
  double slope(size_t j) const { return (gr_[j + 1] - gr_[j]) / (r_[j + 1] - r_[j]); }

  /// True for edges that bridge strictly away from the graph (the flat set
  /// Sigma_low: speeds at which the minimizer is non-unique).
  bool is_flat(size_t j) const { return flat_edge_[j]; }

  /// Envelope value at u (linear interpolation along the hull polygon).
  double value(double u) const {
    if (r_.size() == 1) return gr_[0];
    size_t j = edge_below(u);
    double t = (u - r_[j]) / (r_[j + 1] - r_[j]);
    return gr_[j] + t * (gr_[j + 1] - gr_[j]);
  }

  /// Speed range [v_*, v^*] carried by the fan (extreme edge slopes).
  double speed_min() const {
    if (edge_count() == 0) return 0.0;
    return (side_ == EnvelopeSide::lower) ? slope(0) : slope(edge_count() - 1);
  }
  double speed_max() const {
    if (edge_count() == 0) return 0.0;
    return (side_ == EnvelopeSide::lower) ? slope(edge_count() - 1) : slope(0);
  }

  /// Kink densities: vertices where adjacent edge slopes differ by more than
  /// tol (the set Theta).
  std::vector<double> kinks(double tol = 1e-6) const {
    std::vector<double> out;
    for (size_t j = 1; j < edge_count(); ++j)
      if (std::fabs(slope(j) - slope(j - 1)) > tol &&
          (flat_edge_[j] || flat_edge_[j - 1]))
        out.push_back(r_[j]);
    return out;
  }

  /// Slopes of the flat edges (the set Sigma_low), with their density spans.
  struct FlatPiece {
    double speed;
    double density_lo, density_hi;
  };
  std::vector<FlatPiece> flat_pieces() const {
    std::vector<FlatPiece> out;
    for (size_t j = 0; j < edge_count(); ++j)
      if (flat_edge_[j]) out.push_back({slope(j), r_[j], r_[j + 1]});
    return out;
  }

 private:
  size_t edge_below(double u) const {
    size_t jlo = 0, jhi = edge_count() - 1;
    while (jlo < jhi) {
      size_t mid = (jlo + jhi) / 2;
      if (r_[mid + 1] < u)
        jlo = mid + 1;
      else
        jhi = mid;
    }
    return jlo;
  }

  /// Moves the endpoints of every bridging chord onto the exact contact
  /// points of the true envelope, by support-line iteration: alternate
  /// between recomputing the chord slope and re-locating each endpoint as
  /// the minimizer of sgn*(G(u) - slope*u) inside one grid cell of the hull
  /// vertex (clamped to [lo, hi], so endpoint contacts stay put).
  void refine_tangencies(const FluxFunction& g, const std::vector<bool>& bridges, double sgn,
                         double h) {
    auto contact = [&](double slope, double center) {
      double a = std::max(lo_, center - h), b = std::min(hi_, center + h);
      // golden-section search: sgn*(G - slope*u) is locally convex at a
      // lower/upper contact
      auto f = [&](double u) { return sgn * (g(u) - slope * u); };
      const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
      double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
      double f1 = f(x1), f2 = f(x2);
      for (int it = 0; it < 90 && b - a > 1e-15; ++it) {
        if (f1 <= f2) {
          b = x2;
          x2 = x1;
          f2 = f1;
          x1 = b - phi * (b - a);
          f1 = f(x1);
        } else {
          a = x1;
          x1 = x2;
          f1 = f2;
          x2 = a + phi * (b - a);
          f2 = f(x2);
        }
      }
      double mid = 0.5 * (a + b);
      // snap to the hard interval ends when the minimum sits there
      if (f(lo_) <= f(mid) && std::fabs(center - lo_) <= h) return lo_;
      if (f(hi_) <= f(mid) && std::fabs(center - hi_) <= h) return hi_;
      return mid;
    };
    for (size_t j = 0; j + 1 < r_.size(); ++j) {
      if (!bridges[j]) continue;
      double s = r_[j], t = r_[j + 1];
      for (int it = 0; it < 80; ++it) {
        double slope = (g(t) - g(s)) / (t - s);
        double ns = contact(slope, r_[j]);
        double nt = contact(slope, r_[j + 1]);
        bool done = std::fabs(ns - s) < 1e-15 && std::fabs(nt - t) < 1e-15;
        s = ns;
        t = nt;
        if (done) break;
      }
      if (!(s < t) || !std::isfinite(s) || !std::isfinite(t)) continue;
      // accept only if the old vertices stay on the correct side of the chord
      double chord = (g(t) - g(s)) / (t - s);
      auto ok = [&](double x) { return sgn * (g(x) - (g(s) + chord * (x - s))) >= -1e-10; };
      if (ok(r_[j]) && ok(r_[j + 1])) {
        r_[j] = s;
        gr_[j] = g(s);
        r_[j + 1] = t;
        gr_[j + 1] = g(t);
      }
    }
  }

  EnvelopeSide side_;
  double lo_, hi_;
  std::vector<double> r_, gr_;
  std::vector<bool> flat_edge_;
};

}  // namespace hydrolim

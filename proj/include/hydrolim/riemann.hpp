/// Variational Riemann solver: the self-similar entropy solution of a
/// two-state problem is read off the convex envelope of the flux, the density
/// at observer speed v being the optimizer of G(r) - v r over the state
/// interval.  Also: Rankine-Hugoniot speeds, chord admissibility, and the
/// single-inflexion shock/fan/contact classification.
#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hydrolim/envelope.hpp"
#include "hydrolim/flux.hpp"
#include "hydrolim/profile.hpp"

namespace hydrolim {

inline double rh_speed(const FluxFunction& g, double u_minus, double u_plus) {
  if (u_minus == u_plus) throw std::invalid_argument("rh_speed: equal states");
  return (g(u_minus) - g(u_plus)) / (u_minus - u_plus);
}

/// Wide-sense chord condition: between the states the chord lies below the
/// graph for an increasing jump, above it for a decreasing jump, within tol.
/// The extremum of chord - G is located exactly (table breakpoints, polished
/// critical points for polynomials), not just grid-sampled.
inline bool oleinik_check(const FluxFunction& g, double u_minus, double u_plus,
                          double tol = 1e-9) {
  if (u_minus == u_plus) throw std::invalid_argument("oleinik_check: equal states");
  const double a = std::min(u_minus, u_plus), b = std::max(u_minus, u_plus);
  const double ga = g(a), gb = g(b);
  const double slope = (gb - ga) / (b - a);
  // sign chosen so that a positive excess is a violation
  const double sgn = (u_minus < u_plus) ? +1.0 : -1.0;
  auto excess = [&](double x) { return sgn * (ga + slope * (x - a) - g(x)); };

  double worst = 0.0;
  if (g.is_table()) {
    for (double r : g.table_rho())
      if (r > a && r < b) worst = std::max(worst, excess(r));
  } else {
    const int n = 256;
    double prev_x = a, prev_e = 0.0;
    for (int i = 1; i <= n; ++i) {
      double x = a + (b - a) * static_cast<double>(i) / n;
      double e = excess(x);
      worst = std::max(worst, e);
      // polish any local interior maximum of the excess with Newton steps
      if (i >= 2 && prev_e >= e && prev_e >= worst - 1e-300) {
        double y = prev_x;
        for (int it = 0; it < 40; ++it) {
          double d1 = sgn * (slope - g.derivative(y));
          double d2 = -sgn * g.second_derivative(y);
          if (std::fabs(d2) < 1e-14) break;
          double step = -d1 / d2;
          y = std::clamp(y + step, a, b);
          if (std::fabs(step) < 1e-15) break;
        }
        worst = std::max(worst, excess(y));
      }
      prev_x = x;
      prev_e = e;
    }
  }
  return worst <= tol;
}

/// One recorded discontinuity of a self-similar or scheme solution.
struct Wave {
  double u_minus;  // value on the left of the jump
  double u_plus;   // value on the right
  double speed;
};

/// Self-similar solution of the Riemann problem R_{lambda,rho}.
class RiemannFan {
 public:
  RiemannFan(const FluxFunction& g, double left, double right,
             double grid_step = kDensityGridStep)
      : flux_(&g), left_(left), right_(right),
        env_(g, left, right,
             left <= right ? EnvelopeSide::lower : EnvelopeSide::upper, grid_step) {}

  double left_state() const { return left_; }
  double right_state() const { return right_; }
  const ConvexEnvelope& envelope() const { return env_; }

  double speed_min() const { return env_.speed_min(); }
  double speed_max() const { return env_.speed_max(); }

  /// Density seen by an observer at speed v; constant-state extension outside
  /// [v_*, v^*].  On flat speeds the convention is the endpoint of the flat
  /// nearer the right state.
  double density_at_speed(double v) const {
    const auto& r = env_.breakpoints();
    if (r.size() == 1) return r[0];
    size_t m = env_.edge_count();
    if (env_.side() == EnvelopeSide::lower) {
      // slopes strictly increasing; first edge with slope >= v
      size_t lo = 0, hi = m;
      while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (env_.slope(mid) < v)
          lo = mid + 1;
        else
          hi = mid;
      }
      return r[lo];
    }
    // upper side: slopes strictly decreasing; first edge with slope <= v
    size_t lo = 0, hi = m;
    while (lo < hi) {
      size_t mid = (lo + hi) / 2;
      if (env_.slope(mid) > v)
        lo = mid + 1;
      else
        hi = mid;
    }
    // before any edge qualifies the observer outruns the whole fan from the
    // left-state side
    return r[lo < m ? lo : m];
  }

  /// G_v = inf (sup for decreasing data) of G(r) - v r over the state
  /// interval; attained at density_at_speed(v).
  double variational_current(double v) const {
    const auto& r = env_.breakpoints();
    const auto& gr = env_.breakpoint_values();
    if (r.size() == 1) return gr[0] - v * r[0];
    double h = density_at_speed(v);
    // h is always a breakpoint; use the stored exact value
    size_t j = std::lower_bound(r.begin(), r.end(),
                                env_.side() == EnvelopeSide::lower ? h : h) -
               r.begin();
    if (j >= r.size() || r[j] != h) {
      // upper side returns breakpoints too, but guard against fp drift
      j = 0;
      double bestd = std::fabs(r[0] - h);
      for (size_t i = 1; i < r.size(); ++i)
        if (std::fabs(r[i] - h) < bestd) { bestd = std::fabs(r[i] - h); j = i; }
    }
    return gr[j] - v * r[j];
  }

  /// integral of the self-similar profile density over speeds [v, w].
  double mass_between_speeds(double v, double w) const {
    return variational_current(v) - variational_current(w);
  }

  /// Exact staircase profile at time t > 0 (one step per envelope edge).
  Profile profile_at(double t) const {
    if (t < 0) throw std::invalid_argument("RiemannFan::profile_at: negative time");
    const auto& r = env_.breakpoints();
    if (r.size() == 1) return Profile(r[0]);
    size_t m = env_.edge_count();
    std::vector<double> pos, val;
    if (t == 0.0) return Profile({0.0}, {left_, right_});
    if (env_.side() == EnvelopeSide::lower) {
      val.push_back(r[0]);
      for (size_t j = 0; j < m; ++j) {
        pos.push_back(env_.slope(j) * t);
        val.push_back(r[j + 1]);
      }
    } else {
      val.push_back(r[m]);
      for (size_t j = m; j-- > 0;) {
        pos.push_back(env_.slope(j) * t);
        val.push_back(r[j]);
      }
    }
    return Profile(std::move(pos), std::move(val));
  }

  /// The genuine discontinuities (flat-edge jumps) of the solution.
  std::vector<Wave> waves() const {
    std::vector<Wave> out;
    const auto& r = env_.breakpoints();
    for (size_t j = 0; j < env_.edge_count(); ++j) {
      if (!env_.is_flat(j)) continue;
      if (env_.side() == EnvelopeSide::lower)
        out.push_back({r[j], r[j + 1], env_.slope(j)});
      else
        out.push_back({r[j + 1], r[j], env_.slope(j)});
    }
    return out;
  }

 private:
  const FluxFunction* flux_;
  double left_, right_;
  ConvexEnvelope env_;
};

inline RiemannFan riemann_solve(const FluxFunction& g, double left, double right,
                                double grid_step = kDensityGridStep) {
  return RiemannFan(g, left, right, grid_step);
}

/// G_v(lambda, rho) without keeping the fan around.
inline double riemann_current(const FluxFunction& g, double left, double right, double v,
                              double grid_step = kDensityGridStep) {
  return RiemannFan(g, left, right, grid_step).variational_current(v);
}

enum class RiemannKind { constant, shock, rarefaction_fan, contact };

inline const char* to_string(RiemannKind k) {
  switch (k) {
    case RiemannKind::constant: return "constant";
    case RiemannKind::shock: return "shock";
    case RiemannKind::rarefaction_fan: return "rarefaction_fan";
    case RiemannKind::contact: return "contact";
  }
  return "?";
}

/// Inflexion point of a single-inflexion flux (convex then concave or the
/// reverse); rejects fluxes whose curvature changes sign more than once.
inline double single_inflexion_point(const FluxFunction& g) {
  if (!g.is_polynomial())
    throw std::invalid_argument("single_inflexion_point: needs twice-differentiable flux");
  const int n = 4096;
  double a = std::numeric_limits<double>::quiet_NaN();
  int changes = 0;
  double prev = g.second_derivative(0.0);
  for (int i = 1; i <= n; ++i) {
    double u = g.domain_hi() * static_cast<double>(i) / n;
    double cur = g.second_derivative(u);
    if (prev != 0.0 && cur != 0.0 && (prev > 0) != (cur > 0)) {
      ++changes;
      // bisect the sign change
      double lo = g.domain_hi() * static_cast<double>(i - 1) / n, hi = u;
      for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        if ((g.second_derivative(mid) > 0) == (prev > 0))
          lo = mid;
        else
          hi = mid;
      }
      a = 0.5 * (lo + hi);
    }
    if (cur != 0.0) prev = cur;
  }
  if (changes != 1)
    throw std::invalid_argument("classify_riemann: flux is not single-inflexion");
  return a;
}

/// Chord-tangency conjugate w* of w: the state on the far side of the
/// inflexion with S[w; w*] = G'(w*).  Returns nullopt when the chord never
/// becomes tangent inside the domain.
inline std::optional<double> conjugate_state(const FluxFunction& g, double w, double inflexion) {
  const double lo = (w < inflexion) ? inflexion : 0.0;
  const double hi = (w < inflexion) ? g.domain_hi() : inflexion;
  auto f = [&](double u) { return (g(u) - g(w)) / (u - w) - g.derivative(u); };
  // bracket a sign change on (lo, hi]
  const int n = 512;
  double prev_u = lo + (hi - lo) * 1e-9, prev_f = f(prev_u);
  for (int i = 1; i <= n; ++i) {
    double u = lo + (hi - lo) * static_cast<double>(i) / n;
    if (u == w) continue;
    double fu = f(u);
    if ((prev_f <= 0 && fu >= 0) || (prev_f >= 0 && fu <= 0)) {
      double a = prev_u, b = u, fa = prev_f;
      for (int it = 0; it < 100; ++it) {
        double mid = 0.5 * (a + b);
        double fm = f(mid);
        if ((fa <= 0) == (fm <= 0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      return 0.5 * (a + b);
    }
    prev_u = u;
    prev_f = fu;
  }
  return std::nullopt;
}

/// Case analysis for twice-differentiable fluxes with one inflexion point:
/// which of the catalog structures solves R_{lambda,rho}.
inline RiemannKind classify_riemann(const FluxFunction& g, double lambda, double rho) {
  if (lambda == rho) return RiemannKind::constant;
  const double a = single_inflexion_point(g);
  const bool convex_first = g.second_derivative(0.5 * a) > 0.0;
  // mirror so that the analysis below always sees convex-then-concave
  auto kind = [&](double l, double r) -> RiemannKind {
    if (l < r) {
      if (r <= a) return RiemannKind::rarefaction_fan;
      if (l >= a) return RiemannKind::shock;
      // increasing across the inflexion: tangent from the right state back
      // into the convex part decides between one shock and fan+contact
      auto s = conjugate_state(g, r, a);
      if (s && *s > l) return RiemannKind::contact;
      return RiemannKind::shock;
    }
    // l > r
    if (l <= a) return RiemannKind::shock;
    if (r >= a) return RiemannKind::rarefaction_fan;
    auto w = conjugate_state(g, r, a);
    if (w && *w < l) return RiemannKind::contact;
    return RiemannKind::shock;
  };
  if (convex_first) return kind(lambda, rho);
  // concave-then-convex: reflect densities about the domain midpoint, which
  // swaps left/right states and convexity order
  const double coef = g.domain_hi();
  auto reflect = [&](double u) { return coef - u; };
  FluxFunction gr = [&] {
    // G~(u) = G(K - u) has the mirrored convexity; build it as a polynomial
    const auto& c = g.coefficients();
    std::vector<double> out(c.size(), 0.0);
    // expand sum c_i (K - u)^i via binomials
    std::vector<double> pw(c.size(), 0.0);
    for (size_t i = 0; i < c.size(); ++i) {
      // (K - u)^i coefficients
      std::vector<double> bin(i + 1, 0.0);
      bin[0] = 1.0;
      for (size_t d = 0; d < i; ++d) {
        std::vector<double> nb(bin.size() + 1, 0.0);
        for (size_t j2 = 0; j2 < bin.size(); ++j2) {
          nb[j2] += bin[j2] * coef;
          nb[j2 + 1] -= bin[j2];
        }
        bin = std::move(nb);
      }
      for (size_t j2 = 0; j2 < bin.size(); ++j2) out[j2] += c[i] * bin[j2];
    }
    return FluxFunction::polynomial(std::move(out), coef);
  }();
  return classify_riemann(gr, reflect(lambda), reflect(rho));
}

}  // namespace hydrolim

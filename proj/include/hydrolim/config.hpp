/// Particle configurations on finite lattice windows with a hard per-site
/// cap, plus the empirical measure rescaling.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <variant>
#include <vector>

#include "hydrolim/profile.hpp"

namespace hydrolim {

struct ConstantTails {
  double left_density = 0.0;   // mean occupancy of ghost sites below the window
  double right_density = 0.0;  // and above it
};
struct Periodic {};

using Boundary = std::variant<ConstantTails, Periodic>;

inline bool is_periodic(const Boundary& b) { return std::holds_alternative<Periodic>(b); }

class Configuration {
 public:
  Configuration(int64_t window_lo, int64_t window_hi, int cap, Boundary boundary)
      : lo_(window_lo), hi_(window_hi), cap_(cap), boundary_(boundary),
        occ_(static_cast<size_t>(window_hi - window_lo + 1), 0) {
    if (window_hi < window_lo) throw std::invalid_argument("Configuration: empty window");
    if (cap < 1) throw std::invalid_argument("Configuration: cap must be >= 1");
    if (auto* t = std::get_if<ConstantTails>(&boundary_)) {
      if (t->left_density < 0 || t->left_density > cap || t->right_density < 0 ||
          t->right_density > cap)
        throw std::invalid_argument("Configuration: tail densities must lie in [0, K]");
    }
  }

  int64_t window_lo() const { return lo_; }
  int64_t window_hi() const { return hi_; }
  int64_t size() const { return hi_ - lo_ + 1; }
  int cap() const { return cap_; }
  const Boundary& boundary() const { return boundary_; }

  bool in_window(int64_t x) const { return x >= lo_ && x <= hi_; }

  /// Wraps x into the window under periodic boundary.
  int64_t wrap(int64_t x) const {
    int64_t n = size();
    int64_t r = (x - lo_) % n;
    if (r < 0) r += n;
    return lo_ + r;
  }

  int at(int64_t x) const { return occ_[static_cast<size_t>(x - lo_)]; }

  void set(int64_t x, int v) {
    if (v < 0 || v > cap_) throw std::out_of_range("Configuration::set: occupancy outside [0, K]");
    occ_[static_cast<size_t>(x - lo_)] = v;
  }

  int64_t total_particles() const {
    return std::accumulate(occ_.begin(), occ_.end(), int64_t{0});
  }

  const std::vector<int>& occupancies() const { return occ_; }
  std::vector<int>& occupancies() { return occ_; }

  bool same_shape(const Configuration& o) const {
    return lo_ == o.lo_ && hi_ == o.hi_ && cap_ == o.cap_ &&
           boundary_.index() == o.boundary_.index();
  }

 private:
  int64_t lo_, hi_;
  int cap_;
  Boundary boundary_;
  std::vector<int> occ_;
};

/// Coordinatewise partial order; windows must match.
inline bool leq(const Configuration& eta, const Configuration& xi) {
  if (!eta.same_shape(xi))
    throw std::invalid_argument("leq: configurations live on different windows");
  for (size_t i = 0; i < eta.occupancies().size(); ++i)
    if (eta.occupancies()[i] > xi.occupancies()[i]) return false;
  return true;
}

/// pi^N(eta): density step function with value eta(y) on [y/N, (y+1)/N).
/// Total mass times N equals the particle count exactly.
inline Profile empirical_measure(const Configuration& eta, int64_t N) {
  if (N < 1) throw std::invalid_argument("empirical_measure: N must be >= 1");
  std::vector<double> pos, val;
  pos.reserve(static_cast<size_t>(eta.size()) + 1);
  val.reserve(static_cast<size_t>(eta.size()) + 2);
  val.push_back(0.0);
  for (int64_t y = eta.window_lo(); y <= eta.window_hi(); ++y) {
    pos.push_back(static_cast<double>(y) / static_cast<double>(N));
    val.push_back(static_cast<double>(eta.at(y)));
  }
  pos.push_back(static_cast<double>(eta.window_hi() + 1) / static_cast<double>(N));
  val.push_back(0.0);
  return Profile(std::move(pos), std::move(val)).simplified();
}

}  // namespace hydrolim

/// Piecewise-constant density profiles as exact front lists, with the
/// cumulative sup distance and total variation computed without
/// discretization error.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace hydrolim {

/// A step function on R: value(x) = values[i] on [positions[i-1], positions[i]),
/// with positions[-1] = -inf and positions[n] = +inf implied.
/// values.size() == positions.size() + 1; positions strictly increasing.
class Profile {
 public:
  Profile() : values_{0.0} {}

  explicit Profile(double constant) : values_{constant} {}

  Profile(std::vector<double> positions, std::vector<double> values)
      : positions_(std::move(positions)), values_(std::move(values)) {
    if (values_.size() != positions_.size() + 1)
      throw std::invalid_argument("Profile: values must have one more entry than positions");
    for (size_t i = 1; i < positions_.size(); ++i)
      if (!(positions_[i - 1] < positions_[i]))
        throw std::invalid_argument("Profile: positions must be strictly increasing");
  }

  const std::vector<double>& positions() const { return positions_; }
  const std::vector<double>& values() const { return values_; }
  size_t front_count() const { return positions_.size(); }
  double left_tail() const { return values_.front(); }
  double right_tail() const { return values_.back(); }

  double value_at(double x) const {
    // value on [positions[i-1], positions[i]) -> first position > x selects the piece
    size_t i = std::upper_bound(positions_.begin(), positions_.end(), x) - positions_.begin();
    return values_[i];
  }

  /// Drops zero-height fronts (adjacent equal values within tol).
  Profile simplified(double tol = 0.0) const {
    std::vector<double> pos, val;
    val.push_back(values_[0]);
    for (size_t i = 0; i < positions_.size(); ++i) {
      if (std::fabs(values_[i + 1] - val.back()) > tol) {
        pos.push_back(positions_[i]);
        val.push_back(values_[i + 1]);
      }
    }
    return Profile(std::move(pos), std::move(val));
  }

  /// Sum of absolute value jumps across fronts.
  double total_variation() const {
    double tv = 0.0;
    for (size_t i = 0; i < positions_.size(); ++i)
      tv += std::fabs(values_[i + 1] - values_[i]);
    return tv;
  }

  /// Integral over the bounded window [a, b).
  double integral(double a, double b) const {
    if (b <= a) return 0.0;
    double sum = 0.0;
    double x = a;
    size_t i = std::upper_bound(positions_.begin(), positions_.end(), a) - positions_.begin();
    while (x < b) {
      double next = (i < positions_.size()) ? std::min(positions_[i], b) : b;
      sum += values_[i] * (next - x);
      x = next;
      ++i;
    }
    return sum;
  }

  /// Profile clipped to [a, b] with zero tails outside; used for localized
  /// comparisons on a fenced window.
  Profile restricted(double a, double b) const {
    if (!(a < b)) throw std::invalid_argument("Profile::restricted: empty window");
    std::vector<double> pos{a}, val{0.0};
    size_t i = std::upper_bound(positions_.begin(), positions_.end(), a) - positions_.begin();
    val.push_back(values_[i]);
    while (i < positions_.size() && positions_[i] < b) {
      pos.push_back(positions_[i]);
      val.push_back(values_[i + 1]);
      ++i;
    }
    pos.push_back(b);
    val.push_back(0.0);
    return Profile(std::move(pos), std::move(val)).simplified();
  }

  bool operator==(const Profile& o) const {
    return positions_ == o.positions_ && values_ == o.values_;
  }

 private:
  std::vector<double> positions_;
  std::vector<double> values_;
};

/// sup_x |int_{-inf}^x (u - v)|, exact scan over merged front lists.
/// Requires equal tails on both sides so the cumulative difference is
/// well-defined and eventually constant (and that constant is zero only if
/// masses match; the sup still includes it).
inline double delta_distance(const Profile& u, const Profile& v) {
  if (u.left_tail() != v.left_tail() || u.right_tail() != v.right_tail())
    throw std::invalid_argument("delta_distance: profiles must have equal tails");
  const auto& pu = u.positions();
  const auto& pv = v.positions();
  if (pu.empty() && pv.empty()) return 0.0;

  double cum = 0.0, best = 0.0;
  double x = std::min(pu.empty() ? pv.front() : pu.front(),
                      pv.empty() ? pu.front() : pv.front());
  size_t iu = 0, iv = 0;
  // advance past fronts at or before the start point
  while (iu < pu.size() && pu[iu] <= x) ++iu;
  while (iv < pv.size() && pv[iv] <= x) ++iv;
  double du = u.values()[iu] - v.values()[iv];
  while (iu < pu.size() || iv < pv.size()) {
    double nx = std::numeric_limits<double>::infinity();
    if (iu < pu.size()) nx = std::min(nx, pu[iu]);
    if (iv < pv.size()) nx = std::min(nx, pv[iv]);
    cum += du * (nx - x);
    best = std::max(best, std::fabs(cum));
    x = nx;
    while (iu < pu.size() && pu[iu] <= x) ++iu;
    while (iv < pv.size() && pv[iv] <= x) ++iv;
    du = u.values()[iu] - v.values()[iv];
  }
  // beyond the last front the difference of equal tails is zero
  return best;
}

/// Localized Delta: both profiles zeroed outside [a, b], then compared.
inline double delta_on_window(const Profile& u, const Profile& v, double a, double b) {
  return delta_distance(u.restricted(a, b), v.restricted(a, b));
}

inline double total_variation(const Profile& u) { return u.total_variation(); }

}  // namespace hydrolim

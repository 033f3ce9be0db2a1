/// Occupancy access used by model transformations, uniform over boundary
/// policies.  Under constant tails, sites outside the window are reservoir
/// ghosts whose occupancy is re-sampled per event from the tail density;
/// writes to ghosts are absorbed when the event ends.  Ghost draws depend
/// only on (stream seed, event index, site), so coupled replicas sharing a
/// stream see identical reservoirs.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hydrolim/config.hpp"
#include "hydrolim/rng.hpp"

namespace hydrolim {

/// Channel layout for per-event draws: 0 holds the clock increment, 1 the
/// site choice, 8.. the auxiliary value v, 64.. reservoir occupancies.
inline constexpr uint64_t kChanClock = 0;
inline constexpr uint64_t kChanSite = 1;
inline constexpr uint64_t kChanAux = 8;
inline constexpr uint64_t kChanGhost = 64;

struct AuxDraw {
  uint64_t seed = 0;
  uint64_t index = 0;
  double u(int j) const { return rng::u01(seed, index, kChanAux + static_cast<uint64_t>(j)); }
};

class LatticeView {
 public:
  explicit LatticeView(Configuration& cfg) : cfg_(cfg) {}

  Configuration& config() { return cfg_; }
  int cap() const { return cfg_.cap(); }

  void begin_event(uint64_t seed, uint64_t index) {
    seed_ = seed;
    index_ = index;
    overlay_.clear();
    net_delta_ = 0;
  }

  /// Net change of in-window occupancy since begin_event; zero for every
  /// conservative interior event.
  int net_delta() const { return net_delta_; }
  /// True when the current event read or wrote a reservoir ghost site.
  bool ghost_touched() const { return !overlay_.empty(); }

  int occ(int64_t x) const {
    if (is_periodic(cfg_.boundary())) return cfg_.at(cfg_.wrap(x));
    if (cfg_.in_window(x)) return cfg_.at(x);
    for (auto& [s, v] : overlay_)
      if (s == x) return v;
    int g = ghost_sample(x);
    overlay_.emplace_back(x, g);
    return g;
  }

  void set_occ(int64_t x, int v) {
    if (is_periodic(cfg_.boundary())) {
      int64_t w = cfg_.wrap(x);
      net_delta_ += v - cfg_.at(w);
      cfg_.set(w, v);
      return;
    }
    if (cfg_.in_window(x)) {
      net_delta_ += v - cfg_.at(x);
      cfg_.set(x, v);
      return;
    }
    for (auto& [s, ov] : overlay_)
      if (s == x) {
        ov = v;
        return;
      }
    overlay_.emplace_back(x, v);
  }

 private:
  int ghost_sample(int64_t x) const {
    const auto& tails = std::get<ConstantTails>(cfg_.boundary());
    const bool right = x > cfg_.window_hi();
    const double dens = right ? tails.right_density : tails.left_density;
    const int K = cfg_.cap();
    const auto offs = static_cast<uint64_t>(right ? (x - cfg_.window_hi()) : (cfg_.window_lo() - x));
    int occ = 0;
    const double p = dens / static_cast<double>(K);
    for (int i = 0; i < K; ++i) {
      uint64_t chan = kChanGhost + (right ? 0u : 1u) + 2 * (offs * 32 + static_cast<uint64_t>(i));
      if (rng::u01(seed_, index_, chan) < p) ++occ;
    }
    return occ;
  }

  Configuration& cfg_;
  uint64_t seed_ = 0, index_ = 0;
  int net_delta_ = 0;
  mutable std::vector<std::pair<int64_t, int>> overlay_;
};

}  // namespace hydrolim

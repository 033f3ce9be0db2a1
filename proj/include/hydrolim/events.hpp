/// Seeded Poisson event streams driving the graphical construction.
///
/// One global exponential clock with rate |window| * m(V) and a uniform site
/// choice per ring; event auxiliaries are drawn lazily by channel from the
/// counter-based generator, so streams are never materialized and space-time
/// shifts just relabel the same underlying draws.
#pragma once

#include <cstdint>
#include <stdexcept>

#include "hydrolim/lattice_view.hpp"
#include "hydrolim/rng.hpp"

namespace hydrolim {

class EventStream {
 public:
  EventStream(int64_t site_lo, int64_t site_hi, double rate_per_site, double horizon,
              uint64_t seed)
      : site_lo_(site_lo), site_hi_(site_hi), rate_per_site_(rate_per_site), horizon_(horizon),
        seed_(seed) {
    if (site_hi < site_lo) throw std::invalid_argument("EventStream: empty site window");
    if (rate_per_site <= 0) throw std::invalid_argument("EventStream: rate must be positive");
    if (horizon < 0) throw std::invalid_argument("EventStream: negative horizon");
  }

  int64_t site_lo() const { return site_lo_ - shift_x_; }
  int64_t site_hi() const { return site_hi_ - shift_x_; }
  double rate_per_site() const { return rate_per_site_; }
  double horizon() const { return horizon_ - shift_t_; }
  uint64_t seed() const { return seed_; }
  double total_rate() const {
    return rate_per_site_ * static_cast<double>(site_hi_ - site_lo_ + 1);
  }

  /// theta_{x0,t0}: events (t, x, v) of the result are exactly the
  /// (t0 + t, x0 + x, v) of this stream; shifts compose additively.
  EventStream shifted(int64_t x0, double t0) const {
    if (t0 > horizon() + 1e-12)
      throw std::invalid_argument("EventStream::shifted: time shift exceeds horizon");
    EventStream s = *this;
    s.shift_x_ += x0;
    s.shift_t_ += t0;
    return s;
  }

  struct Event {
    double time;     // in the stream's own clock
    int64_t site;    // in the stream's own coordinates
    uint64_t index;  // base draw index; auxiliaries are u(index, channel)
  };

  class Iterator {
   public:
    explicit Iterator(const EventStream& s) : s_(&s) {}

    /// Yields events with 0 < time <= horizon, in time order.
    bool next(Event& ev) {
      const double total = s_->total_rate();
      while (true) {
        double dt = rng::exponential(s_->seed_, idx_, kChanClock) / total;
        // ties (dt == 0) are impossible for the continuous draw, but guard
        if (dt <= 0) dt = 1e-300;
        base_t_ += dt;
        uint64_t i = idx_++;
        if (base_t_ <= s_->shift_t_) continue;  // before the shifted origin
        double t = base_t_ - s_->shift_t_;
        if (t > s_->horizon_ - s_->shift_t_) return false;
        int64_t span = s_->site_hi_ - s_->site_lo_ + 1;
        int64_t site =
            s_->site_lo_ + static_cast<int64_t>(rng::below(s_->seed_, i, kChanSite,
                                                           static_cast<uint64_t>(span)));
        ev = Event{t, site - s_->shift_x_, i};
        return true;
      }
    }

   private:
    const EventStream* s_;
    double base_t_ = 0.0;
    uint64_t idx_ = 0;
  };

  Iterator iterate() const { return Iterator(*this); }

  AuxDraw aux(const Event& ev) const { return AuxDraw{seed_, ev.index}; }

 private:
  int64_t site_lo_, site_hi_;
  double rate_per_site_, horizon_;
  uint64_t seed_;
  int64_t shift_x_ = 0;
  double shift_t_ = 0.0;
};

/// Stream over the window a family needs: the configuration window extended
/// by the locality radius under reservoir boundaries (events at ghost sites
/// inject and absorb particles), the bare window on a torus.
inline EventStream generate_events(const Configuration& cfg, double rate_per_site,
                                   int locality_radius, double horizon, uint64_t seed) {
  if (is_periodic(cfg.boundary()))
    return EventStream(cfg.window_lo(), cfg.window_hi(), rate_per_site, horizon, seed);
  return EventStream(cfg.window_lo() - locality_radius, cfg.window_hi() + locality_radius,
                     rate_per_site, horizon, seed);
}

}  // namespace hydrolim

/// Deterministic evolution on an event stream, monotone coupling of many
/// initial states on one stream, and particle currents seen by moving
/// observers.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hydrolim/config.hpp"
#include "hydrolim/environment.hpp"
#include "hydrolim/events.hpp"
#include "hydrolim/models.hpp"

namespace hydrolim {

struct EvolveOptions {
  bool audit_conservation = false;  // assert interior events conserve mass
};

/// Core replay loop.  pre(t_event, cfg) runs before each event is applied,
/// post(t_event, rec, cfg) after.
template <class PreFn, class PostFn>
Configuration evolve_cb(const TransformationFamily& fam, const Environment& env,
                        Configuration eta, const EventStream& events, double t,
                        PreFn&& pre, PostFn&& post, EvolveOptions opts = {}) {
  if (t > events.horizon() + 1e-12)
    throw std::invalid_argument("evolve: requested time exceeds stream horizon");
  LatticeView view(eta);
  auto it = events.iterate();
  EventStream::Event ev;
  while (it.next(ev)) {
    if (ev.time > t) break;
    pre(ev.time, const_cast<const Configuration&>(eta));
    view.begin_event(events.seed(), ev.index);
    JumpRecord rec = fam.apply(env, ev.site, events.aux(ev), view);
    if (opts.audit_conservation && !view.ghost_touched() && view.net_delta() != 0)
      throw std::logic_error("evolve: event failed to conserve particles");
    post(ev.time, rec, const_cast<const Configuration&>(eta));
  }
  return eta;
}

inline Configuration evolve(const TransformationFamily& fam, const Environment& env,
                            Configuration eta, const EventStream& events, double t,
                            EvolveOptions opts = {}) {
  return evolve_cb(
      fam, env, std::move(eta), events, t, [](double, const Configuration&) {},
      [](double, const JumpRecord&, const Configuration&) {}, opts);
}

struct CoupleResult {
  std::vector<Configuration> states;
  uint64_t order_violations = 0;  // among initially ordered adjacent pairs
};

/// Evolves many initial states on one shared stream.  For replicas that start
/// ordered, order preservation is asserted at every event (checked only at
/// the touched sites, which is where a violation would first appear).
inline CoupleResult couple(const TransformationFamily& fam, const Environment& env,
                           std::vector<Configuration> etas, const EventStream& events, double t,
                           EvolveOptions opts = {}) {
  if (etas.empty()) return {};
  if (t > events.horizon() + 1e-12)
    throw std::invalid_argument("couple: requested time exceeds stream horizon");
  const size_t n = etas.size();
  std::vector<bool> ordered(n > 1 ? n - 1 : 0);
  for (size_t i = 0; i + 1 < n; ++i) ordered[i] = leq(etas[i], etas[i + 1]);

  std::vector<LatticeView> views;
  views.reserve(n);
  for (auto& c : etas) views.emplace_back(c);

  CoupleResult res;
  auto it = events.iterate();
  EventStream::Event ev;
  std::vector<JumpRecord> recs(n);
  while (it.next(ev)) {
    if (ev.time > t) break;
    AuxDraw aux = events.aux(ev);
    for (size_t i = 0; i < n; ++i) {
      views[i].begin_event(events.seed(), ev.index);
      recs[i] = fam.apply(env, ev.site, aux, views[i]);
      if (opts.audit_conservation && !views[i].ghost_touched() && views[i].net_delta() != 0)
        throw std::logic_error("couple: event failed to conserve particles");
    }
    for (size_t i = 0; i + 1 < n; ++i) {
      if (!ordered[i]) continue;
      for (const JumpRecord* r : {&recs[i], &recs[i + 1]}) {
        if (!r->moved) continue;
        for (int64_t s : {r->from, r->to}) {
          int64_t x = is_periodic(etas[i].boundary()) ? etas[i].wrap(s) : s;
          if (!etas[i].in_window(x)) continue;
          if (etas[i].at(x) > etas[i + 1].at(x)) ++res.order_violations;
        }
      }
    }
  }
  res.states = std::move(etas);
  return res;
}

// ---------------------------------------------------------------------------
// Currents

struct Observer {
  double speed = 0.0;
  int64_t start = 0;  // x_t = start + floor(speed * t)
};

struct CurrentRecord {
  int64_t plus = 0;   // rightward crossings of the observer path
  int64_t minus = 0;  // leftward crossings
  int64_t self = 0;   // contribution of the observer's own motion
  int64_t net() const { return plus - minus + self; }
};

namespace detail {
inline int64_t observer_pos(const Observer& o, double t) {
  return o.start + static_cast<int64_t>(std::floor(o.speed * t));
}

inline int occ_or_zero(const Configuration& c, int64_t x) {
  if (is_periodic(c.boundary())) return c.at(c.wrap(x));
  return c.in_window(x) ? c.at(x) : 0;
}
}  // namespace detail

/// Net particle current across the moving observer path: jumps crossing the
/// edge at x_obs + 1/2 count +-1, and each observer step contributes minus
/// the occupancy it sweeps over (stepping right) or plus it (stepping left),
/// evaluated on the configuration frozen between events.
inline CurrentRecord current(const TransformationFamily& fam, const Environment& env,
                             Configuration eta, const EventStream& events, Observer obs,
                             double t, EvolveOptions opts = {}) {
  CurrentRecord rec;
  int64_t px = detail::observer_pos(obs, 0.0);
  auto advance_observer = [&](double now, const Configuration& cfg) {
    int64_t target = detail::observer_pos(obs, now);
    while (px < target) {
      ++px;
      rec.self -= detail::occ_or_zero(cfg, px);
    }
    while (px > target) {
      rec.self += detail::occ_or_zero(cfg, px);
      --px;
    }
  };
  Configuration out = evolve_cb(
      fam, env, std::move(eta), events, t,
      [&](double te, const Configuration& cfg) { advance_observer(te, cfg); },
      [&](double, const JumpRecord& r, const Configuration&) {
        if (!r.moved) return;
        if (r.from <= px && r.to > px) ++rec.plus;
        else if (r.to <= px && r.from > px) ++rec.minus;
      },
      opts);
  advance_observer(t, out);
  return rec;
}

}  // namespace hydrolim

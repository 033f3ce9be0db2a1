/// The monotone conservative transformation families: misanthrope dynamics
/// (site or bond rates), k-step exclusion, exclusion with overtaking, and the
/// k-step misanthrope process that contains them all.  Plus brute-force
/// monotonicity certification on small windows.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hydrolim/config.hpp"
#include "hydrolim/environment.hpp"
#include "hydrolim/lattice_view.hpp"

namespace hydrolim {

// ---------------------------------------------------------------------------
// Jump kernels

struct Kernel {
  std::vector<int> z;       // displacements, sorted, no zero
  std::vector<double> p;    // probabilities, sum 1
  std::vector<double> cum;  // cumulative for inverse-transform sampling
  int radius = 0;
  double mean = 0.0;

  static Kernel from_list(std::vector<int> zz, std::vector<double> pp) {
    if (zz.size() != pp.size() || zz.empty())
      throw std::invalid_argument("Kernel: displacement/probability size mismatch");
    double s = 0;
    for (size_t i = 0; i < zz.size(); ++i) {
      if (zz[i] == 0) throw std::invalid_argument("Kernel: zero displacement not allowed");
      if (pp[i] < 0) throw std::invalid_argument("Kernel: negative probability");
      s += pp[i];
    }
    if (s <= 0) throw std::invalid_argument("Kernel: zero total mass");
    // keep displacements sorted so bond indices are well-defined
    std::vector<size_t> order(zz.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return zz[a] < zz[b]; });
    Kernel k;
    for (size_t i : order) {
      if (!k.z.empty() && k.z.back() == zz[i])
        throw std::invalid_argument("Kernel: duplicate displacement");
      k.z.push_back(zz[i]);
      k.p.push_back(pp[i] / s);
    }
    k.finish();
    return k;
  }

  /// Geometric tail kernel p(z) ~ w+ q^(z-1) for z>0 and w- q^(-z-1) for z<0,
  /// truncated where the neglected mass drops below tail_mass, then
  /// renormalized.
  static Kernel truncated_geometric(double q, double w_plus, double w_minus,
                                    double tail_mass = 1e-6) {
    if (!(q > 0 && q < 1)) throw std::invalid_argument("Kernel: geometric ratio must be in (0,1)");
    std::vector<int> zz;
    std::vector<double> pp;
    int rmax = static_cast<int>(std::ceil(std::log(tail_mass * (1 - q)) / std::log(q))) + 1;
    rmax = std::max(rmax, 1);
    for (int r = rmax; r >= 1; --r)
      if (w_minus > 0) {
        zz.push_back(-r);
        pp.push_back(w_minus * std::pow(q, r - 1));
      }
    for (int r = 1; r <= rmax; ++r)
      if (w_plus > 0) {
        zz.push_back(r);
        pp.push_back(w_plus * std::pow(q, r - 1));
      }
    return from_list(std::move(zz), std::move(pp));
  }

  int sample(double u) const {
    size_t i = std::lower_bound(cum.begin(), cum.end(), u) - cum.begin();
    if (i >= z.size()) i = z.size() - 1;
    return z[i];
  }

 private:
  void finish() {
    cum.resize(p.size());
    double acc = 0;
    for (size_t i = 0; i < p.size(); ++i) {
      acc += p[i];
      cum[i] = acc;
      radius = std::max(radius, std::abs(z[i]));
      mean += z[i] * p[i];
    }
    cum.back() = 1.0;
  }
};

// ---------------------------------------------------------------------------
// Rate tables

/// Dense (K+1)x(K+1) jump-rate table b(n, m), validated for
/// b(0,.) = 0, b(.,K) = 0, monotone nondecreasing in n and nonincreasing in m.
class RateTable {
 public:
  RateTable(int cap, std::vector<double> b, bool require_monotone = true,
            bool require_positive_interior = false)
      : cap_(cap), b_(std::move(b)) {
    const size_t n = static_cast<size_t>(cap + 1);
    if (b_.size() != n * n) throw std::invalid_argument("RateTable: wrong size");
    for (size_t i = 0; i < b_.size(); ++i)
      if (b_[i] < 0) throw std::invalid_argument("RateTable: negative rate");
    for (int m = 0; m <= cap; ++m)
      if (at(0, m) != 0) throw std::invalid_argument("RateTable: b(0,.) must vanish");
    for (int nn = 0; nn <= cap; ++nn)
      if (at(nn, cap) != 0) throw std::invalid_argument("RateTable: b(.,K) must vanish");
    if (require_monotone && !monotone())
      throw std::invalid_argument("RateTable: rates violate attractiveness monotonicity");
    if (require_positive_interior)
      for (int nn = 1; nn <= cap; ++nn)
        for (int m = 0; m < cap; ++m)
          if (at(nn, m) <= 0)
            throw std::invalid_argument("RateTable: interior rates must be positive");
    for (double v : b_) sup_ = std::max(sup_, v);
  }

  /// Unvalidated table for deliberately broken models in tests.
  static RateTable unchecked(int cap, std::vector<double> b) {
    RateTable t;
    t.cap_ = cap;
    t.b_ = std::move(b);
    for (double v : t.b_) t.sup_ = std::max(t.sup_, v);
    return t;
  }

  int cap() const { return cap_; }
  double at(int n, int m) const {
    return b_[static_cast<size_t>(n) * static_cast<size_t>(cap_ + 1) + static_cast<size_t>(m)];
  }
  double sup() const { return sup_; }
  const std::vector<double>& raw() const { return b_; }

  bool monotone() const {
    for (int n = 0; n < cap_; ++n)
      for (int m = 0; m <= cap_; ++m)
        if (at(n + 1, m) < at(n, m)) return false;
    for (int n = 0; n <= cap_; ++n)
      for (int m = 0; m < cap_; ++m)
        if (at(n, m + 1) > at(n, m)) return false;
    return true;
  }

  /// K-exclusion rates 1{n>0} 1{m<K}.
  static RateTable k_exclusion(int cap) {
    std::vector<double> b(static_cast<size_t>(cap + 1) * (cap + 1), 0.0);
    for (int n = 1; n <= cap; ++n)
      for (int m = 0; m < cap; ++m) b[static_cast<size_t>(n) * (cap + 1) + m] = 1.0;
    return RateTable(cap, std::move(b));
  }

 private:
  RateTable() = default;
  int cap_ = 1;
  std::vector<double> b_;
  double sup_ = 0.0;
};

// ---------------------------------------------------------------------------
// Family interface

struct JumpRecord {
  bool moved = false;
  int64_t from = 0;
  int64_t to = 0;
};

class TransformationFamily {
 public:
  virtual ~TransformationFamily() = default;
  virtual std::string id() const = 0;
  virtual int cap() const = 0;
  /// Total auxiliary mass m(V): the Poisson event rate per site.
  virtual double rate_per_site() const = 0;
  virtual int locality_radius() const = 0;
  /// Applies the transformation at site x with the event's auxiliary draws.
  virtual JumpRecord apply(const Environment& env, int64_t x, const AuxDraw& aux,
                           LatticeView& view) const = 0;
  /// Enumerates every possible jump out of site x with its generator rate.
  virtual void jump_rates(const Environment& env, const Configuration& eta, int64_t x,
                          const std::function<void(int64_t, double)>& emit) const = 0;
  virtual bool has_product_invariant_measures() const = 0;
};

namespace detail {
inline int occ_of(const Configuration& eta, int64_t x) {
  if (is_periodic(eta.boundary())) return eta.at(eta.wrap(x));
  if (!eta.in_window(x))
    throw std::out_of_range("jump_rates: site outside window; enlarge the window");
  return eta.at(x);
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Misanthrope process (site or bond rates)

class MisanthropeFamily : public TransformationFamily {
 public:
  MisanthropeFamily(int cap, Kernel kernel, RateTable rates, double c = 1.0)
      : cap_(cap), kernel_(std::move(kernel)), rates_(std::move(rates)), c_(c) {
    if (rates_.cap() != cap) throw std::invalid_argument("MisanthropeFamily: table cap mismatch");
    if (!(c > 0 && c <= 1)) throw std::invalid_argument("MisanthropeFamily: c must be in (0,1]");
    norm_ = rates_.sup() / c_;
    if (norm_ <= 0) throw std::invalid_argument("MisanthropeFamily: zero rates");
  }

  std::string id() const override { return "misanthrope"; }
  int cap() const override { return cap_; }
  double rate_per_site() const override { return norm_; }
  int locality_radius() const override { return kernel_.radius; }
  const Kernel& kernel() const { return kernel_; }
  const RateTable& rates() const { return rates_; }

  JumpRecord apply(const Environment& env, int64_t x, const AuxDraw& aux,
                   LatticeView& view) const override {
    const int zi = kernel_.sample(aux.u(0));
    const double u = aux.u(1);
    const int n = view.occ(x);
    if (n == 0) return {};
    const int m = view.occ(x + zi);
    if (m >= cap_) return {};
    const double alpha = rate_factor(env, x, zi);
    if (u * norm_ >= alpha * rates_.at(n, m)) return {};
    view.set_occ(x, n - 1);
    view.set_occ(x + zi, m + 1);
    return {true, x, x + zi};
  }

  void jump_rates(const Environment& env, const Configuration& eta, int64_t x,
                  const std::function<void(int64_t, double)>& emit) const override {
    const int n = detail::occ_of(eta, x);
    if (n == 0) return;
    for (size_t i = 0; i < kernel_.z.size(); ++i) {
      const int m = detail::occ_of(eta, x + kernel_.z[i]);
      const double r = rate_factor(env, x, kernel_.z[i]) * kernel_.p[i] * rates_.at(n, m);
      if (r > 0) emit(x + kernel_.z[i], r);
    }
  }

  bool has_product_invariant_measures() const override {
    // exclusion rates n(1-m)-shaped with K=1 have product Bernoulli measures
    return cap_ == 1;
  }

 private:
  double rate_factor(const Environment& env, int64_t x, int z) const {
    if (env.kind() == EnvironmentSpec::Kind::bond_rates) {
      auto it = std::lower_bound(kernel_.z.begin(), kernel_.z.end(), z);
      return env.bond_rate(x, static_cast<int>(it - kernel_.z.begin()));
    }
    return env.site_rate(x);
  }

  int cap_;
  Kernel kernel_;
  RateTable rates_;
  double c_;
  double norm_;
};

// ---------------------------------------------------------------------------
// k-step exclusion: a particle follows up to k steps of a p-walk absorbed at
// its origin and settles at the first empty site.

class KStepExclusionFamily : public TransformationFamily {
 public:
  KStepExclusionFamily(int k, Kernel walk, double c = 1.0)
      : k_(k), walk_(std::move(walk)), c_(c) {
    if (k < 1) throw std::invalid_argument("KStepExclusionFamily: k must be >= 1");
    if (!(c > 0 && c <= 1)) throw std::invalid_argument("KStepExclusionFamily: c in (0,1]");
  }

  std::string id() const override { return "kstep_exclusion"; }
  int cap() const override { return 1; }
  double rate_per_site() const override { return 1.0 / c_; }
  int locality_radius() const override { return k_ * walk_.radius; }
  int steps() const { return k_; }
  const Kernel& walk() const { return walk_; }

  JumpRecord apply(const Environment& env, int64_t x, const AuxDraw& aux,
                   LatticeView& view) const override {
    if (view.occ(x) == 0) return {};
    if (aux.u(k_) * (1.0 / c_) >= env.site_rate(x)) return {};
    int64_t pos = 0;
    for (int i = 0; i < k_; ++i) {
      if (i > 0 && pos == 0) break;  // walk absorbed on return to the origin
      pos += walk_.sample(aux.u(i));
      if (pos != 0 && view.occ(x + pos) == 0) {
        view.set_occ(x, 0);
        view.set_occ(x + pos, 1);
        return {true, x, x + pos};
      }
    }
    return {};
  }

  void jump_rates(const Environment& env, const Configuration& eta, int64_t x,
                  const std::function<void(int64_t, double)>& emit) const override {
    if (detail::occ_of(eta, x) == 0) return;
    const double alpha = env.site_rate(x);
    // depth-first enumeration of walk prefixes that have not yet settled
    struct Node {
      int64_t pos;
      double prob;
      int depth;
    };
    std::vector<Node> stack{{0, 1.0, 0}};
    while (!stack.empty()) {
      Node nd = stack.back();
      stack.pop_back();
      if (nd.depth == k_) continue;
      if (nd.depth > 0 && nd.pos == 0) continue;  // absorbed
      for (size_t i = 0; i < walk_.z.size(); ++i) {
        int64_t pos = nd.pos + walk_.z[i];
        double prob = nd.prob * walk_.p[i];
        if (pos != 0 && detail::occ_of(eta, x + pos) == 0)
          emit(x + pos, alpha * prob);
        else
          stack.push_back({pos, prob, nd.depth + 1});
      }
    }
  }

  bool has_product_invariant_measures() const override { return true; }

 private:
  int k_;
  Kernel walk_;
  double c_;
};

// ---------------------------------------------------------------------------
// Exclusion with overtaking: pick a direction, jump over at most k-1
// occupied sites to the first empty one, at a distance-dependent rate.

struct OvertakingRates {
  std::vector<double> plus;   // beta^{+1..+k}
  std::vector<double> minus;  // beta^{-1..-k}

  void validate() const {
    if (plus.size() != minus.size() || plus.empty())
      throw std::invalid_argument("OvertakingRates: need matching +/- tuples");
    auto check = [](const std::vector<double>& b, const char* side) {
      for (size_t j = 0; j < b.size(); ++j) {
        if (b[j] < 0 || b[j] > 1)
          throw std::invalid_argument(std::string("OvertakingRates: ") + side +
                                      " rates must lie in [0,1]");
        if (j > 0 && b[j] > b[j - 1] + 1e-15)
          throw std::invalid_argument(std::string("OvertakingRates: ") + side +
                                      " rates must be nonincreasing in distance");
      }
    };
    check(plus, "+");
    check(minus, "-");
    if (plus[0] + minus[0] <= 0)
      throw std::invalid_argument("OvertakingRates: beta^1 + beta^-1 must be positive");
  }
};

class OvertakingFamily : public TransformationFamily {
 public:
  /// variants[0] is the default; site disorder picks a variant per site via
  /// the environment.
  explicit OvertakingFamily(std::vector<OvertakingRates> variants)
      : variants_(std::move(variants)) {
    if (variants_.empty()) throw std::invalid_argument("OvertakingFamily: no rate variants");
    for (auto& v : variants_) v.validate();
    k_ = static_cast<int>(variants_[0].plus.size());
    for (auto& v : variants_)
      if (static_cast<int>(v.plus.size()) != k_)
        throw std::invalid_argument("OvertakingFamily: variant range mismatch");
  }

  std::string id() const override { return "overtaking"; }
  int cap() const override { return 1; }
  double rate_per_site() const override { return 2.0; }
  int locality_radius() const override { return k_; }
  int steps() const { return k_; }
  const std::vector<OvertakingRates>& variants() const { return variants_; }

  JumpRecord apply(const Environment& env, int64_t x, const AuxDraw& aux,
                   LatticeView& view) const override {
    const int dir = aux.u(0) < 0.5 ? +1 : -1;
    const double u = aux.u(1);
    if (view.occ(x) == 0) return {};
    const auto& b = variants_[static_cast<size_t>(env.variant(x))];
    for (int j = 1; j <= k_; ++j) {
      if (view.occ(x + dir * j) == 0) {
        const double beta = (dir > 0) ? b.plus[j - 1] : b.minus[j - 1];
        if (u <= beta) {
          view.set_occ(x, 0);
          view.set_occ(x + dir * j, 1);
          return {true, x, x + dir * j};
        }
        return {};
      }
    }
    return {};
  }

  void jump_rates(const Environment& env, const Configuration& eta, int64_t x,
                  const std::function<void(int64_t, double)>& emit) const override {
    if (detail::occ_of(eta, x) == 0) return;
    const auto& b = variants_[static_cast<size_t>(env.variant(x))];
    for (int dir : {+1, -1}) {
      for (int j = 1; j <= k_; ++j) {
        if (detail::occ_of(eta, x + dir * j) == 0) {
          const double beta = (dir > 0) ? b.plus[j - 1] : b.minus[j - 1];
          if (beta > 0) emit(x + dir * j, beta);
          break;
        }
      }
    }
  }

  bool has_product_invariant_measures() const override { return true; }

 private:
  std::vector<OvertakingRates> variants_;
  int k_ = 1;
};

// ---------------------------------------------------------------------------
// k-step misanthrope process: q-distributed k-paths, first site below the
// cap receives the particle at a step- and occupancy-dependent rate.

struct KStepPathTable {
  std::vector<std::vector<int64_t>> paths;  // each of length k
  std::vector<double> probs;
  std::vector<double> cum;

  void finish(int k) {
    if (paths.size() != probs.size() || paths.empty())
      throw std::invalid_argument("KStepPathTable: path/probability mismatch");
    double s = 0;
    for (auto& pt : paths)
      if (static_cast<int>(pt.size()) != k)
        throw std::invalid_argument("KStepPathTable: path length mismatch");
    for (double p : probs) {
      if (p < 0) throw std::invalid_argument("KStepPathTable: negative probability");
      s += p;
    }
    if (std::fabs(s - 1.0) > 1e-9)
      throw std::invalid_argument("KStepPathTable: probabilities must sum to 1");
    cum.resize(probs.size());
    double acc = 0;
    for (size_t i = 0; i < probs.size(); ++i) {
      acc += probs[i];
      cum[i] = acc;
    }
    cum.back() = 1.0;
  }

  size_t sample(double u) const {
    size_t i = std::lower_bound(cum.begin(), cum.end(), u) - cum.begin();
    return i >= paths.size() ? paths.size() - 1 : i;
  }
};

struct KStepVariant {
  KStepPathTable q;
  std::vector<RateTable> b;  // k tables b^1..b^k

  /// b^j(K,0) <= b^{j-1}(1,K-1) for j >= 2: longer jumps never outrate the
  /// slowest shorter jump.
  void validate_decreasing_rates(int cap) const {
    for (size_t j = 1; j < b.size(); ++j)
      if (b[j].at(cap, 0) > b[j - 1].at(1, cap - 1) + 1e-15)
        throw std::invalid_argument("KStepVariant: decreasing-rates condition violated");
  }
};

class KStepMisanthropeFamily : public TransformationFamily {
 public:
  KStepMisanthropeFamily(int cap, int k, std::vector<KStepVariant> variants,
                         double normalizer = -1.0, bool validate = true)
      : cap_(cap), k_(k), variants_(std::move(variants)) {
    if (variants_.empty()) throw std::invalid_argument("KStepMisanthropeFamily: no variants");
    double sup = 0;
    for (auto& v : variants_) {
      if (static_cast<int>(v.b.size()) != k)
        throw std::invalid_argument("KStepMisanthropeFamily: need k rate tables");
      for (auto& t : v.b) {
        if (t.cap() != cap) throw std::invalid_argument("KStepMisanthropeFamily: cap mismatch");
        sup = std::max(sup, t.sup());
      }
      if (validate) v.validate_decreasing_rates(cap);
      for (auto& pt : v.q.paths)
        for (int64_t s : pt) radius_ = std::max<int64_t>(radius_, std::llabs(s));
    }
    norm_ = normalizer > 0 ? normalizer : std::max(sup, 1e-300);
    if (sup > norm_ * (1 + 1e-12))
      throw std::invalid_argument("KStepMisanthropeFamily: rates exceed normalizer");
  }

  std::string id() const override { return "kstep_misanthrope"; }
  int cap() const override { return cap_; }
  double rate_per_site() const override { return norm_; }
  int locality_radius() const override { return static_cast<int>(radius_); }
  int steps() const { return k_; }
  const std::vector<KStepVariant>& variants() const { return variants_; }

  JumpRecord apply(const Environment& env, int64_t x, const AuxDraw& aux,
                   LatticeView& view) const override {
    const auto& var = variants_[static_cast<size_t>(env.variant(x))];
    const auto& path = var.q.paths[var.q.sample(aux.u(0))];
    const double v2 = aux.u(1);
    const int n = view.occ(x);
    if (n == 0) return {};
    for (int i = 0; i < k_; ++i) {
      const int64_t y = x + path[static_cast<size_t>(i)];
      const int m = (y == x) ? n : view.occ(y);
      if (m < cap_) {
        if (y == x) return {};  // landing on the origin moves nothing
        if (v2 * norm_ < var.b[static_cast<size_t>(i)].at(n, m)) {
          view.set_occ(x, n - 1);
          view.set_occ(y, m + 1);
          return {true, x, y};
        }
        return {};
      }
    }
    return {};
  }

  void jump_rates(const Environment& env, const Configuration& eta, int64_t x,
                  const std::function<void(int64_t, double)>& emit) const override {
    const int n = detail::occ_of(eta, x);
    if (n == 0) return;
    const auto& var = variants_[static_cast<size_t>(env.variant(x))];
    for (size_t pi = 0; pi < var.q.paths.size(); ++pi) {
      const auto& path = var.q.paths[pi];
      for (int i = 0; i < k_; ++i) {
        const int64_t y = x + path[static_cast<size_t>(i)];
        const int m = (y == x) ? n : detail::occ_of(eta, y);
        if (m < cap_) {
          if (y != x) {
            const double r = var.q.probs[pi] * var.b[static_cast<size_t>(i)].at(n, m);
            if (r > 0) emit(y, r);
          }
          break;
        }
      }
    }
  }

  bool has_product_invariant_measures() const override { return false; }

 private:
  int cap_, k_;
  std::vector<KStepVariant> variants_;
  int64_t radius_ = 0;
  double norm_ = 1.0;
};

// ---------------------------------------------------------------------------
// Monotonicity certification

struct MonotoneCounterexample {
  std::vector<int> eta, xi;  // occupancies on the test torus
  int64_t site = 0;
  uint64_t aux_index = 0;
};

struct MonotoneReport {
  bool certified = false;
  uint64_t pairs_total = 0;
  uint64_t pairs_checked = 0;
  uint64_t applies = 0;
  double coverage = 0.0;  // checked pair fraction
  std::optional<MonotoneCounterexample> counterexample;
};

/// Exhaustive order-preservation check on a periodic window: for every
/// ordered pair eta <= xi (or a budget-limited random subset) and sampled
/// auxiliary values, apply at every site and verify the order survives.
inline MonotoneReport check_monotone(const TransformationFamily& fam, const Environment& env,
                                     int window_size, uint64_t aux_samples,
                                     uint64_t budget = 400000000ull, uint64_t seed = 20240901) {
  const int K = fam.cap();
  const int w = window_size;
  const uint64_t per_site = static_cast<uint64_t>((K + 1) * (K + 2) / 2);
  uint64_t pairs_total = 1;
  for (int i = 0; i < w; ++i) pairs_total *= per_site;

  MonotoneReport rep;
  rep.pairs_total = pairs_total;
  const uint64_t cost_per_pair = aux_samples * static_cast<uint64_t>(w);
  uint64_t max_pairs = budget / std::max<uint64_t>(cost_per_pair, 1);
  const bool exhaustive = pairs_total <= max_pairs;
  const uint64_t n_pairs = exhaustive ? pairs_total : max_pairs;

  // ordered per-site pairs (a, b) with a <= b
  std::vector<std::pair<int, int>> site_pairs;
  for (int a = 0; a <= K; ++a)
    for (int b = a; b <= K; ++b) site_pairs.emplace_back(a, b);

  Configuration eta(0, w - 1, K, Periodic{});
  Configuration xi(0, w - 1, K, Periodic{});
  Configuration eta2 = eta, xi2 = xi;

  for (uint64_t pi = 0; pi < n_pairs; ++pi) {
    uint64_t code = exhaustive ? pi : rng::mix(seed, pi, 900) % pairs_total;
    for (int s = 0; s < w; ++s) {
      auto [a, b] = site_pairs[code % per_site];
      code /= per_site;
      eta.set(s, a);
      xi.set(s, b);
    }
    for (uint64_t ai = 0; ai < aux_samples; ++ai) {
      AuxDraw aux{seed, ai};
      for (int s = 0; s < w; ++s) {
        eta2 = eta;
        xi2 = xi;
        LatticeView ve(eta2), vx(xi2);
        ve.begin_event(seed, ai);
        vx.begin_event(seed, ai);
        fam.apply(env, s, aux, ve);
        fam.apply(env, s, aux, vx);
        rep.applies += 2;
        if (!leq(eta2, xi2)) {
          rep.pairs_checked = pi + 1;
          rep.coverage = static_cast<double>(pi + 1) / static_cast<double>(pairs_total);
          rep.counterexample = MonotoneCounterexample{
              eta.occupancies(), xi.occupancies(), s, ai};
          return rep;
        }
      }
    }
  }
  rep.pairs_checked = n_pairs;
  rep.coverage = static_cast<double>(n_pairs) / static_cast<double>(pairs_total);
  rep.certified = exhaustive;
  return rep;
}

}  // namespace hydrolim

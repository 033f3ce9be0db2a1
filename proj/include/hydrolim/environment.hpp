/// Quenched environments: per-site or per-bond rate factors, per-site
/// overtaking tuples, or per-site (q, b) variant choices, drawn i.i.d. from a
/// spec and frozen for the lifetime of a run.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hydrolim/rng.hpp"

namespace hydrolim {

/// i.i.d. scalar law for disorder fields.
struct IidLaw {
  enum class Kind { constant, uniform, choice };
  Kind kind = Kind::constant;
  double value = 1.0;
  double lo = 1.0, hi = 1.0;
  std::vector<double> values;
  std::vector<double> probs;

  double sample(uint64_t seed, uint64_t site_index, uint64_t channel) const {
    switch (kind) {
      case Kind::constant:
        return value;
      case Kind::uniform:
        return lo + (hi - lo) * rng::u01(seed, site_index, channel);
      case Kind::choice: {
        double u = rng::u01(seed, site_index, channel);
        double acc = 0.0;
        for (size_t i = 0; i < values.size(); ++i) {
          acc += probs[i];
          if (u < acc) return values[i];
        }
        return values.back();
      }
    }
    return value;
  }

  double min_value() const {
    if (kind == Kind::constant) return value;
    if (kind == Kind::uniform) return lo;
    double m = values.front();
    for (double v : values) m = std::min(m, v);
    return m;
  }
  double max_value() const {
    if (kind == Kind::constant) return value;
    if (kind == Kind::uniform) return hi;
    double m = values.front();
    for (double v : values) m = std::max(m, v);
    return m;
  }
};

struct EnvironmentSpec {
  enum class Kind { none, site_rates, bond_rates, overtaking_variants, kstep_variants };
  Kind kind = Kind::none;
  IidLaw law;                        // site/bond rate law
  double c = 1.0;                    // rates must lie in [c, 1/c]
  std::vector<double> variant_probs; // for variant-valued disorder (model holds the tables)

  void validate() const {
    if (kind == Kind::site_rates || kind == Kind::bond_rates) {
      if (!(c > 0.0 && c <= 1.0))
        throw std::invalid_argument("EnvironmentSpec: c must lie in (0, 1]");
      if (law.min_value() < c - 1e-12 || law.max_value() > 1.0 / c + 1e-12)
        throw std::invalid_argument("EnvironmentSpec: rate law leaves [c, 1/c]");
      if (law.kind == IidLaw::Kind::choice) {
        double s = 0;
        for (double p : law.probs) s += p;
        if (std::fabs(s - 1.0) > 1e-9 || law.values.size() != law.probs.size())
          throw std::invalid_argument("EnvironmentSpec: choice law probabilities must sum to 1");
      }
    }
    if (kind == Kind::overtaking_variants || kind == Kind::kstep_variants) {
      double s = 0;
      for (double p : variant_probs) s += p;
      if (variant_probs.empty() || std::fabs(s - 1.0) > 1e-9)
        throw std::invalid_argument("EnvironmentSpec: variant probabilities must sum to 1");
    }
  }
};

/// A realized environment over a site range (wrapping when periodic).
class Environment {
 public:
  Environment() = default;

  static Environment none() { return Environment(); }

  EnvironmentSpec::Kind kind() const { return kind_; }
  uint64_t seed() const { return seed_; }
  int64_t lo() const { return lo_; }
  int64_t hi() const { return lo_ + static_cast<int64_t>(n_) - 1; }

  double site_rate(int64_t x) const {
    if (kind_ != EnvironmentSpec::Kind::site_rates) return 1.0;
    return site_[idx(x)];
  }
  double bond_rate(int64_t x, int z_index) const {
    if (kind_ != EnvironmentSpec::Kind::bond_rates) return 1.0;
    return bond_[idx(x) * static_cast<size_t>(nz_) + static_cast<size_t>(z_index)];
  }
  /// Index into the model's variant table (0 when not disordered).
  int variant(int64_t x) const {
    if (variant_.empty()) return 0;
    return variant_[idx(x)];
  }

  static Environment sample(const EnvironmentSpec& spec, int64_t lo, int64_t hi, bool wrap,
                            uint64_t seed, int bond_kernel_size = 0, int variant_count = 1) {
    spec.validate();
    Environment env;
    env.kind_ = spec.kind;
    env.lo_ = lo;
    env.n_ = static_cast<size_t>(hi - lo + 1);
    env.wrap_ = wrap;
    env.seed_ = seed;
    switch (spec.kind) {
      case EnvironmentSpec::Kind::none:
        break;
      case EnvironmentSpec::Kind::site_rates:
        env.site_.resize(env.n_);
        for (size_t i = 0; i < env.n_; ++i)
          env.site_[i] = spec.law.sample(seed, static_cast<uint64_t>(lo + static_cast<int64_t>(i)) * 2654435761u, 0);
        break;
      case EnvironmentSpec::Kind::bond_rates:
        env.nz_ = bond_kernel_size;
        env.bond_.resize(env.n_ * static_cast<size_t>(bond_kernel_size));
        for (size_t i = 0; i < env.n_; ++i)
          for (int z = 0; z < bond_kernel_size; ++z)
            env.bond_[i * static_cast<size_t>(bond_kernel_size) + static_cast<size_t>(z)] =
                spec.law.sample(seed, static_cast<uint64_t>(lo + static_cast<int64_t>(i)) * 2654435761u,
                                1 + static_cast<uint64_t>(z));
        break;
      case EnvironmentSpec::Kind::overtaking_variants:
      case EnvironmentSpec::Kind::kstep_variants: {
        env.variant_.resize(env.n_);
        for (size_t i = 0; i < env.n_; ++i) {
          double u = rng::u01(seed, static_cast<uint64_t>(lo + static_cast<int64_t>(i)) * 2654435761u, 2);
          double acc = 0.0;
          int pick = static_cast<int>(spec.variant_probs.size()) - 1;
          for (size_t v = 0; v < spec.variant_probs.size(); ++v) {
            acc += spec.variant_probs[v];
            if (u < acc) {
              pick = static_cast<int>(v);
              break;
            }
          }
          env.variant_[i] = static_cast<uint8_t>(pick);
        }
        if (variant_count > 0)
          for (auto v : env.variant_)
            if (v >= variant_count)
              throw std::invalid_argument("Environment: variant index out of range");
        break;
      }
    }
    return env;
  }

 private:
  size_t idx(int64_t x) const {
    int64_t r = x - lo_;
    if (wrap_) {
      r %= static_cast<int64_t>(n_);
      if (r < 0) r += static_cast<int64_t>(n_);
    } else if (r < 0 || r >= static_cast<int64_t>(n_)) {
      throw std::out_of_range("Environment: site outside sampled range");
    }
    return static_cast<size_t>(r);
  }

  EnvironmentSpec::Kind kind_ = EnvironmentSpec::Kind::none;
  int64_t lo_ = 0;
  size_t n_ = 0;
  bool wrap_ = false;
  uint64_t seed_ = 0;
  int nz_ = 0;
  std::vector<double> site_, bond_;
  std::vector<uint8_t> variant_;
};

}  // namespace hydrolim

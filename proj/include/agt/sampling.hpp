#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "agt/ratfunc.hpp"

namespace agt {

enum class Mode { Symbolic, Sampled };

struct SamplingConfig {
  Mode mode = Mode::Sampled;
  std::uint64_t seed = 1;
  int samples = 3;
  long height = 10000;
  int max_retries = 50;
};

// Deterministic source of random rationals p/q with |p|, q <= height.
class Sampler {
 public:
  Sampler(std::uint64_t seed, long height);
  Rational next();
  ParamAssignment assign(const std::vector<std::string>& names);

 private:
  std::mt19937_64 rng_;
  long height_;
};

// Runs `body` at `config.samples` independent random points for the given
// parameter names, resampling whenever a ZeroDenominator escapes. Returns the
// assignments that were used. A body returning false stops the loop.
std::vector<ParamAssignment> for_each_sample(const SamplingConfig& config, const std::vector<std::string>& names,
                                             const std::function<bool(const ParamAssignment&)>& body);

// Maps every name to the constant RatFunc (sampled) or the symbol (symbolic).
RatFunc param(const std::string& name, const ParamAssignment* point);

}  // namespace agt

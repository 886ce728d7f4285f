#include "agt/sampling.hpp"

#include "agt/errors.hpp"

namespace agt {

Sampler::Sampler(std::uint64_t seed, long height) : rng_(seed), height_(height) {}

Rational Sampler::next() {
  std::uniform_int_distribution<long> num(-height_, height_);
  std::uniform_int_distribution<long> den(1, height_);
  long p = 0;
  while (p == 0) p = num(rng_);
  Rational r(p, den(rng_));
  r.canonicalize();
  return r;
}

ParamAssignment Sampler::assign(const std::vector<std::string>& names) {
  ParamAssignment a;
  for (const auto& n : names) a[n] = next();
  return a;
}

std::vector<ParamAssignment> for_each_sample(const SamplingConfig& config, const std::vector<std::string>& names,
                                             const std::function<bool(const ParamAssignment&)>& body) {
  Sampler sampler(config.seed, config.height);
  std::vector<ParamAssignment> used;
  int retries = 0;
  while (static_cast<int>(used.size()) < config.samples) {
    ParamAssignment point = sampler.assign(names);
    try {
      bool keep_going = body(point);
      used.push_back(point);
      if (!keep_going) break;
    } catch (const ZeroDenominator&) {
      if (++retries > config.max_retries) throw;
    }
  }
  return used;
}

RatFunc param(const std::string& name, const ParamAssignment* point) {
  if (point == nullptr) return RatFunc::var(name);
  auto it = point->find(name);
  if (it == point->end()) return RatFunc::var(name);
  return RatFunc(it->second);
}

}  // namespace agt

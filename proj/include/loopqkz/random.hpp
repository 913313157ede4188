#pragma once

// Seeded generation of small random rational spectral points.

#include <cstdint>
#include <random>
#include <vector>

#include "loopqkz/exactfield.hpp"
#include "loopqkz/transfer.hpp"

namespace loopqkz {

class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed, long bound = 9) : rng_(seed), bound_(bound) {}

  // p/d with 1 <= |p|, d <= bound, |p/d| != 1, and |x| not equal to |y| or
  // 1/|y| for anything drawn since the last reset().
  Rational draw() {
    std::uniform_int_distribution<long> num(-bound_, bound_), den(1, bound_);
    for (;;) {
      const long p = num(rng_), d = den(rng_);
      if (p == 0) continue;
      Rational x = make_rational(p, d);
      Rational a = abs(x);
      if (a == 1) continue;
      bool clash = false;
      for (const auto& u : used_)
        if (a == u || a * u == 1) clash = true;
      if (clash) continue;
      used_.push_back(a);
      return x;
    }
  }

  Scalar draw_scalar() { return Scalar(draw()); }

  void reset() { used_.clear(); }

  // Random point with L inhomogeneities, both boundary parameters and w all
  // drawn independently; redrawn until every tile weight is finite.
  SpectralPoint point(int length, const Scalar& s = Scalar(1L)) {
    for (;;) {
      reset();
      SpectralPoint pt;
      for (int i = 0; i < length; ++i) pt.z.push_back(draw_scalar());
      pt.zeta1 = draw_scalar();
      pt.zeta2 = draw_scalar();
      pt.w = draw_scalar();
      pt.s = s;
      if (is_generic(pt)) return pt;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  long bound_;
  std::vector<Rational> used_;
};

}  // namespace loopqkz

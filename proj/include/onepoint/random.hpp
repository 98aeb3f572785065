#pragma once

// Deterministic sampling of rationals and open subsets. Draws use raw
// mt19937_64 output (not std distributions) so sequences are identical
// across standard library implementations.

#include <cstdint>
#include <random>
#include <vector>

#include "onepoint/interval_set.hpp"

namespace onepoint {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

/// A rational point of `piece`, drawn from a grid that includes included
/// endpoints and points close to excluded ones.
inline Rational sample_point(Rng& rng, const Interval& piece) {
  Endpoint lo = piece.lo(), hi = piece.hi();
  if (piece.degenerate()) return lo.value;
  if (piece.bounded()) {
    const std::int64_t grid = 32;
    std::int64_t k = rng.between(lo.included ? 0 : 1, hi.included ? grid : grid - 1);
    // occasionally hug an excluded end very tightly
    if (!hi.included && rng.chance(1, 16)) return hi.value - (hi.value - lo.value).halved(10 + rng.below(20));
    if (!lo.included && rng.chance(1, 16)) return lo.value + (hi.value - lo.value).halved(10 + rng.below(20));
    return lo.value + (hi.value - lo.value) * Rational(k) / Rational(grid);
  }
  Rational step = Rational(rng.between(0, 160)) / Rational(4);
  if (lo.finite()) {
    if (!lo.included && step == 0) step = Rational(1, 8);
    return lo.value + step;
  }
  if (hi.finite()) {
    if (!hi.included && step == 0) step = Rational(1, 8);
    return hi.value - step;
  }
  return Rational(rng.between(-80, 80)) / Rational(4);
}

/// A random point of a nonempty set.
inline Rational sample_point(Rng& rng, const IntervalSet& s) {
  return sample_point(rng, s.pieces()[rng.below(s.size())]);
}

/// A random rational anywhere near the set (not necessarily inside it).
inline Rational sample_near(Rng& rng, const IntervalSet& s) {
  Rational q = sample_point(rng, s);
  std::int64_t jitter = rng.between(-8, 8);
  return q + Rational(jitter) / Rational(16);
}

/// A random subset of x that is open in x: a union of random real-open
/// intervals (and occasionally whole pieces) traced to x.
inline IntervalSet random_open_in(Rng& rng, const IntervalSet& x) {
  if (x.empty()) return {};
  std::vector<Interval> raw;
  std::uint64_t count = rng.below(4);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (rng.chance(1, 5)) {
      raw.push_back(x.pieces()[rng.below(x.size())]);
      continue;
    }
    Rational a = sample_near(rng, x), b = sample_near(rng, x);
    if (b < a) std::swap(a, b);
    if (a == b) b = a + Rational(1, 4);
    Endpoint lo = rng.chance(1, 6) ? Endpoint::neg_inf() : Endpoint::open(a);
    Endpoint hi = rng.chance(1, 6) ? Endpoint::pos_inf() : Endpoint::open(b);
    raw.push_back(Interval::make(lo, hi));
  }
  return intersect(IntervalSet::normalize(std::move(raw)), x);
}

/// A random subset of x that is closed in x.
inline IntervalSet random_closed_in(Rng& rng, const IntervalSet& x) {
  if (x.empty()) return {};
  std::vector<Interval> raw;
  std::uint64_t count = rng.below(4);
  for (std::uint64_t i = 0; i < count; ++i) {
    Rational a = sample_point(rng, x);
    if (rng.chance(1, 4)) {
      raw.push_back(Interval::point(a));
      continue;
    }
    Rational b = sample_near(rng, x);
    if (b < a) std::swap(a, b);
    raw.push_back(a == b ? Interval::point(a) : Interval::closed(a, b));
  }
  IntervalSet s = intersect(IntervalSet::normalize(std::move(raw)), x);
  return closure_in(s, x);
}

}  // namespace onepoint

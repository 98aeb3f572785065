#pragma once

// Generated test material: spaces with 1-5 components and mixed endpoint
// kinds, point pairs of Y, disjoint closed pairs of Y, and covers of αX.

#include <string>
#include <utility>
#include <vector>

#include "onepoint/compactify.hpp"
#include "onepoint/connectify.hpp"
#include "onepoint/random.hpp"

namespace onepoint::corpus {

inline const std::vector<std::string>& fixed_spaces() {
  static const std::vector<std::string> spaces{
      "(0,1) U [2,3]",   "(0,1) U (2,3) U [5,inf)", "[0,1]",         "(0,1)",
      "[5,inf)",         "(-inf,0)",                "(-inf,inf)",    "[0,0] U (1,2)",
      "[0,1) U (1,2]",   "(0,1) U (1,2)",           "(0,1] U (2,3)", "(0,1) U [5,inf)",
      "[0,1] U [2,3]",   "[0,1] U (2,3)",           "(-inf,0] U [1,inf)", "(-inf,-1) U (-1,1) U (1,inf)",
      "[0,0]",           "(0,1/2] U [3/4,1)",
  };
  return spaces;
}

/// A random space with 1-5 components. With `avoid_compact` every component
/// is non-compact.
inline Space random_space(Rng& rng, bool avoid_compact) {
  std::size_t k = 1 + rng.below(5);
  std::vector<Interval> pieces;
  Rational cursor(rng.between(-12, 4));
  bool prev_hi_excluded = false;
  for (std::size_t i = 0; i < k; ++i) {
    bool first = i == 0, last = i + 1 == k;
    // gap before this piece: a single missing point, or a positive gap
    if (!first) {
      if (!(prev_hi_excluded && rng.chance(1, 4))) cursor = cursor + Rational(rng.between(1, 8)) / Rational(4);
    }
    bool touching = !first && prev_hi_excluded && pieces.back().hi().value == cursor;
    Endpoint lo = (first && rng.chance(1, 5)) ? Endpoint::neg_inf()
                                             : Endpoint{Endpoint::Kind::Finite, cursor, !touching && rng.chance(1, 2)};
    if (!avoid_compact && lo.finite() && !touching && rng.chance(1, 8)) {
      pieces.push_back(Interval::point(cursor));
      prev_hi_excluded = false;
      continue;
    }
    cursor = cursor + Rational(rng.between(1, 12)) / Rational(rng.between(1, 3));
    Endpoint hi = (last && rng.chance(1, 5)) ? Endpoint::pos_inf()
                                            : Endpoint{Endpoint::Kind::Finite, cursor, rng.chance(1, 2)};
    if (avoid_compact && lo.finite() && lo.included && hi.finite() && hi.included) hi.included = false;
    pieces.push_back(Interval::make(lo, hi));
    prev_hi_excluded = hi.finite() && !hi.included;
  }
  return Space(IntervalSet::normalize(std::move(pieces)));
}

/// The fixed spaces followed by `generated` random ones, alternating between
/// unconstrained and compact-free draws.
inline std::vector<Space> make_corpus(std::size_t generated, std::uint64_t seed = 2024) {
  std::vector<Space> out;
  for (const auto& s : fixed_spaces()) out.push_back(Space::parse(s));
  Rng rng(seed);
  for (std::size_t i = 0; i < generated; ++i) out.push_back(random_space(rng, i % 2 == 1));
  return out;
}

inline ExtPoint random_point(Rng& rng, const Extension& y) {
  if (rng.chance(1, 5)) return ExtPoint::p();
  return ExtPoint::at(sample_point(rng, y.x()));
}

inline std::pair<ExtPoint, ExtPoint> random_point_pair(Rng& rng, const Extension& y) {
  ExtPoint a = random_point(rng, y);
  ExtPoint b = random_point(rng, y);
  while (b == a) b = random_point(rng, y);
  return {a, b};
}

namespace detail {

/// Removes from `s` an open ray past a random filter element in every
/// component, so that the complement of s holds a tail everywhere.
inline IntervalSet trim_tails(Rng& rng, const Extension& y, IntervalSet s) {
  for (const auto& f : y.filters()) {
    Rational e = f.inner_endpoint(rng.below(9));
    Interval ray = f.rightward() ? Interval::make(Endpoint::open(e), Endpoint::pos_inf())
                                 : Interval::make(Endpoint::neg_inf(), Endpoint::open(e));
    s = difference(s, intersect(IntervalSet(ray), f.component().as_set()));
  }
  return s;
}

/// An open set of the real line containing s.
inline IntervalSet open_fattening(Rng& rng, const IntervalSet& s) {
  std::vector<Interval> raw;
  for (const auto& iv : s.pieces()) {
    Rational eps = Rational(1, 1 << (2 + rng.below(6)));
    Endpoint lo = iv.lo().finite() ? Endpoint::open(iv.lo().value - eps) : Endpoint::neg_inf();
    Endpoint hi = iv.hi().finite() ? Endpoint::open(iv.hi().value + eps) : Endpoint::pos_inf();
    raw.push_back(Interval::make(lo, hi));
  }
  return IntervalSet::normalize(std::move(raw));
}

}  // namespace detail

/// Disjoint closed sets of Y. Modes cycle through p ∉ F ∪ G, p ∈ F, p ∈ G.
inline std::pair<ExtClosedSet, ExtClosedSet> random_closed_pair(Rng& rng, const Extension& y) {
  std::uint64_t mode = rng.below(4);
  bool p_in_f = mode == 1 || mode == 3;
  bool p_in_g = mode == 2;
  ExtClosedSet f{p_in_f, random_closed_in(rng, y.x())};
  if (rng.chance(1, 8)) f.trace = {};
  if (!f.has_p) f.trace = detail::trim_tails(rng, y, f.trace);
  IntervalSet g_trace = difference(random_closed_in(rng, y.x()), detail::open_fattening(rng, f.trace));
  if (!p_in_g) g_trace = detail::trim_tails(rng, y, g_trace);
  return {f, ExtClosedSet{p_in_g, g_trace}};
}

/// A cover of αX: one TypeInf member around a random compact set, a chain of
/// overlapping open intervals over it, and some noise, shuffled.
inline std::vector<CompactOpenSet> random_cover(Rng& rng, const CompactExtension& y) {
  IntervalSet closed = random_closed_in(rng, y.x());
  std::vector<Interval> compact_pieces;
  for (const auto& iv : closed.pieces())
    if (is_compact(iv)) compact_pieces.push_back(iv);
  IntervalSet k = IntervalSet::normalize(compact_pieces);

  std::vector<CompactOpenSet> cover{CompactOpenSet::type_inf(k)};
  for (const auto& piece : k.pieces()) {
    Rational a = piece.lo().value, b = piece.hi().value;
    std::size_t splits = 1 + rng.below(4);
    Rational step = (b - a) / Rational(static_cast<std::int64_t>(splits));
    Rational eps = step.sign() > 0 ? step.halved(2) : Rational(1, 8);
    for (std::size_t i = 0; i < splits; ++i) {
      Rational s0 = a + step * Rational(static_cast<std::int64_t>(i));
      Rational s1 = s0 + step;
      cover.push_back(CompactOpenSet::type1(intersect(IntervalSet(Interval::open(s0 - eps, s1 + eps)), y.x())));
    }
  }
  std::size_t noise = rng.below(3);
  for (std::size_t i = 0; i < noise; ++i) cover.push_back(CompactOpenSet::type1(random_open_in(rng, y.x())));
  for (std::size_t i = cover.size(); i > 1; --i) std::swap(cover[i - 1], cover[rng.below(i)]);
  return cover;
}

}  // namespace onepoint::corpus

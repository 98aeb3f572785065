#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "onepoint/interval_set.hpp"

namespace onepoint {

/// One canonical piece of a space: a maximal connected subset.
struct Component {
  Interval piece;
  std::size_t index = 0;

  IntervalSet as_set() const { return IntervalSet(piece); }

  friend bool operator==(const Component& a, const Component& b) {
    return a.index == b.index && a.piece == b.piece;
  }
};

/// A nonempty subset of the real line carrying its subspace topology.
class Space {
 public:
  explicit Space(IntervalSet ambient) : ambient_(std::move(ambient)) {
    if (ambient_.empty()) throw Error(ErrorCode::EmptySpace, "a space must be nonempty");
  }

  static Space parse(std::string_view text) { return Space(parse_set(text)); }

  const IntervalSet& ambient() const { return ambient_; }

  std::vector<Component> components() const {
    std::vector<Component> out;
    out.reserve(ambient_.size());
    for (std::size_t i = 0; i < ambient_.size(); ++i) out.push_back({ambient_.pieces()[i], i});
    return out;
  }

  Component component(std::size_t i) const { return {ambient_.pieces().at(i), i}; }
  std::size_t component_count() const { return ambient_.size(); }

  /// Component containing q; throws PointOutsideComponent if q ∉ X.
  Component component_of(const Rational& q) const {
    for (std::size_t i = 0; i < ambient_.size(); ++i)
      if (ambient_.pieces()[i].contains(q)) return {ambient_.pieces()[i], i};
    throw Error(ErrorCode::PointOutsideComponent, q.str() + " is not a point of " + ambient_.str());
  }

  friend bool operator==(const Space& a, const Space& b) { return a.ambient_ == b.ambient_; }

 private:
  IntervalSet ambient_;
};

/// Heine–Borel: a piece is compact iff both ends are finite and included.
inline bool is_compact(const Interval& piece) {
  return piece.bounded() && piece.lo().included && piece.hi().included;
}
inline bool is_compact(const Component& c) { return is_compact(c.piece); }

inline std::optional<Component> has_compact_component(const Space& x) {
  for (const auto& c : x.components())
    if (is_compact(c)) return c;
  return std::nullopt;
}

struct OpenWindow {
  std::size_t component = 0;
  Interval window;  // open in the real line
};

/// For every component C, an open interval W with W ∩ X = C.
struct LocalConnectednessCertificate {
  std::vector<OpenWindow> windows;
};

inline LocalConnectednessCertificate local_connectedness_certificate(const Space& x) {
  LocalConnectednessCertificate cert;
  const auto& pieces = x.ambient().pieces();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    Endpoint lo = pieces[i].lo(), hi = pieces[i].hi();
    Endpoint wlo = Endpoint::neg_inf(), whi = Endpoint::pos_inf();
    if (i > 0) {
      wlo = Endpoint::open(pieces[i - 1].hi().value);
    } else if (lo.finite()) {
      wlo = Endpoint::open(lo.included ? lo.value - 1 : lo.value);
    }
    if (i + 1 < pieces.size()) {
      whi = Endpoint::open(pieces[i + 1].lo().value);
    } else if (hi.finite()) {
      whi = Endpoint::open(hi.included ? hi.value + 1 : hi.value);
    }
    cert.windows.push_back({i, Interval::make(wlo, whi)});
  }
  return cert;
}

/// Disjoint open sets (U, V) of X with F ⊆ U and G ⊆ V, built by cutting the
/// line between every F-piece and the next G-piece (and vice versa): at the
/// rational midpoint of a positive-length gap, or at the gap point itself when
/// the two closures touch at a point missing from X.
inline std::pair<IntervalSet, IntervalSet> separate_disjoint_closed(const Space& x, const IntervalSet& f,
                                                                    const IntervalSet& g) {
  const IntervalSet& ambient = x.ambient();
  if (!is_subset(f, ambient) || !is_subset(g, ambient))
    throw Error(ErrorCode::NotASubset, "closed sets must lie in the space");
  if (!is_closed_in(f, ambient)) throw Error(ErrorCode::NotClosed, f.str() + " is not closed in " + ambient.str());
  if (!is_closed_in(g, ambient)) throw Error(ErrorCode::NotClosed, g.str() + " is not closed in " + ambient.str());
  if (!disjoint(f, g)) throw Error(ErrorCode::NotDisjoint, f.str() + " meets " + g.str());

  if (f.empty()) return {IntervalSet{}, ambient};
  if (g.empty()) return {ambient, IntervalSet{}};

  struct Labelled {
    const Interval* piece;
    bool in_f;
  };
  std::vector<Labelled> all;
  for (const auto& iv : f.pieces()) all.push_back({&iv, true});
  for (const auto& iv : g.pieces()) all.push_back({&iv, false});
  std::sort(all.begin(), all.end(),
            [](const Labelled& a, const Labelled& b) { return a.piece->lo_cut() < b.piece->lo_cut(); });

  // Walk the labelled pieces; each run of equal labels becomes one open region.
  std::vector<Interval> u_raw, v_raw;
  Endpoint region_lo = Endpoint::neg_inf();
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool last = i + 1 == all.size();
    if (!last && all[i + 1].in_f == all[i].in_f) continue;
    Endpoint region_hi = Endpoint::pos_inf();
    if (!last) {
      Rational left = all[i].piece->hi().value;
      Rational right = all[i + 1].piece->lo().value;
      region_hi = Endpoint::open(left == right ? left : Rational::midpoint(left, right));
    }
    (all[i].in_f ? u_raw : v_raw).push_back(Interval::make(region_lo, region_hi));
    if (!last) region_lo = Endpoint::open(region_hi.value);
  }
  return {intersect(IntervalSet::normalize(std::move(u_raw)), ambient),
          intersect(IntervalSet::normalize(std::move(v_raw)), ambient)};
}

}  // namespace onepoint

#pragma once

// Alexandroff one-point compactification αX = X ∪ {∞}: neighbourhoods of ∞
// are complements of compact closed subsets of X.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "onepoint/connectify.hpp"
#include "onepoint/space.hpp"

namespace onepoint {

inline bool is_space_compact(const Space& x) {
  const auto& pieces = x.ambient().pieces();
  return std::all_of(pieces.begin(), pieces.end(), [](const Interval& iv) { return is_compact(iv); });
}

/// A compact set of the real line given as an IntervalSet: every piece closed
/// and bounded.
inline bool is_compact_set(const IntervalSet& k) {
  const auto& pieces = k.pieces();
  return std::all_of(pieces.begin(), pieces.end(), [](const Interval& iv) { return is_compact(iv); });
}

struct CompactExtension {
  Space base;

  const IntervalSet& x() const { return base.ambient(); }
};

struct CompactRefusal {
  std::string reason = "space is compact";
};

using CompactVerdict = std::variant<CompactExtension, CompactRefusal>;

inline CompactVerdict compactify(const Space& x) {
  if (is_space_compact(x)) return CompactRefusal{};
  return CompactExtension{x};
}

/// Open set of αX: an X-open trace (TypeI) or the complement X ∖ K of a
/// compact closed K, together with ∞ (TypeInf).
struct CompactOpenSet {
  enum class Kind { TypeI, TypeInf };

  Kind kind = Kind::TypeI;
  IntervalSet trace;    // TypeI
  IntervalSet removed;  // TypeInf: the compact K

  static CompactOpenSet type1(IntervalSet trace) { return {Kind::TypeI, std::move(trace), {}}; }
  static CompactOpenSet type_inf(IntervalSet k) { return {Kind::TypeInf, {}, std::move(k)}; }

  bool has_infinity() const { return kind == Kind::TypeInf; }
  IntervalSet trace_in(const IntervalSet& x) const { return has_infinity() ? difference(x, removed) : trace; }

  friend bool operator==(const CompactOpenSet&, const CompactOpenSet&) = default;
};

enum class CompactOpenFailure { None, OutsideSpace, TraceNotOpen, NotClosed, NotCompact };

inline std::string_view to_string(CompactOpenFailure f) {
  switch (f) {
    case CompactOpenFailure::None: return "None";
    case CompactOpenFailure::OutsideSpace: return "OutsideSpace";
    case CompactOpenFailure::TraceNotOpen: return "TraceNotOpen";
    case CompactOpenFailure::NotClosed: return "NotClosed";
    case CompactOpenFailure::NotCompact: return "NotCompact";
  }
  return "?";
}

struct CompactOpenCheck {
  CompactOpenFailure failure = CompactOpenFailure::None;
  explicit operator bool() const { return failure == CompactOpenFailure::None; }
};

inline CompactOpenCheck is_open_in_compactification(const CompactExtension& y, const CompactOpenSet& u) {
  if (u.kind == CompactOpenSet::Kind::TypeI) {
    if (!is_subset(u.trace, y.x())) return {CompactOpenFailure::OutsideSpace};
    if (!is_open_in(u.trace, y.x())) return {CompactOpenFailure::TraceNotOpen};
    return {};
  }
  if (!is_subset(u.removed, y.x())) return {CompactOpenFailure::OutsideSpace};
  if (!is_closed_in(u.removed, y.x())) return {CompactOpenFailure::NotClosed};
  if (!is_compact_set(u.removed)) return {CompactOpenFailure::NotCompact};
  if (!is_open_in(u.trace_in(y.x()), y.x())) return {CompactOpenFailure::TraceNotOpen};
  return {};
}

struct CompactSeparation {
  CompactOpenSet u;
  CompactOpenSet v;
};

/// Compact closed neighbourhood of z in X: [z-r, z+r] ∩ C, with r = 1 or
/// half the distance to the nearest excluded finite end of z's component.
inline IntervalSet compact_neighbourhood(const Space& x, const Rational& z) {
  Component c = x.component_of(z);
  Rational radius(1);
  for (const Endpoint& e : {c.piece.lo(), c.piece.hi()}) {
    if (!e.finite() || e.included) continue;
    Rational d = e.value < z ? z - e.value : e.value - z;
    radius = std::min(radius, d.halved(1));
  }
  return intersect(IntervalSet(Interval::closed(z - radius, z + radius)), c.as_set());
}

/// Disjoint opens U ∋ a and V ∋ b; ExtPoint::p() stands for ∞ here.
inline CompactSeparation compactification_hausdorff_witness(const CompactExtension& y, const ExtPoint& a,
                                                            const ExtPoint& b) {
  if (a == b) throw Error(ErrorCode::EqualPoints, "points must differ: " + a.str());
  for (const auto* pt : {&a, &b})
    if (!pt->is_p() && !y.x().contains(*pt->coord))
      throw Error(ErrorCode::PointOutsideComponent, pt->coord->str() + " is not a point of X");
  if (!a.is_p() && !b.is_p()) {
    Rational mid = Rational::midpoint(*a.coord, *b.coord);
    IntervalSet left = intersect(IntervalSet(Interval::make(Endpoint::neg_inf(), Endpoint::open(mid))), y.x());
    IntervalSet right = intersect(IntervalSet(Interval::make(Endpoint::open(mid), Endpoint::pos_inf())), y.x());
    if (*a.coord < *b.coord) return {CompactOpenSet::type1(left), CompactOpenSet::type1(right)};
    return {CompactOpenSet::type1(right), CompactOpenSet::type1(left)};
  }
  if (!a.is_p()) {
    auto swapped = compactification_hausdorff_witness(y, b, a);
    return {swapped.v, swapped.u};
  }
  IntervalSet k = compact_neighbourhood(y.base, *b.coord);
  return {CompactOpenSet::type_inf(k), CompactOpenSet::type1(interior_in(k, y.x()))};
}

inline bool verify_compact_separation(const CompactExtension& y, const ExtPoint& a, const ExtPoint& b,
                                      const CompactSeparation& w) {
  auto holds = [&](const CompactOpenSet& u, const ExtPoint& pt) {
    return pt.is_p() ? u.has_infinity() : u.trace_in(y.x()).contains(*pt.coord);
  };
  bool apart = !(w.u.has_infinity() && w.v.has_infinity()) && disjoint(w.u.trace_in(y.x()), w.v.trace_in(y.x()));
  return is_open_in_compactification(y, w.u) && is_open_in_compactification(y, w.v) && holds(w.u, a) &&
         holds(w.v, b) && apart;
}

/// Indices (ascending) of a finite subcover: the first TypeInf member, then a
/// greedy left-to-right sweep over each piece of its compact remainder,
/// always taking the member that reaches furthest.
inline std::vector<std::size_t> finite_subcover(const CompactExtension& y, const std::vector<CompactOpenSet>& cover) {
  for (const auto& u : cover)
    if (!is_open_in_compactification(y, u)) throw Error(ErrorCode::InvalidOpenSet, "cover member is not open");
  auto inf_member = std::find_if(cover.begin(), cover.end(), [](const CompactOpenSet& u) { return u.has_infinity(); });
  if (inf_member == cover.end()) throw Error(ErrorCode::NotACover, "no member contains the point at infinity");

  std::vector<std::size_t> chosen{static_cast<std::size_t>(inf_member - cover.begin())};
  std::vector<IntervalSet> traces;
  for (const auto& u : cover) traces.push_back(u.trace_in(y.x()));

  for (const auto& piece : inf_member->removed.pieces()) {
    detail::Cut pos = piece.lo_cut();
    while (pos < piece.hi_cut()) {
      std::optional<std::size_t> best;
      detail::Cut reach = pos;
      for (std::size_t i = 0; i < traces.size(); ++i) {
        for (const auto& p : traces[i].pieces()) {
          if (p.lo_cut() <= pos && pos < p.hi_cut() && reach < p.hi_cut()) {
            reach = p.hi_cut();
            best = i;
          }
        }
      }
      if (!best) throw Error(ErrorCode::NotACover, "nothing covers the remainder near " + piece.str());
      chosen.push_back(*best);
      pos = reach;
    }
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  return chosen;
}

/// Union of the traces equals X and some member holds ∞.
inline bool covers_compactification(const CompactExtension& y, const std::vector<CompactOpenSet>& sets) {
  IntervalSet all;
  bool infinity = false;
  for (const auto& u : sets) {
    all = unite(all, u.trace_in(y.x()));
    infinity = infinity || u.has_infinity();
  }
  return infinity && all == y.x();
}

}  // namespace onepoint

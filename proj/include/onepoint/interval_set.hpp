#pragma once

// Finite unions of intervals on the extended real line with exact rational
// endpoints, kept in a unique canonical form, plus the subspace topology
// operators (closure/interior relative to an ambient set).

#include <algorithm>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "onepoint/error.hpp"
#include "onepoint/rational.hpp"

namespace onepoint {

/// An interval end. Infinite ends are never included.
struct Endpoint {
  enum class Kind { NegInf, Finite, PosInf };

  Kind kind = Kind::Finite;
  Rational value;
  bool included = false;

  static Endpoint neg_inf() { return {Kind::NegInf, Rational(0), false}; }
  static Endpoint pos_inf() { return {Kind::PosInf, Rational(0), false}; }
  static Endpoint closed(Rational q) { return {Kind::Finite, std::move(q), true}; }
  static Endpoint open(Rational q) { return {Kind::Finite, std::move(q), false}; }

  bool finite() const { return kind == Kind::Finite; }

  friend bool operator==(const Endpoint& a, const Endpoint& b) {
    if (a.kind != b.kind) return false;
    return !a.finite() || (a.value == b.value && a.included == b.included);
  }
};

namespace detail {

// A Dedekind-style cut of the extended line: either an infinity, or a
// position just below (side = -1) or just above (side = +1) a rational.
// An interval is the open cut range (lo, hi); it is nonempty iff lo < hi.
struct Cut {
  int inf = 0;  // -1 = -inf, 0 = finite, +1 = +inf
  Rational value;
  int side = 0;

  friend std::strong_ordering operator<=>(const Cut& a, const Cut& b) {
    if (a.inf != b.inf) return a.inf <=> b.inf;
    if (a.inf != 0) return std::strong_ordering::equal;
    if (auto c = a.value <=> b.value; c != 0) return c;
    return a.side <=> b.side;
  }
  friend bool operator==(const Cut& a, const Cut& b) { return (a <=> b) == 0; }
};

inline Cut lower_cut(const Endpoint& e) {
  switch (e.kind) {
    case Endpoint::Kind::NegInf: return {-1, Rational(0), 0};
    case Endpoint::Kind::PosInf: return {+1, Rational(0), 0};
    case Endpoint::Kind::Finite: return {0, e.value, e.included ? -1 : +1};
  }
  return {};
}

inline Cut upper_cut(const Endpoint& e) {
  switch (e.kind) {
    case Endpoint::Kind::NegInf: return {-1, Rational(0), 0};
    case Endpoint::Kind::PosInf: return {+1, Rational(0), 0};
    case Endpoint::Kind::Finite: return {0, e.value, e.included ? +1 : -1};
  }
  return {};
}

inline Endpoint endpoint_from_lower(const Cut& c) {
  if (c.inf < 0) return Endpoint::neg_inf();
  if (c.inf > 0) return Endpoint::pos_inf();
  return c.side < 0 ? Endpoint::closed(c.value) : Endpoint::open(c.value);
}

inline Endpoint endpoint_from_upper(const Cut& c) {
  if (c.inf < 0) return Endpoint::neg_inf();
  if (c.inf > 0) return Endpoint::pos_inf();
  return c.side > 0 ? Endpoint::closed(c.value) : Endpoint::open(c.value);
}

inline Cut below(const Rational& q) { return {0, q, -1}; }
inline Cut above(const Rational& q) { return {0, q, +1}; }

}  // namespace detail

/// A nonempty interval. Construct through Interval::make, which rejects empty
/// or malformed forms.
class Interval {
 public:
  static Interval make(Endpoint lo, Endpoint hi) {
    if (lo.kind == Endpoint::Kind::PosInf || hi.kind == Endpoint::Kind::NegInf)
      throw Error(ErrorCode::MalformedInterval, "infinite end on the wrong side");
    if ((!lo.finite() && lo.included) || (!hi.finite() && hi.included))
      throw Error(ErrorCode::MalformedInterval, "infinite end cannot be included");
    Interval iv(detail::lower_cut(lo), detail::upper_cut(hi));
    if (!(iv.lo_ < iv.hi_)) throw Error(ErrorCode::MalformedInterval, "empty interval");
    return iv;
  }

  static Interval point(const Rational& q) { return Interval(detail::below(q), detail::above(q)); }
  static Interval open(const Rational& a, const Rational& b) { return make(Endpoint::open(a), Endpoint::open(b)); }
  static Interval closed(const Rational& a, const Rational& b) { return make(Endpoint::closed(a), Endpoint::closed(b)); }
  static Interval real_line() { return make(Endpoint::neg_inf(), Endpoint::pos_inf()); }

  Endpoint lo() const { return detail::endpoint_from_lower(lo_); }
  Endpoint hi() const { return detail::endpoint_from_upper(hi_); }

  bool contains(const Rational& q) const { return lo_ <= detail::below(q) && detail::above(q) <= hi_; }
  bool bounded() const { return lo_.inf == 0 && hi_.inf == 0; }
  bool degenerate() const { return bounded() && lo_.value == hi_.value; }

  friend bool operator==(const Interval& a, const Interval& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }

  std::string str() const {
    auto ep = [](const Endpoint& e) {
      if (e.kind == Endpoint::Kind::NegInf) return std::string("-inf");
      if (e.kind == Endpoint::Kind::PosInf) return std::string("inf");
      return e.value.str();
    };
    Endpoint l = lo(), h = hi();
    return std::string(l.included ? "[" : "(") + ep(l) + "," + ep(h) + (h.included ? "]" : ")");
  }

  const detail::Cut& lo_cut() const { return lo_; }
  const detail::Cut& hi_cut() const { return hi_; }

  /// Builds from cuts; returns nullopt when the cut range is empty.
  static std::optional<Interval> from_cuts(const detail::Cut& lo, const detail::Cut& hi) {
    if (!(lo < hi)) return std::nullopt;
    return Interval(lo, hi);
  }

 private:
  Interval(detail::Cut lo, detail::Cut hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

  detail::Cut lo_;
  detail::Cut hi_;
};

inline std::ostream& operator<<(std::ostream& os, const Interval& iv) { return os << iv.str(); }

/// Canonical finite union of disjoint, pairwise non-mergeable intervals,
/// sorted by lower end. Equality is structural and coincides with set
/// equality.
class IntervalSet {
 public:
  IntervalSet() = default;
  IntervalSet(const Interval& iv) : pieces_{iv} {}  // NOLINT: implicit by intent

  /// Canonical form of the union of `raw`.
  static IntervalSet normalize(std::vector<Interval> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Interval& a, const Interval& b) { return a.lo_cut() < b.lo_cut(); });
    IntervalSet out;
    for (auto& iv : raw) {
      if (!out.pieces_.empty() && iv.lo_cut() <= out.pieces_.back().hi_cut()) {
        auto& last = out.pieces_.back();
        if (last.hi_cut() < iv.hi_cut()) last = *Interval::from_cuts(last.lo_cut(), iv.hi_cut());
      } else {
        out.pieces_.push_back(std::move(iv));
      }
    }
    return out;
  }

  static IntervalSet real_line() { return IntervalSet(Interval::real_line()); }

  const std::vector<Interval>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  std::size_t size() const { return pieces_.size(); }

  bool contains(const Rational& q) const {
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), detail::below(q),
                               [](const detail::Cut& c, const Interval& iv) { return c < iv.lo_cut(); });
    if (it == pieces_.begin()) return false;
    return std::prev(it)->contains(q);
  }

  /// The piece containing q, if any.
  std::optional<Interval> piece_containing(const Rational& q) const {
    for (const auto& iv : pieces_)
      if (iv.contains(q)) return iv;
    return std::nullopt;
  }

  /// Complement in the real line.
  IntervalSet complement() const {
    IntervalSet out;
    detail::Cut prev{-1, Rational(0), 0};
    for (const auto& iv : pieces_) {
      if (auto gap = Interval::from_cuts(prev, iv.lo_cut())) out.pieces_.push_back(*gap);
      prev = iv.hi_cut();
    }
    if (auto gap = Interval::from_cuts(prev, detail::Cut{+1, Rational(0), 0})) out.pieces_.push_back(*gap);
    return out;
  }

  friend bool operator==(const IntervalSet& a, const IntervalSet& b) { return a.pieces_ == b.pieces_; }

  std::string str() const {
    if (pieces_.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      if (i) s += " U ";
      s += pieces_[i].str();
    }
    return s;
  }

 private:
  friend IntervalSet intersect(const IntervalSet&, const IntervalSet&);

  std::vector<Interval> pieces_;
};

inline std::ostream& operator<<(std::ostream& os, const IntervalSet& s) { return os << s.str(); }

inline IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> raw = a.pieces();
  raw.insert(raw.end(), b.pieces().begin(), b.pieces().end());
  return IntervalSet::normalize(std::move(raw));
}

inline IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  IntervalSet out;
  const auto& pa = a.pieces();
  const auto& pb = b.pieces();
  std::size_t i = 0, j = 0;
  while (i < pa.size() && j < pb.size()) {
    const auto& lo = std::max(pa[i].lo_cut(), pb[j].lo_cut());
    const auto& hi = std::min(pa[i].hi_cut(), pb[j].hi_cut());
    if (auto iv = Interval::from_cuts(lo, hi)) out.pieces_.push_back(*iv);
    if (pa[i].hi_cut() < pb[j].hi_cut()) ++i; else ++j;
  }
  // Pieces of canonical inputs never touch, so intersections are already canonical.
  return out;
}

inline IntervalSet difference(const IntervalSet& a, const IntervalSet& b) { return intersect(a, b.complement()); }

inline bool is_subset(const IntervalSet& a, const IntervalSet& b) { return difference(a, b).empty(); }

inline bool disjoint(const IntervalSet& a, const IntervalSet& b) { return intersect(a, b).empty(); }

/// Closure in the real line.
inline IntervalSet closure(const IntervalSet& s) {
  std::vector<Interval> raw;
  for (const auto& iv : s.pieces()) {
    auto lo = iv.lo_cut(), hi = iv.hi_cut();
    if (lo.inf == 0) lo.side = -1;
    if (hi.inf == 0) hi.side = +1;
    raw.push_back(*Interval::from_cuts(lo, hi));
  }
  return IntervalSet::normalize(std::move(raw));
}

/// Interior in the real line.
inline IntervalSet interior(const IntervalSet& s) {
  std::vector<Interval> raw;
  for (const auto& iv : s.pieces()) {
    auto lo = iv.lo_cut(), hi = iv.hi_cut();
    if (lo.inf == 0) lo.side = +1;
    if (hi.inf == 0) hi.side = -1;
    if (auto opened = Interval::from_cuts(lo, hi)) raw.push_back(*opened);
  }
  return IntervalSet::normalize(std::move(raw));
}

namespace detail {
inline void require_subset(const IntervalSet& s, const IntervalSet& x) {
  if (!is_subset(s, x)) throw Error(ErrorCode::NotASubset, s.str() + " is not contained in " + x.str());
}
}  // namespace detail

/// Closure of s in the subspace x: cl(s) ∩ x.
inline IntervalSet closure_in(const IntervalSet& s, const IntervalSet& x) {
  detail::require_subset(s, x);
  return intersect(closure(s), x);
}

/// Interior of s in the subspace x: x ∖ cl_x(x ∖ s).
inline IntervalSet interior_in(const IntervalSet& s, const IntervalSet& x) {
  detail::require_subset(s, x);
  return difference(x, closure_in(difference(x, s), x));
}

inline bool is_open_in(const IntervalSet& s, const IntervalSet& x) { return interior_in(s, x) == s; }
inline bool is_closed_in(const IntervalSet& s, const IntervalSet& x) { return closure_in(s, x) == s; }

// ---------------------------------------------------------------------------
// Text grammar:
//   SET      := INTERVAL (" U " INTERVAL)*  |  "{}"
//   INTERVAL := ("(" | "[") EP "," EP (")" | "]")
//   EP       := "-inf" | "inf" | INT | INT "/" POSINT

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline Endpoint parse_endpoint(std::string_view text, bool included) {
  text = trim(text);
  if (text == "-inf") {
    if (included) throw Error(ErrorCode::MalformedInterval, "-inf cannot be included");
    return Endpoint::neg_inf();
  }
  if (text == "inf" || text == "+inf") {
    if (included) throw Error(ErrorCode::MalformedInterval, "inf cannot be included");
    return Endpoint::pos_inf();
  }
  return {Endpoint::Kind::Finite, Rational::parse(text), included};
}

}  // namespace detail

inline Interval parse_interval(std::string_view text) {
  text = detail::trim(text);
  if (text.size() < 5) throw Error(ErrorCode::ParseError, "bad interval '" + std::string(text) + "'");
  char open = text.front(), close = text.back();
  if ((open != '(' && open != '[') || (close != ')' && close != ']'))
    throw Error(ErrorCode::ParseError, "bad interval brackets '" + std::string(text) + "'");
  std::string_view body = text.substr(1, text.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos)
    throw Error(ErrorCode::ParseError, "interval needs exactly one comma '" + std::string(text) + "'");
  Endpoint lo = detail::parse_endpoint(body.substr(0, comma), open == '[');
  Endpoint hi = detail::parse_endpoint(body.substr(comma + 1), close == ']');
  return Interval::make(lo, hi);
}

/// Parses the interval-set grammar; the result is canonical.
inline IntervalSet parse_set(std::string_view text) {
  text = detail::trim(text);
  if (text == "{}" || text == "empty") return {};
  std::vector<Interval> raw;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto sep = text.find('U', start);
    std::string_view part = text.substr(start, sep == std::string_view::npos ? std::string_view::npos : sep - start);
    raw.push_back(parse_interval(part));
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  return IntervalSet::normalize(std::move(raw));
}

}  // namespace onepoint
